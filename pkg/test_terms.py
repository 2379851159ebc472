import pytest
from hypothesis import given, settings, strategies as st

from calculi import (
    App,
    Lam,
    ParseError,
    ShapeError,
    Sub,
    Supply,
    Var,
    alpha_eq,
    alpha_key,
    canonical_print,
    free_vars,
    fresh_copy,
    meta_subst,
    names,
    parse_term,
    parse_vterm,
    print_term,
    special,
    uniquify_binders,
    unfold,
    var,
    vapp,
)
from calculi.terms import size, subterms
from workbench import enumerate_up_to, random_term

x, y, z, w = var("x"), var("y"), var("z"), var("w")


def binders(t):
    return [u.binder for u in subterms(t) if isinstance(u, (Lam, Sub))]


@pytest.mark.parametrize(
    "text, expected",
    [
        (r"\x. x", Lam(x, Var(x))),
        ("x[x/y]", Sub(Var(x), x, Var(y))),
        ("x y z", App(App(Var(x), Var(y)), Var(z))),
        (r"(\x. x) y", App(Lam(x, Var(x)), Var(y))),
        ("x[x/y][z/w]", Sub(Sub(Var(x), x, Var(y)), z, Var(w))),
        (r"\x. x y", Lam(x, App(Var(x), Var(y)))),
    ],
)
def test_parse_term(text, expected):
    assert parse_term(text) == expected


def test_parse_vterm_rejects_non_value_function():
    with pytest.raises(ShapeError):
        parse_vterm("(x y) z")
    assert parse_vterm(r"(\x. x) (y z)") == App(Lam(x, Var(x)), App(Var(y), Var(z)))


@pytest.mark.parametrize("text", [r"\x.", "x [x/]", "(x", "X"])
def test_parse_errors_carry_a_position(text):
    with pytest.raises(ParseError) as info:
        parse_term(text)
    assert info.value.position >= 0


@pytest.mark.parametrize(
    "t, expected",
    [
        (Var(x), {x}),
        (Lam(x, Var(x)), set()),
        (Sub(Var(x), x, Var(y)), {y}),
        (parse_term(r"(\x. x z)[z/y] x"), {x, y}),
    ],
)
def test_free_vars(t, expected):
    assert free_vars(t) == expected


@pytest.mark.parametrize(
    "a, b, equal",
    [
        (r"\x. x", r"\y. y", True),
        ("x", "y", False),
        ("x[x/z]", "y[y/z]", True),
        (r"\x. \y. x", r"\y. \x. y", True),
        (r"\x. \y. x", r"\x. \y. y", False),
    ],
)
def test_alpha_eq(a, b, equal):
    assert alpha_eq(parse_term(a), parse_term(b)) is equal


def test_alpha_key_keeps_named_free_variables():
    a, b = parse_term("x y"), parse_term("x z")
    assert alpha_key(a, free_insensitive=True) == alpha_key(b, free_insensitive=True)
    assert alpha_key(a, free_insensitive=True, keep={y}) != alpha_key(
        b, free_insensitive=True, keep={y}
    )
    assert alpha_key(parse_term("x x"), free_insensitive=True) != alpha_key(
        a, free_insensitive=True
    )


def test_names_of_different_kinds_never_clash():
    assert var("a") != special("a")
    assert str(special("a")) == "@a"


def test_meta_subst():
    assert meta_subst(Var(x), x, Var(y)) == Var(y)
    assert meta_subst(Lam(x, Var(x)), x, Var(z)) == Lam(x, Var(x))

    captured = meta_subst(Lam(y, Var(x)), x, Var(y))
    assert isinstance(captured, Lam)
    assert captured.binder != y
    assert captured.body == Var(y)


def test_meta_subst_respects_alpha():
    s = parse_term("y z")
    a = meta_subst(parse_term(r"\y. x y"), x, s)
    b = meta_subst(parse_term(r"\w. x w"), x, s)
    assert a == b
    assert free_vars(a) == {y, z}


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x[x/y]", "y"),
        (r"(\x. x) y", r"(\x. x) y"),
        ("(x x)[x/y]", "y y"),
        (r"(\y. x)[x/y]", r"\z. y"),
    ],
)
def test_unfold(text, expected):
    assert unfold(parse_term(text)) == parse_term(expected)


def test_supply_is_reproducible_and_avoids():
    n1, s1 = Supply().fresh_variable()
    n2, _ = Supply().fresh_variable()
    assert n1 == n2 == var("z1")
    assert s1.fresh_variable()[0] == var("z2")
    assert Supply().fresh_variable({var("z1")})[0] == var("z2")
    assert Supply().fresh_special()[0] == special("b1")


def test_uniquify_binders():
    t = parse_term(r"(\x. x) (\x. x) x")
    u, _ = uniquify_binders(t)
    bs = binders(u)
    assert u == t
    assert len(set(bs)) == len(bs)
    assert not set(bs) & free_vars(u)


def test_fresh_copy_renames_every_binder():
    t = parse_term(r"\x. (\y. x y)[z/x]")
    copy, _ = fresh_copy(t, names(t), Supply())
    assert copy == t
    assert not set(binders(copy)) & names(t)


def test_vapp():
    assert vapp(Var(x), Var(y)) == App(Var(x), Var(y))
    with pytest.raises(ShapeError):
        vapp(App(Var(x), Var(y)), Var(z))


def test_canonical_print_names_binders_by_level():
    assert canonical_print(parse_term(r"\x. x")) == canonical_print(parse_term(r"\y. y"))
    assert canonical_print(parse_term(r"\a. \b. a")) == r"\v0. \v1. v0"


def test_print_parse_round_trip_on_enumerated_terms():
    for t in enumerate_up_to(6, "lsub", closed=False):
        assert parse_term(print_term(t)) == t


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=20), st.integers(min_value=0, max_value=10_000))
def test_unfold_never_adds_free_variables(n, seed):
    t = random_term(n, seed, "lsub", closed=False)
    assert size(t) == n
    assert free_vars(unfold(t)) <= free_vars(t)
    assert parse_term(print_term(t)) == t
