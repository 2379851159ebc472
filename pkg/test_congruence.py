import pytest
from hypothesis import given, settings, strategies as st

from calculi import PreconditionError, special, var
from calculi.context import HOLE
from pi import (
    NIL,
    Nu,
    NuBody,
    Par,
    ParRight,
    canonical_print,
    canonicalize,
    congruence_ball,
    congruence_oracle,
    congruent,
    derived_rule_checks,
    free_names,
    parse_process,
    rewrites,
    split_canonical,
)
from workbench import random_congruent_variant, random_process


@pytest.mark.parametrize(
    "left, right",
    [
        ("x<@a> | 0", "x<@a>"),
        ("new y. x<y>", "new z. x<z>"),
        ("new y. 0", "0"),
        ("x<@a> | y<@b>", "y<@b> | x<@a>"),
        ("(x<@a> | y<@b>) | z<@c>", "x<@a> | (y<@b> | z<@c>)"),
        ("new y. new w. y<w>", "new w. new y. y<w>"),
        ("x<@a> | new y. y<x>", "new y. (x<@a> | y<x>)"),
        ("new y. (y<@a> | 0) | 0", "new w. w<@a>"),
        ("new y. (x<y> | y<@a>)", "new w. (w<@a> | x<w>)"),
    ],
)
def test_congruent(left, right):
    p, q = parse_process(left), parse_process(right)
    assert congruent(p, q)
    assert canonical_print(p) == canonical_print(q)


@pytest.mark.parametrize(
    "left, right",
    [
        ("x<@a>", "y<@a>"),
        ("x<@a> | x<@a>", "x<@a>"),
        ("y<@a> | new y. y<x>", "new y. (y<@a> | y<x>)"),
        ("new y. (x<y> | y<@a>)", "new y. new w. (x<y> | w<@a>)"),
        # no rule applies under a prefix
        ("!x(@b). (y<@b> | 0)", "!x(@b). y<@b>"),
        ("@a(y,@b). new z. y<@b>", "@a(y,@b). y<@b>"),
    ],
)
def test_not_congruent(left, right):
    assert not congruent(parse_process(left), parse_process(right))


def test_bound_names_are_told_apart_by_their_use():
    p = parse_process("new y. new w. (x<y> | x<w> | y<@a>)")
    q = parse_process("new y. new w. (x<w> | x<y> | w<@a>)")
    r = parse_process("new y. new w. (x<y> | x<w> | x<@a>)")
    assert congruent(p, q)
    assert not congruent(p, r)


def test_canonical_form_is_a_nu_block_over_components():
    p = parse_process("(x<@a> | new y. y<x>) | (0 | new w. w<@b>)")
    binders, comps = split_canonical(canonicalize(p))
    assert len(binders) == 2
    assert len(comps) == 3
    assert congruent(canonicalize(p), p)


def test_unused_restrictions_are_dropped():
    binders, comps = split_canonical(canonicalize(parse_process("new y. new w. x<y>")))
    assert len(binders) == 1
    assert len(comps) == 1


def test_rewrites_of_nil():
    rules = dict(rewrites(NIL))
    assert rules["par-unit-intro"] == Par(NIL, NIL)
    assert rules["nu-nil-intro"] == Nu(var("z"), NIL)
    assert rewrites(NIL, grow=False) == []


def test_extrusion_renames_a_clashing_binder():
    p = parse_process("y<@a> | new y. y<x>")
    (extruded,) = [q for rule, q in rewrites(p) if rule == "extrude"]
    assert congruent(extruded, p)
    assert free_names(extruded) == {var("y"), var("x"), special("a")}


def test_congruence_ball_keeps_the_start():
    p = parse_process("x<@a> | y<@b>")
    ball = congruence_ball(p, 1, grow=False)
    assert p in ball.values()
    assert parse_process("y<@b> | x<@a>") in ball.values()


@pytest.mark.parametrize(
    "left, right, depth, expected",
    [
        ("x<@a> | 0", "x<@a>", 1, True),
        ("x<@a> | y<@b>", "y<@b> | x<@a>", 1, True),
        ("x<@a>", "x<@a>", 0, True),
        ("x<@a>", "y<@a>", 3, False),
        ("(x<@a> | y<@b>) | z<@c>", "z<@c> | (y<@b> | x<@a>)", 0, False),
    ],
)
def test_congruence_oracle(left, right, depth, expected):
    assert congruence_oracle(parse_process(left), parse_process(right), depth) is expected


def test_oracle_rejects_negative_depth():
    with pytest.raises(PreconditionError):
        congruence_oracle(NIL, NIL, -1)


def test_derived_rules_all_apply():
    context = HOLE.extend(NuBody(var("y")))
    report = derived_rule_checks(
        parse_process("x<@b>"), context, var("w"), filler=parse_process("y<@a>")
    )
    assert (report.merge_par, report.drop_nu, report.push_nu) == (True, True, True)
    assert report.ok


def test_derived_rules_with_a_failing_side_condition():
    context = HOLE.extend(ParRight(parse_process("y<@b>")))
    report = derived_rule_checks(parse_process("x<@a>"), context, var("x"))
    assert report.merge_par is True
    assert report.drop_nu is None
    assert report.push_nu is True
    assert report.to_dict()["schema"] == 1


def test_derived_rules_need_one_side_condition():
    context = HOLE.extend(NuBody(var("x")))
    with pytest.raises(PreconditionError):
        derived_rule_checks(parse_process("x<@a>"), context, var("x"))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=10_000),
    st.integers(min_value=0, max_value=4),
)
def test_random_variants_are_congruent_and_reachable(n, seed, steps):
    p = random_process(n, seed)
    variant = random_congruent_variant(p, steps, seed)
    assert congruent(p, variant)
    assert congruence_oracle(p, variant, steps)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=10_000))
def test_every_rewrite_is_congruent(n, seed):
    p = random_process(n, seed)
    for _, q in rewrites(p):
        assert congruent(p, q)
