import pytest

from calculi import PreconditionError, ShapeError, parse_term, parse_vterm, special, var
from pi import check_encoding_discipline, free_names, parse_process
from translations import (
    DEFAULT_CHANNEL,
    check_free_name_lemmas,
    encode_cbn,
    encode_cbv,
    encode_cbv_value,
)
from workbench import enumerate_up_to

x = var("x")


@pytest.mark.parametrize(
    "term, expected",
    [
        ("y", "y<@a>"),
        (r"\x. x", "@a(x,@b). x<@b>"),
        (r"(\x. x) y", "new @b. new z. (@b(x,@d). x<@d> | @b<z,@a> | !z(@c). y<@c>)"),
        ("x[x/y]", "new x. (x<@a> | !x(@b). y<@b>)"),
    ],
)
def test_encode_cbn(term, expected):
    p, _ = encode_cbn(parse_term(term), DEFAULT_CHANNEL)
    assert p == parse_process(expected)


def test_encode_cbn_renames_clashing_binders():
    p, _ = encode_cbn(parse_term(r"(\x. x) (\x. x)"))
    assert check_encoding_discipline(p)
    assert free_names(p) == {DEFAULT_CHANNEL}


def test_encode_cbn_needs_a_special_channel():
    with pytest.raises(PreconditionError):
        encode_cbn(parse_term("y"), var("a"))


@pytest.mark.parametrize(
    "term, expected",
    [
        ("y", "!x(@a). y<@a>"),
        (r"\y. y", "!x(@a). @a(y,u). !u(@c). y<@c>"),
        (r"(\y. y) z", "new @b. new w. (@b(y,u). !u(@c). y<@c> | @b<w,x> | !w(@d). z<@d>)"),
        ("y[y/z]", "new y. (!x(@a). y<@a> | !y(@c). z<@c>)"),
    ],
)
def test_encode_cbv(term, expected):
    p, _ = encode_cbv(parse_vterm(term), x)
    assert p == parse_process(expected)


def test_encode_cbv_value():
    p, _ = encode_cbv_value(parse_vterm(r"\y. y"), special("a"))
    assert p == parse_process("@a(y,u). !u(@c). y<@c>")
    with pytest.raises(PreconditionError):
        encode_cbv_value(parse_vterm("y z"), special("a"))


def test_encode_cbv_picks_a_fresh_parameter():
    t = parse_vterm(r"(\y. y) z")
    p, _ = encode_cbv(t)
    (param,) = free_names(p) - {var("z")}
    assert not param.is_special


@pytest.mark.parametrize(
    "term, parameter, error",
    [
        ("x y", x, PreconditionError),
        ("y", special("a"), PreconditionError),
        ("(y z) w", x, ShapeError),
    ],
)
def test_encode_cbv_preconditions(term, parameter, error):
    with pytest.raises(error):
        encode_cbv(parse_term(term), parameter)


def test_encodings_are_reproducible():
    t = parse_term(r"(\x. x x) (\y. y)")
    assert str(encode_cbn(t)[0]) == str(encode_cbn(t)[0])
    assert str(encode_cbv(t)[0]) == str(encode_cbv(t)[0])


def test_free_name_lemmas_on_small_open_terms():
    for t in enumerate_up_to(5, "lsub", closed=False):
        assert check_free_name_lemmas(t)
