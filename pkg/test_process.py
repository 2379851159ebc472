import pytest
from hypothesis import given, settings, strategies as st

from calculi import ParseError, special, var
from pi import (
    InB,
    Nil,
    Nu,
    OutB,
    OutU,
    Par,
    RepIn,
    alpha_eq_process,
    check_encoding_discipline,
    free_names,
    par,
    parse_process,
    print_process,
    rename_free,
)
from pi.process import size
from workbench import random_process

x, y, z, w = var("x"), var("y"), var("z"), var("w")
a, b, c = special("a"), special("b"), special("c")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0", Nil()),
        ("x<@a>", OutU(x, a)),
        ("@a<x,@b>", OutB(a, x, b)),
        ("new y. y<@a>", Nu(y, OutU(y, a))),
        ("@a(y,@b). y<@b>", InB(a, y, b, OutU(y, b))),
        ("!x(@a). y<@a>", RepIn(x, a, OutU(y, a))),
        ("x<@a> | y<@b> | 0", Par(Par(OutU(x, a), OutU(y, b)), Nil())),
        ("x<@a> | (y<@b> | 0)", Par(OutU(x, a), Par(OutU(y, b), Nil()))),
        ("new y. (y<@a> | 0)", Nu(y, Par(OutU(y, a), Nil()))),
        ("new y. y<@a> | 0", Par(Nu(y, OutU(y, a)), Nil())),
    ],
)
def test_parse_process(text, expected):
    p = parse_process(text)
    assert p == expected
    assert parse_process(print_process(p)) == p


@pytest.mark.parametrize("text", ["x(y). 0", "!x(y,z). 0", "@a(y,y). 0", "x<", "x | y"])
def test_parse_process_errors(text):
    with pytest.raises(ParseError):
        parse_process(text)


def test_printer_parenthesizes_right_nested_par():
    p = Par(OutU(x, a), Par(OutU(y, b), Nil()))
    assert print_process(p) == "x<@a> | (y<@b> | 0)"
    assert print_process(par(OutU(x, a), OutU(y, b), Nil())) == "x<@a> | y<@b> | 0"


def test_alpha_equivalence():
    assert alpha_eq_process(parse_process("new y. y<@a>"), parse_process("new z. z<@a>"))
    assert not alpha_eq_process(parse_process("new y. y<@a>"), parse_process("new z. y<@a>"))
    assert parse_process("@a(y,@b). y<@b>") == parse_process("@a(z,@c). z<@c>")


def test_free_names():
    p = parse_process("new y. (y<@a> | !x(@b). w<@b>)")
    assert free_names(p) == {a, x, w}


def test_rename_free_is_simultaneous():
    p = parse_process("x<y>")
    q, _ = rename_free(p, {x: y, y: x})
    assert q == parse_process("y<x>")


def test_rename_free_avoids_capture():
    p = parse_process("new y. x<y>")
    q, _ = rename_free(p, {x: y})
    assert isinstance(q, Nu)
    assert q.binder != y
    assert free_names(q) == {y}


def test_encoding_discipline():
    assert check_encoding_discipline(parse_process("@a(x,@b). x<@b> | !x(@c). y<@c>"))
    assert not check_encoding_discipline(parse_process("x<y,z>"))
    assert not check_encoding_discipline(parse_process("!@a(x). 0"))


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=10_000))
def test_random_processes_print_and_parse_back(n, seed):
    p = random_process(n, seed)
    assert size(p) == n
    assert parse_process(print_process(p)) == p
