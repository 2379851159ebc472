import pytest

from calculi import (
    CbvRedex,
    InvalidRedexError,
    ShapeError,
    cbv_step,
    cbv_trace,
    check_diamond,
    check_equal_lengths,
    check_v_subterm,
    enumerate_cbv_redexes,
    explore_cbv,
    parse_term,
    parse_vterm,
    step_all,
)
from calculi.context import HOLE
from workbench import enumerate_up_to

TWO_REDEXES = r"((\x. x) (y y))[y/z]"


def test_vdb_fires_on_any_argument():
    t = parse_vterm(r"(\x. x) (y z)")
    (redex,) = enumerate_cbv_redexes(t)
    assert redex.kind == "vdb"
    reduct, _ = cbv_step(t, redex)
    assert reduct == parse_term("x[x/y z]")


def test_vls_needs_a_value_under_substitutions():
    assert enumerate_cbv_redexes(parse_vterm("(x y)[x/z w]")) == []
    t = parse_vterm(r"(x y)[x/(\u. u)[w/z]]")
    (redex,) = enumerate_cbv_redexes(t)
    assert redex.kind == "vls"
    reduct, _ = cbv_step(t, redex)
    assert reduct == parse_term(r"((\v. v) y)[x/\u. u][w/z]")


@pytest.mark.parametrize(
    "text, expected",
    [
        (r"(x x)[x/x[x/\y. y]]", r"(x w)[w/x][x/\y. y]"),
        (r"(x z)[x/\w. x]", r"((\w. x) z)[u/\w. x]"),
        (r"(x z)[x/(\w. w)[x/y]]", r"((\w. w) z)[u/\w. w][x/y]"),
    ],
)
def test_vls_keeps_the_copy_out_of_its_own_substitution(text, expected):
    t = parse_vterm(text)
    (redex,) = enumerate_cbv_redexes(t)
    assert redex.kind == "vls"
    reduct, _ = cbv_step(t, redex)
    assert reduct == parse_term(expected)
    assert check_v_subterm(t, 6)


def test_two_redexes_and_a_single_normal_form():
    t = parse_vterm(TWO_REDEXES)
    assert sorted(r.kind for r in enumerate_cbv_redexes(t)) == ["vdb", "vls"]
    graph = cbv_trace(t, 10, policy="all")
    assert graph.normal_forms == [parse_term("x[x/z y][y/z]")]
    assert graph.path_lengths() == {2}
    assert graph.to_dict()["complete"]


def test_step_all_reaches_every_choice():
    t = parse_vterm(TWO_REDEXES)
    reducts = {reduct for _, reduct in step_all(t)}
    assert reducts == {parse_term("x[x/y y][y/z]"), parse_term(r"((\x. x) (z y))[y/z]")}


def test_leftmost_trace():
    trace = cbv_trace(parse_vterm(TWO_REDEXES), 10)
    assert len(trace) == 2
    assert trace.normal
    assert trace.final == parse_term("x[x/z y][y/z]")


def test_invalid_redex_is_rejected():
    t = parse_vterm("x y")
    with pytest.raises(InvalidRedexError):
        cbv_step(t, CbvRedex("vdb", HOLE))


def test_rejects_non_kernel_terms():
    with pytest.raises(ShapeError):
        cbv_trace(parse_term("(x y) z"), 5)


def test_exploration_cut_short_has_no_lengths():
    graph = explore_cbv(parse_vterm(r"(\x. x x) (\x. x x)"), 4)
    assert graph.frontier
    assert graph.path_lengths() is None
    assert check_equal_lengths(parse_vterm(r"(\x. x x) (\x. x x)"), 4)


@pytest.mark.parametrize(
    "text",
    [
        TWO_REDEXES,
        r"(\x. x) ((\y. y) z)",
        r"(x x)[x/\y. y]",
        r"(\f. f (f z)) (\y. y)",
    ],
)
def test_diamond_lengths_and_values(text):
    t = parse_vterm(text)
    assert check_diamond(t, 12)
    assert check_equal_lengths(t, 12)
    assert check_v_subterm(t, 12)


def test_properties_on_small_closed_kernel_terms():
    for t in enumerate_up_to(6, "vker", closed=True):
        assert check_diamond(t, 6)
        assert check_equal_lengths(t, 6)
        assert check_v_subterm(t, 6)
