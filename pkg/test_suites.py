import pytest

import utils
from calculi import UnknownSuiteError, parse_vterm
from pi import enumerate_pi_redexes, parse_process
from workbench import SUITES, Suite, SuiteBounds, enumerate_up_to, run_suite


@pytest.mark.parametrize(
    "name, bounds",
    [
        ("determinism", SuiteBounds(size=5)),
        ("diamond", SuiteBounds(size=5, fuel=6)),
        ("subterm", SuiteBounds(size=5, fuel=10)),
        ("v-subterm", SuiteBounds(size=5, fuel=6)),
        ("free-names", SuiteBounds(size=4)),
        ("harmony", SuiteBounds(count=15, proc_size=5, depth=1)),
        ("harmony-encoded", SuiteBounds(size=4, fuel=4, depth=1)),
        ("congr-oracle", SuiteBounds(count=15, proc_size=5, depth=2)),
        ("bisim-cbn", SuiteBounds(size=4, fuel=8)),
        ("bisim-cbv", SuiteBounds(size=4, fuel=8)),
    ],
)
def test_suites_pass(name, bounds):
    report = run_suite(name, bounds)
    assert report.ok, report.to_json()
    assert report.checked > 0
    assert report.counterexample is None


def test_quadratic_suite():
    report = run_suite("quadratic", SuiteBounds(fuel=10))
    assert report.ok
    assert report.checked == 1


def test_term_suites_walk_the_whole_enumeration():
    report = run_suite("determinism", SuiteBounds(size=5))
    assert report.checked == len(list(enumerate_up_to(5, "lsub", closed=True)))


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope")


def test_default_bounds_come_from_the_environment_defaults():
    bounds = SuiteBounds()
    assert bounds.fuel == utils.DEFAULT_FUEL
    assert bounds.size == utils.DEFAULT_SIZE
    assert bounds.strict == utils.DEFAULT_STRICT


def test_counterexample_is_minimized(monkeypatch):
    suite = Suite(
        "no-bang",
        "never a replicated communication",
        lambda b: [parse_process("new z. (x<@a> | !x(@b). y<@b>) | 0")],
        lambda p, b: not any(r.kind == "bang" for r in enumerate_pi_redexes(p)),
        "process",
    )
    monkeypatch.setitem(SUITES, suite.name, suite)
    report = run_suite("no-bang")
    assert not report.ok
    assert report.counterexample == "new z. (x<@a> | !x(@b). y<@b>) | 0"
    assert report.minimized == "x<@a> | !x(@b). 0"
    assert report.to_dict()["ok"] is False


def test_minimized_terms_stay_closed(monkeypatch):
    suite = Suite(
        "no-self-application",
        "never x x",
        lambda b: enumerate_up_to(b.size, "lsub", closed=True),
        lambda t, b: " x0 x0" not in str(t),
        "term",
    )
    monkeypatch.setitem(SUITES, suite.name, suite)
    report = run_suite("no-self-application", SuiteBounds(size=5))
    assert report.counterexample == r"\x0. x0 x0"
    assert report.minimized == r"\x0. x0 x0"


def test_domain_errors_count_as_failures(monkeypatch):
    suite = Suite("broken", "always raises", lambda b: [None], lambda _, b: bool(parse_vterm("(x y) z")))
    monkeypatch.setitem(SUITES, suite.name, suite)
    report = run_suite("broken")
    assert not report.ok
    assert report.counterexample == "-"
    assert "not a λ_vker term" in report.error
