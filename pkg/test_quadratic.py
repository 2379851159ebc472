import pytest

from calculi import parse_term
from workbench import (
    QuadraticReport,
    QuadraticRow,
    church,
    default_corpus,
    measure,
    omega_table,
    quadratic_experiment,
)
from workbench.quadratic import ADD, MULT


def test_church_numerals():
    assert parse_term(church(0)) == parse_term(r"\f. \x. x")
    assert parse_term(church(2)) == parse_term(r"\f. \x. f (f x)")


def test_measure_identity():
    row = measure(parse_term(r"(\x. x) y"), 10)
    assert (row.n, row.m, row.d, row.terminated) == (1, 2, 1, True)


@pytest.mark.parametrize("op", [ADD, MULT])
@pytest.mark.parametrize("i, j", [(0, 1), (2, 1), (2, 3)])
def test_db_steps_match_weak_head_steps(op, i, j):
    row = measure(parse_term(f"{op} {church(i)} {church(j)} f x"), 500)
    assert row.terminated
    assert row.d == row.n
    assert row.n <= row.m <= (row.n + 1) ** 2


def test_omega_table():
    rows = omega_table(5)
    assert [r.m for r in rows] == [1, 3, 6, 10, 15]
    assert [r.n for r in rows] == [1, 2, 3, 4, 5]
    ratios = [r.ratio for r in rows]
    assert ratios == sorted(set(ratios))


def test_experiment_passes_on_a_small_corpus():
    report = quadratic_experiment(default_corpus(1), fuel=200, prefixes=5)
    assert report.ok
    assert len(report.rows) == 10
    assert report.to_dict()["schema"] == 1


def test_csv_output():
    report = quadratic_experiment([parse_term(r"(\x. x) y")], fuel=10, prefixes=2)
    lines = report.to_csv().splitlines()
    assert lines[0] == "term,n,m,d,terminated"
    assert lines[1] == r"(\x. x) y,1,2,1,true"


def test_report_flags_a_bound_violation():
    report = QuadraticReport(
        fuel=1,
        rows=[
            QuadraticRow(term="t", n=1, m=9, d=1, terminated=True),
            QuadraticRow(term="u", n=0, m=99, d=5, terminated=False),
        ],
    )
    assert report.d_equals_n
    assert not report.m_within_bound
    assert not report.ok
