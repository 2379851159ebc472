"""
Length of ⊸ against weak head β-reduction.

For every corpus term t: n weak head steps on unfold(t), m ⊸ steps on t, d of
which are db steps. Terminating rows are checked against d = n, n ≤ m and
m ≤ (n+1)². Ω is tabulated separately: m(k) counts ⊸ steps up to the k-th db.
"""

import csv
import io
from typing import Optional

from pydantic import BaseModel, computed_field

from calculi.cbn import cbn_trace, whr_trace
from calculi.parser import parse_term
from calculi.reports import Report
from calculi.terms import Term, print_term, unfold

ADD = r"(\m.\n.\f.\x.m f (n f x))"
MULT = r"(\m.\n.\f.m (n f))"
OMEGA = r"(\x.x x) (\x.x x)"


def church(k: int) -> str:
    body = "x"
    for _ in range(k):
        body = f"f ({body})"
    return rf"(\f.\x.{body})"


def default_corpus(limit: int = 3) -> list[Term]:
    """Church arithmetic applied to free observers f and x, plus two tiny cases."""
    corpus = [parse_term(r"(\x.x) y"), parse_term(r"\x.x")]
    for i in range(limit + 1):
        for j in range(limit + 1):
            corpus.append(parse_term(f"{ADD} {church(i)} {church(j)} f x"))
            corpus.append(parse_term(f"{MULT} {church(i)} {church(j)} f x"))
    return corpus


class QuadraticRow(BaseModel):
    term: str
    n: int
    m: int
    d: int
    terminated: bool


class OmegaRow(BaseModel):
    k: int
    n: int
    m: int

    @computed_field
    @property
    def ratio(self) -> float:
        return self.m / self.n


class QuadraticReport(Report):
    fuel: int
    rows: list[QuadraticRow] = []
    omega: list[OmegaRow] = []

    def _terminated(self) -> list[QuadraticRow]:
        return [r for r in self.rows if r.terminated]

    @computed_field
    @property
    def d_equals_n(self) -> bool:
        return all(r.d == r.n for r in self._terminated())

    @computed_field
    @property
    def n_at_most_m(self) -> bool:
        return all(r.n <= r.m for r in self._terminated())

    @computed_field
    @property
    def m_within_bound(self) -> bool:
        return all(r.m <= (r.n + 1) ** 2 for r in self._terminated())

    @computed_field
    @property
    def omega_superlinear(self) -> bool:
        ratios = [r.ratio for r in self.omega]
        return all(a < b for a, b in zip(ratios, ratios[1:]))

    @computed_field
    @property
    def ok(self) -> bool:
        return self.d_equals_n and self.n_at_most_m and self.m_within_bound and self.omega_superlinear

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["term", "n", "m", "d", "terminated"])
        for r in self.rows:
            writer.writerow([r.term, r.n, r.m, r.d, str(r.terminated).lower()])
        return out.getvalue()


def measure(t: Term, fuel: int) -> QuadraticRow:
    lsc = cbn_trace(t, fuel)
    whr = whr_trace(unfold(t), fuel)
    return QuadraticRow(
        term=print_term(t),
        n=len(whr),
        m=len(lsc),
        d=lsc.counts()["db"],
        terminated=lsc.normal and whr.normal,
    )


def omega_table(prefixes: int) -> list[OmegaRow]:
    trace = cbn_trace(parse_term(OMEGA), (prefixes + 1) ** 2)
    rows = []
    for m, label in enumerate(trace.labels, start=1):
        if label == "db":
            rows.append(OmegaRow(k=len(rows) + 1, n=len(rows) + 1, m=m))
            if len(rows) == prefixes:
                break
    return rows


def quadratic_experiment(
    corpus: Optional[list[Term]] = None, fuel: int = 500, prefixes: int = 12
) -> QuadraticReport:
    corpus = default_corpus() if corpus is None else corpus
    return QuadraticReport(
        fuel=fuel,
        rows=[measure(t, fuel) for t in corpus],
        omega=omega_table(prefixes),
    )
