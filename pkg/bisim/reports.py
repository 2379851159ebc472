from typing import Literal, Optional

from pydantic import BaseModel, computed_field

from calculi.reports import Report

from .calculus import KIND_OF


class StepMatch(BaseModel):
    """One step on one side and whether the other side answers it."""

    side: Literal["term", "process"]
    label: str
    expected_kind: str
    reduct: str
    matched: bool
    witness: Optional[str] = None
    # a congruent answer of the wrong kind
    wrong_kind: bool = False
    # diagnostics, filled on failure only
    expected: Optional[str] = None
    candidates: list[str] = []
    oracle: Optional[bool] = None


class SimulationReport(Report):
    direction: Literal["forward", "backward"]
    mode: str
    term: str
    process: str
    steps: list[StepMatch] = []
    # backward CBN only: every process successor is congruent to every other
    determinacy: Optional[bool] = None

    @computed_field
    @property
    def ok(self) -> bool:
        return (
            all(s.matched and not s.wrong_kind for s in self.steps)
            and self.determinacy is not False
        )


class GameReport(Report):
    mode: str
    term: str
    fuel: int
    rounds: int = 0
    states: int = 0
    term_counts: dict[str, int] = {}
    process_counts: dict[str, int] = {}
    exhausted: bool = False
    mismatches: list[SimulationReport] = []

    @computed_field
    @property
    def counts_agree(self) -> bool:
        """Term steps and π steps taken, tallied kind for kind."""
        expected: dict[str, int] = {}
        for label, n in self.term_counts.items():
            kind = KIND_OF.get(label, label)
            expected[kind] = expected.get(kind, 0) + n
        return expected == self.process_counts

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.mismatches and self.counts_agree
