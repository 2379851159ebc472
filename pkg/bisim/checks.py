"""
Step matching between a strategy on terms and distance reduction on their
encodings. A term step labelled L matches a process step of kind KIND_OF[L]
whose result is structurally congruent to the encoding of the term reduct.
"""

from dataclasses import dataclass, field
from typing import Optional

from calculi.names import Name, Supply
from calculi.terms import Term, print_term
from pi.congruence import canonical_key, canonical_print, congruence_oracle
from pi.process import Process, print_process
from pi.reduction import PiRedex, pi_successors
from translations.cbn import DEFAULT_CHANNEL

from .calculus import KIND_OF, Calculus
from .call_by_name import CallByName
from .call_by_value import CallByValue
from .reports import SimulationReport, StepMatch

ORACLE_DEPTH = 4


@dataclass
class RoundResult:
    forward: SimulationReport
    backward: SimulationReport
    # (term label, term reduct, kind of the π redex fired, process successor)
    # for every process step congruent to the term reduct
    pairs: list[tuple[str, Term, str, Process]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.forward.ok and self.backward.ok


def _diagnose(match: StepMatch, expected: Process, candidates: list[Process]) -> None:
    match.expected = canonical_print(expected)
    match.candidates = [canonical_print(c) for c in candidates]
    if candidates:
        match.oracle = congruence_oracle(candidates[0], expected, ORACLE_DEPTH)


def match_round(
    calculus: Calculus,
    t: Term,
    p: Process,
    parameter: Name,
    supply: Optional[Supply] = None,
    diagnose: bool = True,
) -> RoundResult:
    term_steps = calculus.steps(t)
    targets = [calculus.encode(s, parameter, supply) for _, s in term_steps]
    target_keys = [canonical_key(q) for q in targets]
    proc_steps: list[tuple[PiRedex, Process]] = pi_successors(p, supply)
    proc_keys = [canonical_key(q) for _, q in proc_steps]

    common = dict(mode=calculus.mode, term=print_term(t), process=print_process(p))
    forward = SimulationReport(direction="forward", **common)
    backward = SimulationReport(direction="backward", **common)
    result = RoundResult(forward, backward)

    for i, (label, s) in enumerate(term_steps):
        kind = KIND_OF[label]
        hits = [j for j, (r, _) in enumerate(proc_steps) if proc_keys[j] == target_keys[i]]
        same_kind = [j for j in hits if proc_steps[j][0].kind == kind]
        match = StepMatch(
            side="term",
            label=label,
            expected_kind=kind,
            reduct=print_term(s),
            matched=bool(same_kind),
            wrong_kind=len(same_kind) < len(hits),
        )
        if same_kind:
            match.witness = proc_steps[same_kind[0]][0].describe()
        elif diagnose:
            _diagnose(match, targets[i], [q for r, q in proc_steps if r.kind == kind])
        forward.steps.append(match)
        result.pairs.extend((label, s, proc_steps[j][0].kind, proc_steps[j][1]) for j in hits)

    for j, (redex, q) in enumerate(proc_steps):
        hits = [i for i in range(len(term_steps)) if target_keys[i] == proc_keys[j]]
        same_kind = [i for i in hits if KIND_OF[term_steps[i][0]] == redex.kind]
        match = StepMatch(
            side="process",
            label=redex.kind,
            expected_kind=redex.kind,
            reduct=print_process(q),
            matched=bool(same_kind),
            wrong_kind=len(same_kind) < len(hits),
        )
        if same_kind:
            match.witness = term_steps[same_kind[0]][0]
        elif diagnose:
            _diagnose(
                match,
                q,
                [targets[i] for i, (label, _) in enumerate(term_steps) if KIND_OF[label] == redex.kind],
            )
        backward.steps.append(match)

    if calculus.mode == "cbn":
        backward.determinacy = len(set(proc_keys)) <= 1
    return result


def _check(calculus: Calculus, t: Term, parameter: Name, supply: Optional[Supply]) -> RoundResult:
    return match_round(calculus, t, calculus.encode(t, parameter, supply), parameter, supply)


def forward_cbn(t: Term, a: Name = DEFAULT_CHANNEL, supply: Optional[Supply] = None) -> SimulationReport:
    return _check(CallByName(a), t, a, supply).forward


def backward_cbn(t: Term, a: Name = DEFAULT_CHANNEL, supply: Optional[Supply] = None) -> SimulationReport:
    return _check(CallByName(a), t, a, supply).backward


def forward_cbv(t: Term, x: Optional[Name] = None, supply: Optional[Supply] = None) -> SimulationReport:
    calculus = CallByValue()
    return _check(calculus, t, x or calculus.parameter(t), supply).forward


def backward_cbv(t: Term, x: Optional[Name] = None, supply: Optional[Supply] = None) -> SimulationReport:
    calculus = CallByValue()
    return _check(calculus, t, x or calculus.parameter(t), supply).backward
