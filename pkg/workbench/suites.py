"""
Batch property runs. Each suite walks a deterministic stream of inputs,
stops at the first counterexample and minimizes it.
"""

import zlib
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional

from pydantic import BaseModel, computed_field

import utils
from bisim.game import bisim_game
from calculi.cbn import cbn_redex_count, check_projection, check_subterm_property
from calculi.cbv import check_diamond, check_equal_lengths, check_v_subterm
from calculi.errors import UnknownSuiteError, WorkbenchError
from calculi.reports import Report
from calculi.terms import Term, free_vars, is_vker, print_term
from pi.congruence import canonical_key, congruence_oracle, congruent
from pi.process import Process, print_process
from pi.reduction import check_congruence_bisimulation, harmony_check, pi_successors
from translations.cbn import encode_cbn
from translations.cbv import encode_cbv
from translations.lemmas import check_free_name_lemmas

from .generators import enumerate_up_to, random_congruent_variant, random_process
from .quadratic import quadratic_experiment
from .shrink import shrink_process, shrink_term


class SuiteBounds(BaseModel):
    size: int = utils.DEFAULT_SIZE
    fuel: int = utils.DEFAULT_FUEL
    seed: int = utils.DEFAULT_SEED
    count: int = utils.DEFAULT_COUNT
    depth: int = utils.DEFAULT_DEPTH
    proc_size: int = utils.DEFAULT_PROC_SIZE
    strict: bool = utils.DEFAULT_STRICT


class SuiteReport(Report):
    suite: str
    bounds: SuiteBounds
    checked: int = 0
    counterexample: Optional[str] = None
    minimized: Optional[str] = None
    error: Optional[str] = None

    @computed_field
    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    inputs: Callable[[SuiteBounds], Iterable[Any]]
    check: Callable[[Any, SuiteBounds], bool]
    # "term", "vterm", "open-term", "process" or None (not shrinkable)
    shape: Optional[str] = None


def _closed_terms(b: SuiteBounds) -> Iterable[Term]:
    return enumerate_up_to(b.size, "lsub", closed=True)


def _closed_vterms(b: SuiteBounds) -> Iterable[Term]:
    return enumerate_up_to(b.size, "vker", closed=True)


def _processes(b: SuiteBounds) -> Iterable[Process]:
    for i in range(b.count):
        yield random_process(1 + i % b.proc_size, b.seed + i)


def _variant_seed(p: Process, b: SuiteBounds) -> int:
    return b.seed + zlib.crc32(print_process(p).encode())


def _harmony(p: Process, b: SuiteBounds) -> bool:
    if not harmony_check(p, b.depth, b.strict).ok:
        return False
    q = random_congruent_variant(p, b.depth, _variant_seed(p, b))
    return check_congruence_bisimulation(p, q, b.strict)


def _reached_processes(t: Term, b: SuiteBounds) -> Iterator[Process]:
    """Encodings of t and their distance reducts, breadth first up to `b.fuel` steps."""
    starts = [encode_cbn(t)[0]]
    if is_vker(t):
        starts.append(encode_cbv(t)[0])
    for start in starts:
        seen = {canonical_key(start)}
        frontier, depth = [start], 0
        while frontier:
            yield from frontier
            if depth == b.fuel:
                break
            reached = []
            for p in frontier:
                for _, q in pi_successors(p, strict=b.strict):
                    key = canonical_key(q)
                    if key not in seen:
                        seen.add(key)
                        reached.append(q)
            frontier, depth = reached, depth + 1


def _harmony_encoded(t: Term, b: SuiteBounds) -> bool:
    return all(harmony_check(p, b.depth, b.strict).ok for p in _reached_processes(t, b))


def _congruence_oracle(p: Process, b: SuiteBounds) -> bool:
    seed = _variant_seed(p, b)
    q = random_congruent_variant(p, b.depth, seed)
    if not (congruent(p, q) and congruence_oracle(p, q, b.depth)):
        return False
    other = random_process(1 + seed % b.proc_size, seed)
    # the oracle is sound: whatever it connects must be congruent
    return congruent(p, other) or not congruence_oracle(p, other, b.depth)


def _quadratic(_: Any, b: SuiteBounds) -> bool:
    return quadratic_experiment(fuel=max(b.fuel, 500)).ok


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite(
            "determinism",
            "at most one ⊸ redex in every closed λ_lsub term",
            _closed_terms,
            lambda t, b: cbn_redex_count(t) <= 1,
            "term",
        ),
        Suite(
            "diamond",
            "⊸v is diamond and all maximal runs have one length",
            _closed_vterms,
            lambda t, b: check_diamond(t, b.fuel) and check_equal_lengths(t, b.fuel),
            "vterm",
        ),
        Suite(
            "subterm",
            "⊸ copies subterms of the start term and projects on weak head β",
            _closed_terms,
            lambda t, b: check_subterm_property(t, b.fuel) and check_projection(t, b.fuel),
            "term",
        ),
        Suite(
            "v-subterm",
            "⊸v only ever carries values of the start term",
            _closed_vterms,
            lambda t, b: check_v_subterm(t, b.fuel),
            "vterm",
        ),
        Suite(
            "free-names",
            "free names of both encodings",
            lambda b: enumerate_up_to(b.size, "lsub", closed=False),
            lambda t, b: check_free_name_lemmas(t),
            "open-term",
        ),
        Suite(
            "harmony",
            "distance steps agree with classic steps modulo ≡; ≡ is a bisimulation",
            _processes,
            _harmony,
            "process",
        ),
        Suite(
            "harmony-encoded",
            "harmony on both encodings of closed terms and on their distance reducts",
            _closed_terms,
            _harmony_encoded,
            "term",
        ),
        Suite(
            "congr-oracle",
            "canonical forms agree with the bounded rewrite search",
            _processes,
            _congruence_oracle,
            "process",
        ),
        Suite(
            "bisim-cbn",
            "CBN translation is a strong bisimulation",
            _closed_terms,
            lambda t, b: bisim_game(t, "cbn", b.fuel).ok,
            "term",
        ),
        Suite(
            "bisim-cbv",
            "CBV translation is a strong bisimulation",
            _closed_vterms,
            lambda t, b: bisim_game(t, "cbv", b.fuel).ok,
            "vterm",
        ),
        Suite(
            "quadratic",
            "⊸ is at most quadratically longer than weak head β",
            lambda b: [None],
            _quadratic,
        ),
    ]
}


def _admissible(shape: str, x: Any) -> bool:
    if shape in ("process", "open-term"):
        return True
    if free_vars(x):
        return False
    return shape == "term" or is_vker(x)


def _show(x: Any) -> str:
    if x is None:
        return "-"
    if isinstance(x, Process.__args__):
        return print_process(x)
    return print_term(x)


def run_suite(name: str, bounds: Optional[SuiteBounds] = None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite '{name}', expected one of: {', '.join(SUITES)}")
    suite = SUITES[name]
    bounds = bounds or SuiteBounds()
    report = SuiteReport(suite=name, bounds=bounds)

    def fails(x: Any) -> bool:
        try:
            return not suite.check(x, bounds)
        except WorkbenchError:
            return True

    for item in suite.inputs(bounds):
        report.checked += 1
        try:
            passed = suite.check(item, bounds)
        except WorkbenchError as e:
            passed, report.error = False, str(e)
        if passed:
            continue
        report.counterexample = _show(item)
        if suite.shape == "process":
            item = shrink_process(item, fails)
        elif suite.shape is not None:
            item = shrink_term(item, lambda t: _admissible(suite.shape, t) and fails(t))
        report.minimized = _show(item)
        break
    return report
