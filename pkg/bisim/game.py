from collections import Counter, deque
from typing import Optional

from calculi.terms import Term, alpha_key, print_term
from pi.congruence import canonical_key
from utils import pp

from .calculus import Calculus
from .call_by_name import CallByName
from .call_by_value import CallByValue
from .checks import match_round
from .reports import GameReport

mode_mapping = {
    "cbn": CallByName,
    "cbv": CallByValue,
}


class BisimGame:
    """
    Plays the strong bisimulation game between a term and its encoding.

    Each round matches every term step against every distance step of the
    current process, then advances both sides along the matched pairs; the
    process side keeps the actual π successor rather than re-encoding the term.
    Branches of a non-deterministic strategy are all explored, with states
    memoized on the α-class of the term and the ≡-class of the process.
    """

    def __init__(self, calculus: Calculus, print_steps: bool = False, debug: bool = False):
        self.calculus = calculus
        self.print_steps = print_steps
        self.debug = debug

    def debug_print(self, *args):
        if self.debug:
            pp(*args)

    def run(self, t: Term, fuel: int) -> GameReport:
        parameter = self.calculus.parameter(t)
        start = self.calculus.encode(t, parameter)
        report = GameReport(mode=self.calculus.mode, term=print_term(t), fuel=fuel)
        term_counts: Counter = Counter()
        process_counts: Counter = Counter()

        seen = {(alpha_key(t), canonical_key(start))}
        queue = deque([(t, start, 0)])
        while queue:
            term, process, depth = queue.popleft()
            report.states += 1
            report.rounds = max(report.rounds, depth)
            result = match_round(self.calculus, term, process, parameter)
            self.debug_print(result.forward.to_dict(), result.backward.to_dict())
            if not result.ok:
                report.mismatches.extend(r for r in (result.forward, result.backward) if not r.ok)
                continue
            if result.pairs and depth >= fuel:
                report.exhausted = True
                continue
            for label, reduct, kind, successor in result.pairs:
                if self.print_steps:
                    print(f"round {depth + 1}: {label} ~ {kind}  {print_term(reduct)}")
                term_counts[label] += 1
                process_counts[kind] += 1
                key = (alpha_key(reduct), canonical_key(successor))
                if key not in seen:
                    seen.add(key)
                    queue.append((reduct, successor, depth + 1))

        report.term_counts = dict(term_counts)
        report.process_counts = dict(process_counts)
        return report


def bisim_game(
    t: Term, mode: str, fuel: int, print_steps: bool = False, debug: bool = False
) -> GameReport:
    game = BisimGame(mode_mapping[mode](), print_steps=print_steps, debug=debug)
    return game.run(t, fuel)
