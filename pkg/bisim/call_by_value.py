from typing import Optional

from calculi.cbv import step_all
from calculi.names import Name, Supply
from calculi.parser import parse_vterm
from calculi.terms import Term, names
from pi.process import Process
from translations.cbv import encode_cbv


class CallByValue:
    """Linear weak applicative reduction on λ_vker against the CBV translation."""

    @property
    def mode(self):
        return "cbv"

    def parse(self, text: str) -> Term:
        return parse_vterm(text)

    def steps(self, t: Term) -> list[tuple[str, Term]]:
        return [(redex.kind, reduct) for redex, reduct in step_all(t)]

    def parameter(self, t: Term) -> Name:
        # reducts never gain free variables, so one parameter serves a whole run
        x, _ = Supply().fresh_variable(names(t))
        return x

    def encode(self, t: Term, parameter: Name, supply: Optional[Supply] = None) -> Process:
        return encode_cbv(t, parameter, supply)[0]
