from typing import Optional

from calculi.cbn import cbn_step
from calculi.names import Name, Supply
from calculi.parser import parse_term
from calculi.terms import Term
from pi.process import Process
from translations.cbn import DEFAULT_CHANNEL, encode_cbn


class CallByName:
    """Linear weak head reduction on λ_lsub against the CBN translation."""

    def __init__(self, channel: Name = DEFAULT_CHANNEL):
        self.channel = channel

    @property
    def mode(self):
        return "cbn"

    def parse(self, text: str) -> Term:
        return parse_term(text)

    def steps(self, t: Term) -> list[tuple[str, Term]]:
        step = cbn_step(t)
        return [] if step is None else [(step.label, step.term)]

    def parameter(self, t: Term) -> Name:
        return self.channel

    def encode(self, t: Term, parameter: Name, supply: Optional[Supply] = None) -> Process:
        return encode_cbn(t, parameter, supply)[0]
