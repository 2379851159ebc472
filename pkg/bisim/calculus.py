from typing import Literal, Optional, Protocol

from calculi.names import Name, Supply
from calculi.terms import Term
from pi.process import Process

# term step label -> process step kind
KIND_OF = {"db": "tensor", "ls": "bang", "vdb": "tensor", "vls": "bang"}


class Calculus(Protocol):
    """Defines the 'shape' (a strategy plus its encoding) the bisimulation checks expect."""

    @property
    def mode(self) -> Literal["cbn", "cbv"]: ...

    def parse(self, text: str) -> Term: ...

    def steps(self, t: Term) -> list[tuple[str, Term]]: ...

    def parameter(self, t: Term) -> Name: ...

    def encode(self, t: Term, parameter: Name, supply: Optional[Supply] = None) -> Process: ...
