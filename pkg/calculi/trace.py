from collections import Counter
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class TraceStep:
    label: str
    state: Any


@dataclass
class Trace:
    """A run of some strategy: the start state and every labelled step taken."""

    start: Any
    steps: list[TraceStep] = field(default_factory=list)
    normal: bool = False

    @property
    def final(self) -> Any:
        return self.steps[-1].state if self.steps else self.start

    @property
    def labels(self) -> list[str]:
        return [s.label for s in self.steps]

    def counts(self) -> Counter:
        return Counter(self.labels)

    def states(self) -> list[Any]:
        return [self.start] + [s.state for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> dict:
        return {
            "start": str(self.start),
            "steps": [{"label": s.label, "state": str(s.state)} for s in self.steps],
            "normal": self.normal,
            "length": len(self.steps),
        }
