from dataclasses import dataclass
from typing import Any, Optional, Protocol

from .names import Name


class Frame(Protocol):
    """One step of a one-hole context: the node above the hole, minus the hole."""

    @property
    def binder(self) -> Optional[Name]: ...

    def plug(self, child: Any) -> Any: ...

    def select(self, node: Any) -> Any: ...


@dataclass(frozen=True)
class ContextPath:
    """
    A one-hole context, outermost frame first. Frames keep their sibling
    subtrees, so `plug` rebuilds the whole tree around a new filler.
    """

    steps: tuple = ()

    @property
    def captured(self) -> frozenset[Name]:
        return frozenset(f.binder for f in self.steps if f.binder is not None)

    def extend(self, frame: Frame) -> "ContextPath":
        return ContextPath(self.steps + (frame,))

    def plug(self, filler: Any) -> Any:
        for frame in reversed(self.steps):
            filler = frame.plug(filler)
        return filler

    def replay(self, root: Any) -> Any:
        node = root
        for frame in self.steps:
            node = frame.select(node)
        return node

    def __len__(self) -> int:
        return len(self.steps)


HOLE = ContextPath()
