from dataclasses import dataclass
from typing import AbstractSet, Literal

NameKind = Literal["variable", "special"]


@dataclass(frozen=True, order=True)
class Name:
    """A variable name or a special channel name; the two kinds never compare equal."""

    kind: NameKind
    id: str

    @property
    def is_special(self) -> bool:
        return self.kind == "special"

    def __str__(self) -> str:
        return f"@{self.id}" if self.is_special else self.id

    def __repr__(self) -> str:
        return f"Name({self})"


def var(id: str) -> Name:
    return Name("variable", id)


def special(id: str) -> Name:
    return Name("special", id.lstrip("@"))


@dataclass(frozen=True)
class Supply:
    """
    Fresh-name supply. Drawing returns the name and the advanced supply, so
    identical supplies and identical avoid sets always give identical names.
    """

    counter: int = 0

    def _draw(self, kind: NameKind, prefix: str, avoid: AbstractSet[Name]):
        n = self.counter
        while True:
            n += 1
            name = Name(kind, f"{prefix}{n}")
            if name not in avoid:
                return name, Supply(n)

    def fresh_variable(self, avoid: AbstractSet[Name] = frozenset()):
        return self._draw("variable", "z", avoid)

    def fresh_special(self, avoid: AbstractSet[Name] = frozenset()):
        return self._draw("special", "b", avoid)

    def fresh_like(self, name: Name, avoid: AbstractSet[Name] = frozenset()):
        if name.is_special:
            return self.fresh_special(avoid)
        return self.fresh_variable(avoid)
