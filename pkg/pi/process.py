"""
Processes of the π-calculus fragment used by the encodings:

    P ::= 0 | x̄⟨y⟩ | x̄⟨y,z⟩ | νx P | x(y,z).P | !x(y).P | P | P

Parallel composition stays binary; equality is α-equivalence.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Optional, Union

from calculi.names import Name, Supply
from calculi.terms import FreshNames


class _Node:
    @cached_property
    def key(self) -> tuple:
        return alpha_key(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return print_process(self)


@dataclass(frozen=True, eq=False)
class Nil(_Node):
    pass


@dataclass(frozen=True, eq=False)
class OutU(_Node):
    chan: Name
    payload: Name


@dataclass(frozen=True, eq=False)
class OutB(_Node):
    chan: Name
    payload1: Name
    payload2: Name


@dataclass(frozen=True, eq=False)
class Nu(_Node):
    binder: Name
    body: "Process"


@dataclass(frozen=True, eq=False)
class InB(_Node):
    chan: Name
    binder1: Name
    binder2: Name
    cont: "Process"


@dataclass(frozen=True, eq=False)
class RepIn(_Node):
    chan: Name
    binder: Name
    cont: "Process"


@dataclass(frozen=True, eq=False)
class Par(_Node):
    left: "Process"
    right: "Process"


Process = Union[Nil, OutU, OutB, Nu, InB, RepIn, Par]
NIL = Nil()


def par(*procs: Process) -> Process:
    """Left-associated parallel composition; `par()` is 0."""
    if not procs:
        return NIL
    out = procs[0]
    for p in procs[1:]:
        out = Par(out, p)
    return out


def nus(binders, body: Process) -> Process:
    """ν-block, first binder outermost."""
    for x in reversed(list(binders)):
        body = Nu(x, body)
    return body


# ----------------------------------------------------------------------------
# Non-blocking context frames


@dataclass(frozen=True)
class ParLeft:
    right: Process
    binder = None

    def plug(self, child: Process) -> Process:
        return Par(child, self.right)

    def select(self, node: Par) -> Process:
        return node.left


@dataclass(frozen=True)
class ParRight:
    left: Process
    binder = None

    def plug(self, child: Process) -> Process:
        return Par(self.left, child)

    def select(self, node: Par) -> Process:
        return node.right


@dataclass(frozen=True)
class NuBody:
    binder: Name

    def plug(self, child: Process) -> Process:
        return Nu(self.binder, child)

    def select(self, node: Nu) -> Process:
        return node.body


# ----------------------------------------------------------------------------
# Names


def free_names(p: Process) -> frozenset[Name]:
    match p:
        case Nil():
            return frozenset()
        case OutU(x, y):
            return frozenset({x, y})
        case OutB(x, y, z):
            return frozenset({x, y, z})
        case Nu(x, body):
            return free_names(body) - {x}
        case InB(x, y, z, cont):
            return (free_names(cont) - {y, z}) | {x}
        case RepIn(x, y, cont):
            return (free_names(cont) - {y}) | {x}
        case Par(left, right):
            return free_names(left) | free_names(right)
    raise TypeError(f"not a process: {p!r}")


def names(p: Process) -> frozenset[Name]:
    match p:
        case Nil():
            return frozenset()
        case OutU(x, y):
            return frozenset({x, y})
        case OutB(x, y, z):
            return frozenset({x, y, z})
        case Nu(x, body):
            return names(body) | {x}
        case InB(x, y, z, cont):
            return names(cont) | {x, y, z}
        case RepIn(x, y, cont):
            return names(cont) | {x, y}
        case Par(left, right):
            return names(left) | names(right)
    raise TypeError(f"not a process: {p!r}")


def alpha_key(p: Process) -> tuple:
    def n(x: Name, env: dict[Name, int]) -> tuple:
        if x in env:
            return ("b", env[x])
        return ("f", x.kind, x.id)

    def go(p: Process, env: dict[Name, int], depth: int) -> tuple:
        match p:
            case Nil():
                return ("0",)
            case OutU(x, y):
                return ("out", n(x, env), n(y, env))
            case OutB(x, y, z):
                return ("out2", n(x, env), n(y, env), n(z, env))
            case Nu(x, body):
                return ("nu", go(body, {**env, x: depth}, depth + 1))
            case InB(x, y, z, cont):
                inner = {**env, y: depth, z: depth + 1}
                return ("in2", n(x, env), go(cont, inner, depth + 2))
            case RepIn(x, y, cont):
                return ("rep", n(x, env), go(cont, {**env, y: depth}, depth + 1))
            case Par(left, right):
                return ("par", go(left, env, depth), go(right, env, depth))
        raise TypeError(f"not a process: {p!r}")

    return go(p, {}, 0)


def alpha_eq_process(p: Process, q: Process) -> bool:
    return alpha_key(p) == alpha_key(q)


def rename(p: Process, old: Name, new: Name) -> Process:
    """Replace free occurrences of `old` by `new`; `new` must not be bound in p."""

    def r(x: Name) -> Name:
        return new if x == old else x

    match p:
        case Nil():
            return p
        case OutU(x, y):
            return OutU(r(x), r(y))
        case OutB(x, y, z):
            return OutB(r(x), r(y), r(z))
        case Nu(x, body):
            return p if x == old else Nu(x, rename(body, old, new))
        case InB(x, y, z, cont):
            cont = cont if old in (y, z) else rename(cont, old, new)
            return InB(r(x), y, z, cont)
        case RepIn(x, y, cont):
            cont = cont if y == old else rename(cont, old, new)
            return RepIn(r(x), y, cont)
        case Par(left, right):
            return Par(rename(left, old, new), rename(right, old, new))
    raise TypeError(f"not a process: {p!r}")


def rename_free(
    p: Process, mapping: Mapping[Name, Name], supply: Optional[Supply] = None
) -> tuple[Process, Supply]:
    """
    Simultaneous capture-avoiding substitution of names for free names.
    Binders that would capture an image of `mapping` are renamed apart.
    """
    fresh = FreshNames(supply, names(p) | set(mapping) | set(mapping.values()))

    def go(p: Process, sub: dict[Name, Name]) -> Process:
        def r(x: Name) -> Name:
            return sub.get(x, x)

        def bind(ys: tuple[Name, ...], cont: Process):
            inner = {k: v for k, v in sub.items() if k not in ys}
            images = {inner[k] for k in free_names(cont) if k in inner}
            out = []
            for y in ys:
                if y in images:
                    y2 = fresh.like(y)
                    inner[y] = y2
                    out.append(y2)
                else:
                    out.append(y)
            return out, go(cont, inner)

        match p:
            case Nil():
                return p
            case OutU(x, y):
                return OutU(r(x), r(y))
            case OutB(x, y, z):
                return OutB(r(x), r(y), r(z))
            case Nu(x, body):
                (x2,), body = bind((x,), body)
                return Nu(x2, body)
            case InB(x, y, z, cont):
                (y2, z2), cont = bind((y, z), cont)
                return InB(r(x), y2, z2, cont)
            case RepIn(x, y, cont):
                (y2,), cont = bind((y,), cont)
                return RepIn(r(x), y2, cont)
            case Par(left, right):
                return Par(go(left, sub), go(right, sub))
        raise TypeError(f"not a process: {p!r}")

    result = go(p, dict(mapping))
    return result, fresh.supply


# ----------------------------------------------------------------------------
# Shape


def size(p: Process) -> int:
    match p:
        case Nil() | OutU() | OutB():
            return 1
        case Nu(_, body):
            return 1 + size(body)
        case InB(_, _, _, cont) | RepIn(_, _, cont):
            return 1 + size(cont)
        case Par(left, right):
            return 1 + size(left) + size(right)
    raise TypeError(f"not a process: {p!r}")


def subprocesses(p: Process) -> Iterator[Process]:
    yield p
    match p:
        case Nu(_, body):
            yield from subprocesses(body)
        case InB(_, _, _, cont) | RepIn(_, _, cont):
            yield from subprocesses(cont)
        case Par(left, right):
            yield from subprocesses(left)
            yield from subprocesses(right)


def check_encoding_discipline(p: Process) -> bool:
    """Binary communications use special channels; unary and replicated ones use variables."""
    for q in subprocesses(p):
        if isinstance(q, (OutB, InB)) and not q.chan.is_special:
            return False
        if isinstance(q, (OutU, RepIn)) and q.chan.is_special:
            return False
    return True


# ----------------------------------------------------------------------------
# Printing


def print_process(p: Process) -> str:
    def proc(p: Process) -> str:
        if isinstance(p, Par):
            return f"{proc(p.left)} | {factor(p.right)}"
        return factor(p)

    def factor(p: Process) -> str:
        match p:
            case Nil():
                return "0"
            case OutU(x, y):
                return f"{x}<{y}>"
            case OutB(x, y, z):
                return f"{x}<{y},{z}>"
            case Nu(x, body):
                return f"new {x}. {factor(body)}"
            case InB(x, y, z, cont):
                return f"{x}({y},{z}). {factor(cont)}"
            case RepIn(x, y, cont):
                return f"!{x}({y}). {factor(cont)}"
            case Par():
                return f"({proc(p)})"
        raise TypeError(f"not a process: {p!r}")

    return proc(p)

