"""
Structural congruence ≡: the least equivalence generated by

    P | 0 ≡ P        P | (Q | R) ≡ (P | Q) | R        P | Q ≡ Q | P
    νx 0 ≡ 0         P | νx Q ≡ νx (P | Q)  (x ∉ fn(P))        νx νy P ≡ νy νx P

closed under non-blocking contexts only. It is decided by canonical forms: a
single ν-block outermost, then the parallel components, which are prefixes and
are only compared up to α. `congruence_oracle` is an independent bounded search
over the generating rules.
"""

import math
from collections import deque
from functools import lru_cache
from typing import Callable, Iterator, Optional

from calculi.context import HOLE, ContextPath
from calculi.errors import PreconditionError
from calculi.names import Name, Supply, var
from calculi.terms import FreshNames, level_prefix

from .process import (
    NIL,
    InB,
    Nil,
    Nu,
    NuBody,
    OutB,
    OutU,
    Par,
    ParLeft,
    ParRight,
    Process,
    RepIn,
    alpha_key,
    free_names,
    names,
    nus,
    par,
    print_process,
    rename,
    rename_free,
)
from .reports import DerivedRuleReport


def nb_positions(p: Process, path: ContextPath = HOLE) -> Iterator[tuple[ContextPath, Process]]:
    """Every position reachable through a non-blocking context (Par and ν only)."""
    yield path, p
    if isinstance(p, Par):
        yield from nb_positions(p.left, path.extend(ParLeft(p.right)))
        yield from nb_positions(p.right, path.extend(ParRight(p.left)))
    elif isinstance(p, Nu):
        yield from nb_positions(p.body, path.extend(NuBody(p.binder)))


# ----------------------------------------------------------------------------
# Canonical forms


def _flatten(p: Process) -> tuple[list[Name], list[Process]]:
    """Lift every ν to the top with a fresh binder; drop 0s and unused binders."""
    fresh = FreshNames(None, names(p))
    binders: list[Name] = []
    comps: list[Process] = []

    def go(p: Process, sub: dict[Name, Name]) -> None:
        match p:
            case Nil():
                pass
            case Par(left, right):
                go(left, sub)
                go(right, sub)
            case Nu(x, body):
                y = fresh.like(x)
                binders.append(y)
                go(body, {**sub, x: y})
            case _:
                comps.append(rename_free(p, sub, fresh.supply)[0] if sub else p)

    go(p, {})
    used = frozenset().union(*(free_names(c) for c in comps))
    return [b for b in binders if b in used], comps


def _render(p: Process, outer: Callable[[Name], str]) -> str:
    """Print with prefix binders as levels and every other name through `outer`."""

    def go(p: Process, env: dict[Name, str], depth: int) -> str:
        def n(x: Name) -> str:
            return env[x] if x in env else outer(x)

        match p:
            case Nil():
                return "0"
            case OutU(x, y):
                return f"{n(x)}<{n(y)}>"
            case OutB(x, y, z):
                return f"{n(x)}<{n(y)},{n(z)}>"
            case Nu(x, body):
                return f"new %{depth}. {go(body, {**env, x: f'%{depth}'}, depth + 1)}"
            case InB(x, y, z, cont):
                chan = n(x)
                inner = {**env, y: f"%{depth}", z: f"%{depth + 1}"}
                return f"{chan}(%{depth},%{depth + 1}). {go(cont, inner, depth + 2)}"
            case RepIn(x, y, cont):
                chan = n(x)
                return f"!{chan}(%{depth}). {go(cont, {**env, y: f'%{depth}'}, depth + 1)}"
            case Par(left, right):
                return f"({go(left, env, depth)} | {go(right, env, depth)})"
        raise TypeError(f"not a process: {p!r}")

    return go(p, {}, 0)


def _colors(comps: list[Process], bound: frozenset[Name]) -> dict[Name, int]:
    """One round of refinement: a bound name is coloured by how the components use it."""
    signatures = {}
    for v in bound:

        def outer(n: Name, v=v) -> str:
            if n == v:
                return "*"
            return "?" if n in bound else str(n)

        signatures[v] = tuple(sorted(_render(c, outer) for c in comps if v in free_names(c)))
    ranks = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
    return {v: ranks[sig] for v, sig in signatures.items()}


def _order(comps: list[Process], bound: frozenset[Name]):
    """
    Order components and number bound names so that the rendering is the least
    one. Ties are broken by exhaustive search, pruned against the best so far.
    """
    colors = _colors(comps, bound)
    best: list = [None]

    def render(c: Process, assigned: dict[Name, int]) -> tuple[str, list[Name]]:
        local: list[Name] = []

        def outer(n: Name) -> str:
            if n in assigned:
                return f"#{assigned[n]}"
            if n in bound:
                if n not in local:
                    local.append(n)
                return f"?{colors[n]}.{local.index(n)}"
            return str(n)

        return _render(c, outer), local

    def search(remaining: list[Process], assigned: dict[Name, int], acc: tuple, order: list):
        if not remaining:
            if best[0] is None or acc < best[0][0]:
                best[0] = (acc, order, assigned)
            return
        rendered = [render(c, assigned) for c in remaining]
        low = min(s for s, _ in rendered)
        acc = acc + (low,)
        if best[0] is not None and acc > best[0][0][: len(acc)]:
            return
        seen: set[Process] = set()
        for i, (s, new) in enumerate(rendered):
            c = remaining[i]
            if s != low or c in seen:
                continue
            seen.add(c)
            nxt = dict(assigned)
            for v in new:
                nxt[v] = len(nxt)
            search(remaining[:i] + remaining[i + 1 :], nxt, acc, order + [c])

    search(comps, {}, (), [])
    _, order, assigned = best[0]
    return order, assigned


def _rebuild(p: Process, env: dict[Name, Name], depth: int, prefix: str) -> Process:
    def level(x: Name, d: int) -> Name:
        return Name(x.kind, f"{prefix}{d}")

    def n(x: Name, env: dict[Name, Name]) -> Name:
        return env.get(x, x)

    def go(p: Process, env: dict[Name, Name], depth: int) -> Process:
        match p:
            case Nil():
                return p
            case OutU(x, y):
                return OutU(n(x, env), n(y, env))
            case OutB(x, y, z):
                return OutB(n(x, env), n(y, env), n(z, env))
            case Nu(x, body):
                y = level(x, depth)
                return Nu(y, go(body, {**env, x: y}, depth + 1))
            case InB(x, y, z, cont):
                y2, z2 = level(y, depth), level(z, depth + 1)
                return InB(n(x, env), y2, z2, go(cont, {**env, y: y2, z: z2}, depth + 2))
            case RepIn(x, y, cont):
                y2 = level(y, depth)
                return RepIn(n(x, env), y2, go(cont, {**env, y: y2}, depth + 1))
            case Par(left, right):
                return Par(go(left, env, depth), go(right, env, depth))
        raise TypeError(f"not a process: {p!r}")

    return go(p, env, depth)


@lru_cache(maxsize=1 << 16)
def canonicalize(p: Process) -> Process:
    binders, comps = _flatten(p)
    order, assigned = _order(comps, frozenset(binders))
    prefix = level_prefix({n.id for n in free_names(p)})
    renaming = {v: Name(v.kind, f"{prefix}{i}") for v, i in assigned.items()}
    block = sorted(assigned, key=assigned.get)
    body = par(*(_rebuild(c, renaming, len(block), prefix) for c in order))
    return nus([renaming[v] for v in block], body)


def canonical_key(p: Process) -> tuple:
    return alpha_key(canonicalize(p))


def canonical_print(p: Process) -> str:
    return print_process(canonicalize(p))


def congruent(p: Process, q: Process) -> bool:
    return canonical_key(p) == canonical_key(q)


def split_canonical(p: Process) -> tuple[list[Name], list[Process]]:
    """The ν-block and the components of a process in canonical form."""
    binders = []
    while isinstance(p, Nu):
        binders.append(p.binder)
        p = p.body
    comps = []
    while isinstance(p, Par):
        comps.append(p.right)
        p = p.left
    if not isinstance(p, Nil):
        comps.append(p)
    return binders, comps[::-1]


# ----------------------------------------------------------------------------
# Generated rules


def _local_rewrites(q: Process, grow: bool) -> Iterator[tuple[str, Process]]:
    if grow:
        yield "par-unit-intro", Par(q, NIL)
    match q:
        case Par(left, right):
            if isinstance(right, Nil):
                yield "par-unit", left
            yield "par-comm", Par(right, left)
            if isinstance(left, Par):
                yield "par-assoc", Par(left.left, Par(left.right, right))
            if isinstance(right, Par):
                yield "par-assoc-rev", Par(Par(left, right.left), right.right)
            if isinstance(right, Nu):
                x, body = right.binder, right.body
                if x in free_names(left):
                    y, _ = Supply().fresh_like(x, names(q))
                    x, body = y, rename(body, x, y)
                yield "extrude", Nu(x, Par(left, body))
        case Nu(x, body):
            if isinstance(body, Nu):
                yield "nu-swap", Nu(body.binder, Nu(x, body.body))
            if isinstance(body, Nil):
                yield "nu-nil", NIL
            if isinstance(body, Par) and x not in free_names(body.left):
                yield "extrude-rev", Par(body.left, Nu(x, body.right))
        case Nil():
            if grow:
                yield "nu-nil-intro", Nu(var("z"), NIL)


def rewrites(p: Process, grow: bool = True) -> list[tuple[str, Process]]:
    """
    Every single application of a generating rule, in either direction, at a
    non-blocking position. `grow=False` leaves out the two rules that only
    introduce 0 or an empty restriction.
    """
    out = []
    for path, q in nb_positions(p):
        for rule, r in _local_rewrites(q, grow):
            out.append((rule, path.plug(r)))
    return out


def congruence_ball(p: Process, depth: int, grow: bool = True) -> dict[tuple, Process]:
    """Members of the ≡-class of p within `depth` rewrites, keyed up to α."""
    seen = {alpha_key(p): p}
    frontier = deque([(p, 0)])
    while frontier:
        q, d = frontier.popleft()
        if d >= depth:
            continue
        for _, r in rewrites(q, grow):
            k = alpha_key(r)
            if k not in seen:
                seen[k] = r
                frontier.append((r, d + 1))
    return seen


def congruence_oracle(p: Process, q: Process, depth: int) -> bool:
    """
    Bounded search for a chain of at most `depth` rewrites from p to q. Every
    rule is used in both directions, so the search meets in the middle.
    """
    if depth < 0:
        raise PreconditionError(f"depth must be non-negative, got {depth}")
    near = congruence_ball(p, math.ceil(depth / 2))
    far = congruence_ball(q, depth // 2)
    return not near.keys().isdisjoint(far.keys())


def derived_rule_checks(
    p: Process, context: ContextPath, x: Name, filler: Optional[Process] = None
) -> DerivedRuleReport:
    """
    With N the non-blocking context and Δ the names it binds around its hole:

        merge_par   N⟨Q⟩ | P ≡ N⟨Q | P⟩           when fn(P) ∩ Δ = ∅
        drop_nu     νx P ≡ P                      when x ∉ fn(P)
        push_nu     νx N⟨P⟩ ≡ N⟨νx P⟩             when x ∉ Δ and x ∉ fn(N)
    """
    filler = NIL if filler is None else filler
    delta = context.captured
    report = DerivedRuleReport()
    if not free_names(p) & delta:
        report.merge_par = congruent(Par(context.plug(filler), p), context.plug(Par(filler, p)))
    if x not in free_names(p):
        report.drop_nu = congruent(Nu(x, p), p)
    if x not in delta and x not in free_names(context.plug(NIL)):
        report.push_nu = congruent(Nu(x, context.plug(p)), context.plug(Nu(x, p)))
    if (report.merge_par, report.drop_nu, report.push_nu) == (None, None, None):
        raise PreconditionError("no derived rule applies: every side condition fails")
    return report
