"""
Linear weak applicative reduction ⊸v = ⊸vdb ∪ ⊸vls on λ_vker.

    E ::= ⟨·⟩ | v E | E[x/t] | t[x/E]          A ::= E⟨⟨·⟩ t⟩

    (λx.t) s               ↦vdb  t[x/s]
    A⟨x⟩[x/S⟨v⟩]           ↦vls  S⟨A⟨v⟩[x/v]⟩    (x not captured by A)

The strategy is non-deterministic but has the diamond property.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Literal, Optional

from .context import HOLE, ContextPath
from .errors import InvalidRedexError
from .names import Name, Supply
from .terms import (
    App,
    AppArg,
    FreshNames,
    Lam,
    Sub,
    SubArg,
    SubBody,
    Term,
    Var,
    alpha_key,
    free_vars,
    fresh_copy,
    is_value,
    names,
    rename,
    uniquify_binders,
    validate_vker,
    values_of,
)
from .trace import Trace, TraceStep


@dataclass(frozen=True)
class CbvRedex:
    kind: Literal["vdb", "vls"]
    context: ContextPath
    # vls only: E from the substitution body to the application `x t`, and the
    # substitution context S from the substitution argument to the value.
    inner: ContextPath = HOLE
    sctx: ContextPath = HOLE
    binder: Optional[Name] = None


def eval_positions(t: Term, path: ContextPath = HOLE) -> Iterator[tuple[ContextPath, Term]]:
    """Positions of CBV evaluation contexts, left-to-right and outside-in."""
    yield path, t
    if isinstance(t, App):
        yield from eval_positions(t.arg, path.extend(AppArg(t.fun)))
    elif isinstance(t, Sub):
        yield from eval_positions(t.body, path.extend(SubBody(t.binder, t.arg)))
        yield from eval_positions(t.arg, path.extend(SubArg(t.body, t.binder)))


def _value_under_subs(t: Term) -> Optional[ContextPath]:
    path = HOLE
    while isinstance(t, Sub):
        path = path.extend(SubBody(t.binder, t.arg))
        t = t.body
    return path if is_value(t) else None


def enumerate_cbv_redexes(t: Term) -> list[CbvRedex]:
    redexes = []
    for path, node in eval_positions(t):
        if isinstance(node, App) and isinstance(node.fun, Lam):
            redexes.append(CbvRedex("vdb", path))
        if isinstance(node, Sub):
            sctx = _value_under_subs(node.arg)
            if sctx is None:
                continue
            for inner, occ in eval_positions(node.body):
                if (
                    isinstance(occ, App)
                    and isinstance(occ.fun, Var)
                    and occ.fun.name == node.binder
                    and node.binder not in inner.captured
                ):
                    redexes.append(CbvRedex("vls", path, inner, sctx, node.binder))
    return redexes


def _freshen(node: Term, path: ContextPath, clashes: set[Name], fresh: FreshNames):
    steps = []
    for frame in path.steps:
        if isinstance(frame, SubBody):
            if node.binder in clashes:
                y = fresh.like(node.binder)
                node = Sub(rename(node.body, node.binder, y), y, node.arg)
            steps.append(SubBody(node.binder, node.arg))
            node = node.body
        elif isinstance(frame, SubArg):
            steps.append(SubArg(node.body, node.binder))
            node = node.arg
        elif isinstance(frame, AppArg):
            steps.append(AppArg(node.fun))
            node = node.arg
        else:
            raise TypeError(f"unexpected frame on an evaluation path: {frame!r}")
    return ContextPath(tuple(steps)), node


def cbv_step(t: Term, redex: CbvRedex, supply: Optional[Supply] = None) -> tuple[Term, Supply]:
    if redex not in enumerate_cbv_redexes(t):
        raise InvalidRedexError(f"not a ⊸v redex of '{t}': {redex.kind} at {len(redex.context)}")
    fresh = FreshNames(supply, names(t))
    root = redex.context.replay(t)
    if redex.kind == "vdb":
        lam = root.fun
        return redex.context.plug(Sub(lam.body, lam.binder, root.arg)), fresh.supply

    x, body = root.binder, root.body
    sigma, delta = redex.sctx.captured, redex.inner.captured
    # the copy of v lands in the scope of [x/v]; S binders and fv(v) stay clear of x
    if x in free_vars(root.arg) | sigma:
        y = fresh.like(x)
        x, body = y, rename(body, x, y)
    # S moves outside [x/v]: its binders must not capture A⟨x⟩.
    sctx, value = _freshen(root.arg, redex.sctx, set(sigma & free_vars(body)), fresh)
    sigma = sctx.captured
    actx, occ = _freshen(body, redex.inner, set(delta & (free_vars(value) | sigma)), fresh)
    copy, fresh.supply = fresh_copy(value, fresh.avoid, fresh.supply)
    fresh.avoid |= names(copy)
    body = actx.plug(App(copy, occ.arg))
    return redex.context.plug(sctx.plug(Sub(body, x, value))), fresh.supply


def step_all(t: Term, supply: Optional[Supply] = None) -> list[tuple[CbvRedex, Term]]:
    out = []
    for redex in enumerate_cbv_redexes(t):
        reduct, _ = cbv_step(t, redex, supply)
        out.append((redex, reduct))
    return out


# ----------------------------------------------------------------------------
# Exploration


@dataclass
class ReductionGraph:
    """All ⊸v reducts of a term up to a depth, nodes keyed by α-class."""

    root: tuple
    terms: dict[tuple, Term] = field(default_factory=dict)
    edges: dict[tuple, list[tuple[str, tuple]]] = field(default_factory=dict)
    depth: dict[tuple, int] = field(default_factory=dict)
    frontier: set[tuple] = field(default_factory=set)

    def successors(self, key: tuple) -> list[tuple[str, tuple]]:
        return self.edges.get(key, [])

    @property
    def normal_forms(self) -> list[Term]:
        return [self.terms[k] for k, succ in self.edges.items() if not succ]

    def path_lengths(self) -> Optional[set[int]]:
        """Lengths of all maximal paths, or None if exploration was cut short."""
        if self.frontier:
            return None
        memo: dict[tuple, frozenset[int]] = {}
        active: set[tuple] = set()

        def lengths(key: tuple) -> Optional[frozenset[int]]:
            if key in memo:
                return memo[key]
            if key in active:
                return None
            active.add(key)
            succ = self.edges[key]
            if not succ:
                result = frozenset({0})
            else:
                result = frozenset()
                for _, k in succ:
                    sub = lengths(k)
                    if sub is None:
                        return None
                    result |= {n + 1 for n in sub}
            active.discard(key)
            memo[key] = result
            return result

        found = lengths(self.root)
        return set(found) if found is not None else None

    def to_dict(self) -> dict:
        return {
            "root": str(self.terms[self.root]),
            "nodes": len(self.terms),
            "edges": [
                {"from": str(self.terms[k]), "label": label, "to": str(self.terms[j])}
                for k, succ in self.edges.items()
                for label, j in succ
            ],
            "normal_forms": [str(t) for t in self.normal_forms],
            "complete": not self.frontier,
        }


def explore_cbv(t: Term, fuel: int, supply: Optional[Supply] = None) -> ReductionGraph:
    validate_vker(t)
    root = alpha_key(t)
    graph = ReductionGraph(root, terms={root: t}, depth={root: 0})
    queue = deque([root])
    while queue:
        key = queue.popleft()
        if graph.depth[key] >= fuel:
            if enumerate_cbv_redexes(graph.terms[key]):
                graph.frontier.add(key)
            continue
        succ = []
        for redex, reduct in step_all(graph.terms[key], supply):
            k = alpha_key(reduct)
            succ.append((redex.kind, k))
            if k not in graph.terms:
                graph.terms[k] = reduct
                graph.depth[k] = graph.depth[key] + 1
                queue.append(k)
        graph.edges[key] = succ
    return graph


def cbv_trace(
    t: Term, fuel: int, policy: str = "leftmost", supply: Optional[Supply] = None
):
    """`leftmost` returns a Trace; `all` returns the ReductionGraph of every choice."""
    if policy in ("all", "all-paths"):
        return explore_cbv(t, fuel, supply)
    validate_vker(t)
    trace = Trace(t)
    supply = supply or Supply()
    for _ in range(fuel):
        redexes = enumerate_cbv_redexes(trace.final)
        if not redexes:
            break
        reduct, supply = cbv_step(trace.final, redexes[0], supply)
        trace.steps.append(TraceStep(redexes[0].kind, reduct))
    trace.normal = not enumerate_cbv_redexes(trace.final)
    return trace


# ----------------------------------------------------------------------------
# Properties


def check_diamond(t: Term, fuel: int) -> bool:
    graph = explore_cbv(t, fuel)

    def successor_keys(key: tuple) -> set[tuple]:
        if key in graph.edges:
            return {k for _, k in graph.edges[key]}
        return {alpha_key(r) for _, r in step_all(graph.terms[key])}

    for key, succ in graph.edges.items():
        targets = sorted({k for _, k in succ}, key=repr)
        for i, u1 in enumerate(targets):
            for u2 in targets[i + 1 :]:
                if not successor_keys(u1) & successor_keys(u2):
                    return False
    return True


def check_equal_lengths(t: Term, fuel: int) -> bool:
    lengths = explore_cbv(t, fuel).path_lengths()
    return lengths is None or len(lengths) == 1


def check_v_subterm(t: Term, fuel: int) -> bool:
    """
    Every value in every reduct is a value of the initial term, up to renaming
    of bound variables. Binders of t are first made distinct from its free
    variables, which must then match exactly.
    """
    t, _ = uniquify_binders(t)
    keep = free_vars(t)
    originals = {alpha_key(v, free_insensitive=True, keep=keep) for v in values_of(t)}
    graph = explore_cbv(t, fuel)
    return all(
        alpha_key(v, free_insensitive=True, keep=keep) in originals
        for reduct in graph.terms.values()
        for v in values_of(reduct)
    )
