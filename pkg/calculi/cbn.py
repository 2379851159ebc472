"""
Linear weak head reduction ⊸ = ⊸db ∪ ⊸ls on λ_lsub.

Evaluation contexts are weak head contexts E ::= ⟨·⟩ | E t | E[x/t]; the
rules fire at a distance:

    S⟨λx.t⟩ s      ↦db  S⟨t[x/s]⟩
    E⟨x⟩[x/s]      ↦ls  E⟨s⟩[x/s]      (x not captured by E)
"""

from dataclasses import dataclass
from typing import Iterator, Literal, NamedTuple, Optional

from .context import HOLE, ContextPath
from .errors import PreconditionError
from .names import Name, Supply
from .terms import (
    App,
    AppFun,
    Lam,
    Sub,
    SubBody,
    Term,
    Var,
    FreshNames,
    alpha_key,
    free_vars,
    fresh_copy,
    is_pure,
    meta_subst,
    names,
    rename,
    subterms,
    unfold,
    uniquify_binders,
)
from .trace import Trace, TraceStep


@dataclass(frozen=True)
class CbnRedex:
    kind: Literal["db", "ls"]
    context: ContextPath
    # db: the substitution context S from the function position to the λ.
    # ls: the evaluation context E from the substitution body to the variable.
    inner: ContextPath
    binder: Name


class CbnStep(NamedTuple):
    label: str
    term: Term
    supply: Supply


def spine(t: Term) -> list[tuple[ContextPath, Term]]:
    """Weak head spine: descend left of applications and substitutions."""
    out = []
    path, node = HOLE, t
    while True:
        out.append((path, node))
        if isinstance(node, App):
            path, node = path.extend(AppFun(node.arg)), node.fun
        elif isinstance(node, Sub):
            path, node = path.extend(SubBody(node.binder, node.arg)), node.body
        else:
            return out


def decompose_cbn(t: Term) -> Optional[CbnRedex]:
    sp = spine(t)
    head_path, head = sp[-1]
    if isinstance(head, Lam):
        j = len(sp) - 2
        while j >= 0 and isinstance(sp[j][1], Sub):
            j -= 1
        if j < 0:
            return None
        context = sp[j][0]
        inner = ContextPath(head_path.steps[len(context.steps) + 1 :])
        return CbnRedex("db", context, inner, head.binder)
    for j in range(len(sp) - 2, -1, -1):
        node = sp[j][1]
        if isinstance(node, Sub) and node.binder == head.name:
            context = sp[j][0]
            inner = ContextPath(head_path.steps[len(context.steps) + 1 :])
            return CbnRedex("ls", context, inner, node.binder)
    return None


def classify_normal(t: Term) -> Optional[str]:
    if decompose_cbn(t) is not None:
        return None
    head = spine(t)[-1][1]
    return "abstraction" if isinstance(head, Lam) else "free-head"


def _eval_positions(t: Term, path: ContextPath = HOLE) -> Iterator[tuple[ContextPath, Term]]:
    yield path, t
    if isinstance(t, App):
        yield from _eval_positions(t.fun, path.extend(AppFun(t.arg)))
    elif isinstance(t, Sub):
        yield from _eval_positions(t.body, path.extend(SubBody(t.binder, t.arg)))


def _strip_subs(t: Term) -> Term:
    while isinstance(t, Sub):
        t = t.body
    return t


def cbn_redex_count(t: Term) -> int:
    """Count every decomposition t = E⟨r⟩ with r a root db- or ls-redex."""
    count = 0
    for _, node in _eval_positions(t):
        if isinstance(node, App) and isinstance(_strip_subs(node.fun), Lam):
            count += 1
        if isinstance(node, Sub):
            for path, occ in _eval_positions(node.body):
                if (
                    isinstance(occ, Var)
                    and occ.name == node.binder
                    and node.binder not in path.captured
                ):
                    count += 1
    return count


def _freshen(node: Term, path: ContextPath, clashes: set[Name], fresh: FreshNames):
    """
    Walk `path` from `node`, α-renaming substitution binders in `clashes`.
    Returns the path re-derived from the renamed tree and the node at its end.
    """
    steps = []
    for frame in path.steps:
        if isinstance(frame, SubBody):
            if node.binder in clashes:
                y = fresh.like(node.binder)
                node = Sub(rename(node.body, node.binder, y), y, node.arg)
            steps.append(SubBody(node.binder, node.arg))
            node = node.body
        elif isinstance(frame, AppFun):
            steps.append(AppFun(node.arg))
            node = node.fun
        else:
            raise TypeError(f"unexpected frame on a weak head path: {frame!r}")
    return ContextPath(tuple(steps)), node


def cbn_step(t: Term, supply: Optional[Supply] = None) -> Optional[CbnStep]:
    redex = decompose_cbn(t)
    if redex is None:
        return None
    fresh = FreshNames(supply, names(t))
    root = redex.context.replay(t)
    if redex.kind == "db":
        arg = root.arg
        clashes = set(free_vars(arg)) & redex.inner.captured
        sctx, lam = _freshen(root.fun, redex.inner, clashes, fresh)
        reduct = sctx.plug(Sub(lam.body, lam.binder, arg))
    else:
        x, body, arg = root.binder, root.body, root.arg
        # the copy lands in the scope of [x/·]
        if x in free_vars(arg):
            y = fresh.like(x)
            x, body = y, rename(body, x, y)
        clashes = set(free_vars(arg)) & redex.inner.captured
        ectx, _ = _freshen(body, redex.inner, clashes, fresh)
        copy, fresh.supply = fresh_copy(arg, fresh.avoid, fresh.supply)
        fresh.avoid |= names(copy)
        reduct = Sub(ectx.plug(copy), x, arg)
    return CbnStep(redex.kind, redex.context.plug(reduct), fresh.supply)


def cbn_trace(t: Term, fuel: int, supply: Optional[Supply] = None) -> Trace:
    trace = Trace(t)
    supply = supply or Supply()
    for _ in range(fuel):
        step = cbn_step(trace.final, supply)
        if step is None:
            break
        trace.steps.append(TraceStep(step.label, step.term))
        supply = step.supply
    trace.normal = decompose_cbn(trace.final) is None
    return trace


# ----------------------------------------------------------------------------
# Weak head β-reduction on pure terms


def whr_oracle_step(p: Term) -> Optional[Term]:
    if not is_pure(p):
        raise PreconditionError(f"weak head oracle expects a pure term, got '{p}'")
    path, node = HOLE, p
    apps = []
    while isinstance(node, App):
        apps.append(path)
        path, node = path.extend(AppFun(node.arg)), node.fun
    if not isinstance(node, Lam) or not apps:
        return None
    redex_path = apps[-1]
    redex = redex_path.replay(p)
    return redex_path.plug(meta_subst(redex.fun.body, redex.fun.binder, redex.arg))


def whr_trace(p: Term, fuel: int) -> Trace:
    trace = Trace(p)
    for _ in range(fuel):
        nxt = whr_oracle_step(trace.final)
        if nxt is None:
            break
        trace.steps.append(TraceStep("beta", nxt))
    trace.normal = whr_oracle_step(trace.final) is None
    return trace


# ----------------------------------------------------------------------------
# Properties


def check_subterm_property(t: Term, fuel: int) -> bool:
    """
    Every ls-step duplicates a subterm of the initial term, up to renaming of
    bound variables. Binders of t are first made distinct from its free
    variables, which are then compared as they are.
    """
    t, supply = uniquify_binders(t)
    keep = free_vars(t)
    originals = {alpha_key(u, free_insensitive=True, keep=keep) for u in subterms(t)}
    current = t
    for _ in range(fuel):
        redex = decompose_cbn(current)
        if redex is None:
            return True
        if redex.kind == "ls":
            copied = redex.context.replay(current).arg
            if alpha_key(copied, free_insensitive=True, keep=keep) not in originals:
                return False
        current, supply = cbn_step(current, supply)[1:]
    return True


def check_projection(t: Term, fuel: int) -> bool:
    """ls steps leave the unfolding unchanged; db steps project to one β step."""
    current, supply = t, Supply()
    for _ in range(fuel):
        step = cbn_step(current, supply)
        if step is None:
            return True
        before, after = unfold(current), unfold(step.term)
        if step.label == "ls":
            if before != after:
                return False
        elif whr_oracle_step(before) != after:
            return False
        current, supply = step.term, step.supply
    return True
