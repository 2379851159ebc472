"""
Reduction of processes, in two presentations.

At a distance (the semantics of record; closed under non-blocking contexts,
not under ≡), for x ∉ Δ ∪ Γ:

    N_Δ⟨x̄⟨y,z⟩⟩ | N′_Γ⟨x(y′,z′).P⟩   ⇒⊗   N′_Γ⟨N_Δ⟨P{y′:=y}{z′:=z}⟩⟩
    N_Δ⟨x̄⟨y⟩⟩   | N′_Γ⟨!x(z).P⟩      ⇒!    N′_Γ⟨N_Δ⟨P{z:=y} | !x(z).P⟩⟩

Classic (test oracle only): the same rules with adjacent partners, taken
modulo ≡.
"""

from dataclasses import dataclass
from typing import Literal, Optional

from calculi.context import ContextPath
from calculi.errors import InvalidRedexError
from calculi.names import Name, Supply
from calculi.terms import FreshNames

from .congruence import (
    canonical_key,
    canonical_print,
    congruence_ball,
    nb_positions,
)
from .process import (
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
    free_names,
    names,
    nus,
    par,
    print_process,
    rename,
    rename_free,
)
from .reports import HarmonyReport, KindComparison

KINDS = ("tensor", "bang")


@dataclass(frozen=True)
class PiRedex:
    kind: Literal["tensor", "bang"]
    channel: Name
    anchor: ContextPath
    orientation: Literal["out-left", "out-right"]
    # N_Δ from the output-side child to the output, N′_Γ from the input-side child to the input
    out_path: ContextPath
    in_path: ContextPath

    def describe(self) -> str:
        return f"{self.kind} on {self.channel} ({self.orientation}, depth {len(self.anchor)})"


def _matches(out: Process, inp: Process) -> Optional[str]:
    if isinstance(out, OutB) and isinstance(inp, InB) and out.chan == inp.chan:
        return "tensor"
    if isinstance(out, OutU) and isinstance(inp, RepIn) and out.chan == inp.chan:
        return "bang"
    return None


def _sides(node: Par, strict: bool):
    yield "out-left", node.left, node.right
    if not strict:
        yield "out-right", node.right, node.left


def enumerate_pi_redexes(p: Process, strict: bool = False) -> list[PiRedex]:
    redexes = []
    for anchor, node in nb_positions(p):
        if not isinstance(node, Par):
            continue
        for orientation, out_side, in_side in _sides(node, strict):
            outputs = [
                (path, q)
                for path, q in nb_positions(out_side)
                if isinstance(q, (OutU, OutB)) and q.chan not in path.captured
            ]
            if not outputs:
                continue
            inputs = [
                (path, q)
                for path, q in nb_positions(in_side)
                if isinstance(q, (InB, RepIn)) and q.chan not in path.captured
            ]
            for out_path, out in outputs:
                for in_path, inp in inputs:
                    kind = _matches(out, inp)
                    if kind is not None:
                        redexes.append(
                            PiRedex(kind, out.chan, anchor, orientation, out_path, in_path)
                        )
    return redexes


def _freshen(node: Process, path: ContextPath, clashes: set[Name], fresh: FreshNames):
    """Walk `path`, α-renaming ν-binders in `clashes`; returns the re-derived path and its end."""
    steps = []
    for frame in path.steps:
        if isinstance(frame, NuBody):
            if node.binder in clashes:
                y = fresh.like(node.binder)
                node = Nu(y, rename(node.body, node.binder, y))
            steps.append(NuBody(node.binder))
            node = node.body
        elif isinstance(frame, ParLeft):
            steps.append(ParLeft(node.right))
            node = node.left
        elif isinstance(frame, ParRight):
            steps.append(ParRight(node.left))
            node = node.right
        else:
            raise TypeError(f"unexpected frame on a non-blocking path: {frame!r}")
    return ContextPath(tuple(steps)), node


def apply_pi_redex(
    p: Process, redex: PiRedex, supply: Optional[Supply] = None
) -> tuple[Process, Supply]:
    if redex not in enumerate_pi_redexes(p):
        raise InvalidRedexError(f"not a redex of '{p}': {redex.describe()}")
    fresh = FreshNames(supply, names(p))
    node = redex.anchor.replay(p)
    if redex.orientation == "out-left":
        out_side, in_side = node.left, node.right
    else:
        out_side, in_side = node.right, node.left

    # Γ moves outside N_Δ: it must not capture anything free on the output side.
    gamma_clash = set(redex.in_path.captured & (free_names(out_side) | redex.out_path.captured))
    gamma, inp = _freshen(in_side, redex.in_path, gamma_clash, fresh)
    # the continuation moves under N_Δ
    delta_clash = set(redex.out_path.captured & (free_names(inp) | gamma.captured))
    delta, out = _freshen(out_side, redex.out_path, delta_clash, fresh)

    if redex.kind == "tensor":
        cont, fresh.supply = rename_free(
            inp.cont, {inp.binder1: out.payload1, inp.binder2: out.payload2}, fresh.supply
        )
    else:
        copy, fresh.supply = rename_free(inp.cont, {inp.binder: out.payload}, fresh.supply)
        cont = Par(copy, inp)
    return redex.anchor.plug(gamma.plug(delta.plug(cont))), fresh.supply


def pi_successors(
    p: Process, supply: Optional[Supply] = None, strict: bool = False
) -> list[tuple[PiRedex, Process]]:
    out = []
    for redex in enumerate_pi_redexes(p, strict):
        q, _ = apply_pi_redex(p, redex, supply)
        out.append((redex, q))
    return out


# ----------------------------------------------------------------------------
# Classic reduction modulo ≡


def _adjacent_steps(p: Process) -> list[tuple[str, Process]]:
    """Output-left rules with adjacent partners, closed under non-blocking contexts."""
    out = []
    for path, node in nb_positions(p):
        if not isinstance(node, Par):
            continue
        kind = _matches(node.left, node.right)
        if kind == "tensor":
            o, i = node.left, node.right
            cont, _ = rename_free(i.cont, {i.binder1: o.payload1, i.binder2: o.payload2})
            out.append((kind, path.plug(cont)))
        elif kind == "bang":
            o, i = node.left, node.right
            copy, _ = rename_free(i.cont, {i.binder: o.payload})
            out.append((kind, path.plug(Par(copy, i))))
    return out


def _prenex(p: Process, fresh: FreshNames) -> tuple[list[Name], list[Process]]:
    """
    Scope extrusion, associativity and P | 0 ≡ P applied outside prefixes:
    the restricted names and the parallel components left under them. Every
    extruded binder is α-renamed to a fresh name first.
    """
    if isinstance(p, Nil):
        return [], []
    if isinstance(p, Par):
        left_binders, left = _prenex(p.left, fresh)
        right_binders, right = _prenex(p.right, fresh)
        return left_binders + right_binders, left + right
    if isinstance(p, Nu):
        y = fresh.like(p.binder)
        body, fresh.supply = rename_free(p.body, {p.binder: y}, fresh.supply)
        fresh.avoid |= names(body)
        binders, comps = _prenex(body, fresh)
        return [y] + binders, comps
    return [], [p]


def _pairing_members(p: Process) -> list[Process]:
    """Members νΓ((out | in) | rest) of the ≡-class, one per matching pair of components."""
    binders, comps = _prenex(p, FreshNames(None, names(p)))
    members = []
    for i, out in enumerate(comps):
        if not isinstance(out, (OutU, OutB)):
            continue
        for j, inp in enumerate(comps):
            if i != j and _matches(out, inp):
                rest = [c for k, c in enumerate(comps) if k not in (i, j)]
                pair = Par(out, inp)
                members.append(nus(binders, Par(pair, par(*rest)) if rest else pair))
    return members


def classic_step_oracle(p: Process, depth: int) -> list[tuple[str, Process]]:
    """
    Successors of p under the classic rules taken modulo ≡: the raw rules are
    applied to every member of the ≡-class within `depth` rewrites, plus one
    member per matching output/input pair once restrictions are extruded.
    Results are deduplicated by kind and ≡.
    """
    members = list(congruence_ball(p, depth, grow=False).values()) + _pairing_members(p)
    seen: dict[tuple[str, tuple], Process] = {}
    for member in members:
        for kind, q in _adjacent_steps(member):
            seen.setdefault((kind, canonical_key(q)), q)
    return [(kind, q) for (kind, _), q in seen.items()]


def _by_kind(steps) -> dict[str, dict[tuple, Process]]:
    groups: dict[str, dict[tuple, Process]] = {k: {} for k in KINDS}
    for kind, q in steps:
        groups[kind].setdefault(canonical_key(q), q)
    return groups


def harmony_check(p: Process, depth: int, strict: bool = False) -> HarmonyReport:
    distance = _by_kind((r.kind, q) for r, q in pi_successors(p, strict=strict))
    classic = _by_kind(classic_step_oracle(p, depth))
    kinds = []
    for kind in KINDS:
        kinds.append(
            KindComparison(
                kind=kind,
                distance=sorted(canonical_print(q) for q in distance[kind].values()),
                classic=sorted(canonical_print(q) for q in classic[kind].values()),
                equal=distance[kind].keys() == classic[kind].keys(),
            )
        )
    return HarmonyReport(process=print_process(p), depth=depth, strict=strict, kinds=kinds)


def successor_classes(p: Process, strict: bool = False) -> dict[str, set[tuple]]:
    groups = _by_kind((r.kind, q) for r, q in pi_successors(p, strict=strict))
    return {kind: set(g) for kind, g in groups.items()}


def check_congruence_bisimulation(p: Process, q: Process, strict: bool = False) -> bool:
    """Two congruent processes have the same successors modulo ≡, kind for kind."""
    return successor_classes(p, strict) == successor_classes(q, strict)
