"""
Call-by-value translation of λ_vker, parametrized by a variable x ∉ fv(t),
with an auxiliary translation of values parametrized by a special name a:

    ⟦v⟧x        = !x(a).⟦v⟧a
    ⟦v s⟧x      = νb νy (⟦v⟧b | b̄⟨y,x⟩ | ⟦s⟧y)        y, b fresh
    ⟦s[y/u]⟧x   = νy (⟦s⟧x | ⟦u⟧y)

    ⟦y⟧a        = ȳ⟨a⟩
    ⟦λy.s⟧a     = a(y,z).⟦s⟧z                         z fresh
"""

from typing import Optional

from calculi.errors import PreconditionError
from calculi.names import Name, Supply
from calculi.terms import (
    App,
    FreshNames,
    Lam,
    Sub,
    Term,
    Var,
    free_vars,
    is_value,
    names,
    uniquify_binders,
    validate_vker,
)
from pi.process import InB, Nu, OutB, OutU, Par, Process, RepIn


class _Encoder:
    def __init__(self, fresh: FreshNames):
        self.fresh = fresh

    def term(self, t: Term, x: Name) -> Process:
        match t:
            case Var() | Lam():
                a = self.fresh.special()
                return RepIn(x, a, self.value(t, a))
            case App(fun, arg):
                b, y = self.fresh.special(), self.fresh.variable()
                left = Par(self.value(fun, b), OutB(b, y, x))
                return Nu(b, Nu(y, Par(left, self.term(arg, y))))
            case Sub(body, y, arg):
                return Nu(y, Par(self.term(body, x), self.term(arg, y)))
        raise TypeError(f"not a term: {t!r}")

    def value(self, v: Term, a: Name) -> Process:
        match v:
            case Var(y):
                return OutU(y, a)
            case Lam(y, body):
                z = self.fresh.variable()
                return InB(a, y, z, self.term(body, z))
        raise PreconditionError(f"not a value: '{v}'")


def encode_cbv(
    t: Term, x: Optional[Name] = None, supply: Optional[Supply] = None
) -> tuple[Process, Supply]:
    """With no parameter given, a fresh variable is picked."""
    validate_vker(t)
    if x is not None:
        if x.is_special:
            raise PreconditionError(f"the CBV parameter must be a variable, got '{x}'")
        if x in free_vars(t):
            raise PreconditionError(f"the CBV parameter '{x}' is free in '{t}'")
    avoid = {x} if x is not None else set()
    t, supply = uniquify_binders(t, avoid, supply)
    fresh = FreshNames(supply, names(t) | avoid)
    if x is None:
        x = fresh.variable()
    result = _Encoder(fresh).term(t, x)
    return result, fresh.supply


def encode_cbv_value(
    v: Term, a: Name, supply: Optional[Supply] = None
) -> tuple[Process, Supply]:
    if not is_value(v):
        raise PreconditionError(f"not a value: '{v}'")
    if not a.is_special:
        raise PreconditionError(f"the value channel must be a special name, got '{a}'")
    validate_vker(v)
    v, supply = uniquify_binders(v, supply=supply)
    fresh = FreshNames(supply, names(v) | {a})
    result = _Encoder(fresh).value(v, a)
    return result, fresh.supply
