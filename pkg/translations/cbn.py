"""
Call-by-name translation, parametrized by a special name a:

    ⟦x⟧a        = x̄⟨a⟩
    ⟦λx.t⟧a     = a(x,b).⟦t⟧b
    ⟦t s⟧a      = νb νx (⟦t⟧b | b̄⟨x,a⟩ | !x(c).⟦s⟧c)       x, b, c fresh
    ⟦t[x/s]⟧a   = νx (⟦t⟧a | !x(b).⟦s⟧b)
"""

from typing import Optional

from calculi.errors import PreconditionError
from calculi.names import Name, Supply, special
from calculi.terms import App, FreshNames, Lam, Sub, Term, Var, names, uniquify_binders
from pi.process import InB, Nu, OutB, OutU, Par, Process, RepIn

DEFAULT_CHANNEL = special("a")


def encode_cbn(
    t: Term, a: Name = DEFAULT_CHANNEL, supply: Optional[Supply] = None
) -> tuple[Process, Supply]:
    if not a.is_special:
        raise PreconditionError(f"the CBN output channel must be a special name, got '{a}'")
    t, supply = uniquify_binders(t, supply=supply)
    fresh = FreshNames(supply, names(t) | {a})

    def go(t: Term, a: Name) -> Process:
        match t:
            case Var(x):
                return OutU(x, a)
            case Lam(x, body):
                b = fresh.special()
                return InB(a, x, b, go(body, b))
            case App(fun, arg):
                b, x, c = fresh.special(), fresh.variable(), fresh.special()
                left = Par(go(fun, b), OutB(b, x, a))
                return Nu(b, Nu(x, Par(left, RepIn(x, c, go(arg, c)))))
            case Sub(body, x, arg):
                b = fresh.special()
                return Nu(x, Par(go(body, a), RepIn(x, b, go(arg, b))))
        raise TypeError(f"not a term: {t!r}")

    result = go(t, a)
    return result, fresh.supply
