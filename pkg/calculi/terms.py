"""
Syntax of the linear substitution calculus (λ_lsub) and of the value
substitution kernel (λ_vker).

Both calculi share one tree type. A λ_vker term is a `Term` whose application
nodes have a value (variable or abstraction) in function position; `vapp` and
`validate_vker` enforce that shape. Term equality is α-equivalence.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import AbstractSet, Iterator, Optional, Union

from .errors import ShapeError
from .names import Name, Supply


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
        return print_term(self)


@dataclass(frozen=True, eq=False)
class Var(_Node):
    name: Name


@dataclass(frozen=True, eq=False)
class Lam(_Node):
    binder: Name
    body: "Term"


@dataclass(frozen=True, eq=False)
class App(_Node):
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True, eq=False)
class Sub(_Node):
    """t[x/s]: binds `binder` in `body` only."""

    body: "Term"
    binder: Name
    arg: "Term"


Term = Union[Var, Lam, App, Sub]
Value = Union[Var, Lam]


# ----------------------------------------------------------------------------
# Context frames


@dataclass(frozen=True)
class AppFun:
    arg: Term
    binder = None

    def plug(self, child: Term) -> Term:
        return App(child, self.arg)

    def select(self, node: App) -> Term:
        return node.fun


@dataclass(frozen=True)
class AppArg:
    fun: Term
    binder = None

    def plug(self, child: Term) -> Term:
        return App(self.fun, child)

    def select(self, node: App) -> Term:
        return node.arg


@dataclass(frozen=True)
class SubBody:
    binder: Name
    arg: Term

    def plug(self, child: Term) -> Term:
        return Sub(child, self.binder, self.arg)

    def select(self, node: Sub) -> Term:
        return node.body


@dataclass(frozen=True)
class SubArg:
    body: Term
    sub_binder: Name
    binder = None

    def plug(self, child: Term) -> Term:
        return Sub(self.body, self.sub_binder, child)

    def select(self, node: Sub) -> Term:
        return node.arg


# ----------------------------------------------------------------------------
# Names


def free_vars(t: Term) -> frozenset[Name]:
    match t:
        case Var(name):
            return frozenset({name})
        case Lam(x, body):
            return free_vars(body) - {x}
        case App(fun, arg):
            return free_vars(fun) | free_vars(arg)
        case Sub(body, x, arg):
            return (free_vars(body) - {x}) | free_vars(arg)
    raise TypeError(f"not a term: {t!r}")


def names(t: Term) -> frozenset[Name]:
    """Every name occurring in t, bound or free, binders included."""
    match t:
        case Var(name):
            return frozenset({name})
        case Lam(x, body):
            return names(body) | {x}
        case App(fun, arg):
            return names(fun) | names(arg)
        case Sub(body, x, arg):
            return names(body) | names(arg) | {x}
    raise TypeError(f"not a term: {t!r}")


def alpha_key(
    t: Term, free_insensitive: bool = False, keep: AbstractSet[Name] = frozenset()
) -> tuple:
    """
    α-invariant key: bound occurrences become de Bruijn levels. With
    `free_insensitive`, free names outside `keep` are numbered by first
    occurrence, so the key identifies terms up to α and injective renaming of
    those free variables.
    """
    free_ids: dict[Name, int] = {}

    def go(t: Term, env: dict[Name, int], depth: int) -> tuple:
        match t:
            case Var(name):
                if name in env:
                    return ("b", env[name])
                if free_insensitive and name not in keep:
                    return ("f", free_ids.setdefault(name, len(free_ids)))
                return ("f", name.kind, name.id)
            case Lam(x, body):
                return ("lam", go(body, {**env, x: depth}, depth + 1))
            case App(fun, arg):
                return ("app", go(fun, env, depth), go(arg, env, depth))
            case Sub(body, x, arg):
                return (
                    "sub",
                    go(body, {**env, x: depth}, depth + 1),
                    go(arg, env, depth),
                )
        raise TypeError(f"not a term: {t!r}")

    return go(t, {}, 0)


def alpha_eq(a: Term, b: Term) -> bool:
    return alpha_key(a) == alpha_key(b)


class FreshNames:
    """Mutable cursor over a Supply, owned by a single top-level operation."""

    def __init__(self, supply: Optional[Supply], avoid: AbstractSet[Name]):
        self.supply = supply or Supply()
        self.avoid = set(avoid)

    def like(self, name: Name) -> Name:
        fresh, self.supply = self.supply.fresh_like(name, self.avoid)
        self.avoid.add(fresh)
        return fresh

    def variable(self) -> Name:
        fresh, self.supply = self.supply.fresh_variable(self.avoid)
        self.avoid.add(fresh)
        return fresh

    def special(self) -> Name:
        fresh, self.supply = self.supply.fresh_special(self.avoid)
        self.avoid.add(fresh)
        return fresh


def rename(t: Term, old: Name, new: Name) -> Term:
    """Replace free occurrences of `old`; `new` must not occur in t."""
    match t:
        case Var(name):
            return Var(new) if name == old else t
        case Lam(x, body):
            return t if x == old else Lam(x, rename(body, old, new))
        case App(fun, arg):
            return App(rename(fun, old, new), rename(arg, old, new))
        case Sub(body, x, arg):
            body = body if x == old else rename(body, old, new)
            return Sub(body, x, rename(arg, old, new))
    raise TypeError(f"not a term: {t!r}")


def meta_subst(t: Term, x: Name, s: Term, supply: Optional[Supply] = None) -> Term:
    """Capture-avoiding t{x:=s}; clashing binders get fresh names."""
    fresh = FreshNames(supply, names(t) | names(s) | {x})
    fv_s = free_vars(s)

    def under(y: Name, body: Term) -> tuple[Name, Term]:
        if y in fv_s and x in free_vars(body):
            y2 = fresh.like(y)
            body = rename(body, y, y2)
            y = y2
        return y, go(body)

    def go(t: Term) -> Term:
        match t:
            case Var(name):
                return s if name == x else t
            case Lam(y, body):
                if y == x:
                    return t
                return Lam(*under(y, body))
            case App(fun, arg):
                return App(go(fun), go(arg))
            case Sub(body, y, arg):
                arg = go(arg)
                if y == x:
                    return Sub(body, y, arg)
                y, body = under(y, body)
                return Sub(body, y, arg)
        raise TypeError(f"not a term: {t!r}")

    return go(t)


def unfold(t: Term) -> Term:
    """Execute every explicit substitution: unfold(t[x/s]) = unfold(t){x:=unfold(s)}."""
    match t:
        case Var():
            return t
        case Lam(x, body):
            return Lam(x, unfold(body))
        case App(fun, arg):
            return App(unfold(fun), unfold(arg))
        case Sub(body, x, arg):
            return meta_subst(unfold(body), x, unfold(arg))
    raise TypeError(f"not a term: {t!r}")


def uniquify_binders(
    t: Term, avoid: AbstractSet[Name] = frozenset(), supply: Optional[Supply] = None
) -> tuple[Term, Supply]:
    """
    α-rename t so that binders are pairwise distinct and distinct from its
    free variables and from `avoid`.
    """
    seen = set(free_vars(t)) | set(avoid)
    fresh = FreshNames(supply, names(t) | seen)

    def bind(y: Name, body: Term) -> tuple[Name, Term]:
        if y in seen:
            y2 = fresh.like(y)
            body = rename(body, y, y2)
            y = y2
        seen.add(y)
        return y, go(body)

    def go(t: Term) -> Term:
        match t:
            case Var():
                return t
            case Lam(y, body):
                return Lam(*bind(y, body))
            case App(fun, arg):
                fun = go(fun)
                return App(fun, go(arg))
            case Sub(body, y, arg):
                y, body = bind(y, body)
                return Sub(body, y, go(arg))
        raise TypeError(f"not a term: {t!r}")

    result = go(t)
    return result, fresh.supply


def fresh_copy(t: Term, avoid: AbstractSet[Name], supply: Supply) -> tuple[Term, Supply]:
    """α-rename every binder of t to a brand new name."""
    fresh = FreshNames(supply, names(t) | set(avoid))

    def go(t: Term) -> Term:
        match t:
            case Var():
                return t
            case Lam(y, body):
                y2 = fresh.like(y)
                return Lam(y2, go(rename(body, y, y2)))
            case App(fun, arg):
                fun = go(fun)
                return App(fun, go(arg))
            case Sub(body, y, arg):
                y2 = fresh.like(y)
                body = go(rename(body, y, y2))
                return Sub(body, y2, go(arg))
        raise TypeError(f"not a term: {t!r}")

    result = go(t)
    return result, fresh.supply


# ----------------------------------------------------------------------------
# Shape


def size(t: Term) -> int:
    match t:
        case Var():
            return 1
        case Lam(_, body):
            return 1 + size(body)
        case App(fun, arg):
            return 1 + size(fun) + size(arg)
        case Sub(body, _, arg):
            return 1 + size(body) + size(arg)
    raise TypeError(f"not a term: {t!r}")


def subterms(t: Term) -> Iterator[Term]:
    yield t
    match t:
        case Lam(_, body):
            yield from subterms(body)
        case App(fun, arg):
            yield from subterms(fun)
            yield from subterms(arg)
        case Sub(body, _, arg):
            yield from subterms(body)
            yield from subterms(arg)


def is_value(t: Term) -> bool:
    return isinstance(t, (Var, Lam))


def values_of(t: Term) -> Iterator[Term]:
    return (u for u in subterms(t) if is_value(u))


def is_pure(t: Term) -> bool:
    return not any(isinstance(u, Sub) for u in subterms(t))


def is_vker(t: Term) -> bool:
    return all(is_value(u.fun) for u in subterms(t) if isinstance(u, App))


def validate_vker(t: Term) -> Term:
    for u in subterms(t):
        if isinstance(u, App) and not is_value(u.fun):
            raise ShapeError(
                f"not a λ_vker term: function position of '{u}' is not a value"
            )
    return t


def vapp(fun: Term, arg: Term) -> App:
    if not is_value(fun):
        raise ShapeError(f"function position '{fun}' is not a value")
    return App(fun, arg)


# ----------------------------------------------------------------------------
# Printing


def print_term(t: Term) -> str:
    def term(t: Term) -> str:
        if isinstance(t, Lam):
            return f"\\{t.binder}. {term(t.body)}"
        return app(t)

    def app(t: Term) -> str:
        if isinstance(t, App):
            return f"{app(t.fun)} {item(t.arg)}"
        return item(t)

    def item(t: Term) -> str:
        if isinstance(t, Sub):
            return f"{item(t.body)}[{t.binder}/{term(t.arg)}]"
        return atom(t)

    def atom(t: Term) -> str:
        if isinstance(t, Var):
            return str(t.name)
        return f"({term(t)})"

    return term(t)


def level_prefix(taken: AbstractSet[str]) -> str:
    for prefix in "vuwkpq":
        if not any(i.startswith(prefix) and i[1:].isdigit() for i in taken):
            return prefix
    return "v_"


def canonical_form(t: Term) -> Term:
    """Rename every binder after its de Bruijn level."""
    prefix = level_prefix({n.id for n in free_vars(t)})

    def go(t: Term, env: dict[Name, Name], depth: int) -> Term:
        match t:
            case Var(name):
                return Var(env.get(name, name))
            case Lam(x, body):
                y = Name("variable", f"{prefix}{depth}")
                return Lam(y, go(body, {**env, x: y}, depth + 1))
            case App(fun, arg):
                return App(go(fun, env, depth), go(arg, env, depth))
            case Sub(body, x, arg):
                y = Name("variable", f"{prefix}{depth}")
                return Sub(go(body, {**env, x: y}, depth + 1), y, go(arg, env, depth))
        raise TypeError(f"not a term: {t!r}")

    return go(t, {}, 0)


def canonical_print(t: Term) -> str:
    return print_term(canonical_form(t))
