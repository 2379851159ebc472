"""
Term and process generators.

Enumerated terms name every binder after its level (x0, x1, ...) and free
variables after their first occurrence (f0, f1, ...), so each α-class (up to
renaming of free variables) is produced exactly once.
"""

import random
from functools import lru_cache
from itertools import product
from typing import Iterator, Literal, Optional

from calculi.names import Name, special, var
from calculi.terms import App, Lam, Sub, Term, Var, alpha_key, free_vars
from pi.congruence import rewrites
from pi.process import InB, Nil, Nu, OutB, OutU, Par, Process, RepIn

Mode = Literal["lsub", "vker"]


def _binder(level: int) -> Name:
    return var(f"x{level}")


def _free(k: int) -> Name:
    return var(f"f{k}")


def _gen(
    size: int, scope: tuple, nfree: int, closed: bool, vker: bool, value_only: bool = False
) -> Iterator[tuple[Term, int]]:
    if size < 1:
        return
    if size == 1:
        for x in scope:
            yield Var(x), nfree
        if not closed:
            for k in range(nfree):
                yield Var(_free(k)), nfree
            yield Var(_free(nfree)), nfree + 1
        return
    x = _binder(len(scope))
    for body, n in _gen(size - 1, scope + (x,), nfree, closed, vker):
        yield Lam(x, body), n
    if value_only:
        return
    for left in range(1, size - 1):
        right = size - 1 - left
        for fun, n1 in _gen(left, scope, nfree, closed, vker, value_only=vker):
            for arg, n2 in _gen(right, scope, n1, closed, vker):
                yield App(fun, arg), n2
    for left in range(1, size - 1):
        right = size - 1 - left
        for body, n1 in _gen(left, scope + (x,), nfree, closed, vker):
            for arg, n2 in _gen(right, scope, n1, closed, vker):
                yield Sub(body, x, arg), n2


def enumerate_terms(size: int, mode: Mode = "lsub", closed: bool = True) -> Iterator[Term]:
    """Every term of exactly `size` nodes, in a fixed order."""
    for t, _ in _gen(size, (), 0, closed, mode == "vker"):
        yield t


def enumerate_up_to(size: int, mode: Mode = "lsub", closed: bool = True) -> Iterator[Term]:
    for n in range(1, size + 1):
        yield from enumerate_terms(n, mode, closed)


def brute_force_count(size: int, mode: Mode = "lsub", closed: bool = True) -> int:
    """
    Count α-classes by generating raw trees over a fixed pool of names, with
    no care for duplicates, and deduplicating afterwards.
    """
    # one name per node is always enough to realise every α-class
    pool = [var(f"b{k}") for k in range(size)]
    frees = [var(f"v{k}") for k in range(size)] if not closed else []
    vker = mode == "vker"

    def raw(n: int, value_only: bool = False) -> Iterator[Term]:
        if n == 1:
            for x in pool + frees:
                yield Var(x)
            return
        for x in pool:
            for body in raw(n - 1):
                yield Lam(x, body)
        if value_only:
            return
        for left in range(1, n - 1):
            for fun, arg in product(list(raw(left, vker)), list(raw(n - 1 - left))):
                yield App(fun, arg)
        for left in range(1, n - 1):
            for x in pool:
                for body, arg in product(list(raw(left)), list(raw(n - 1 - left))):
                    yield Sub(body, x, arg)

    keys = set()
    for t in raw(size):
        if closed and free_vars(t):
            continue
        keys.add(alpha_key(t, free_insensitive=not closed))
    return len(keys)


# ----------------------------------------------------------------------------
# Random terms


@lru_cache(maxsize=None)
def _count(size: int, scope: int, vker: bool, value_only: bool = False) -> int:
    if size < 1:
        return 0
    if size == 1:
        return scope
    total = _count(size - 1, scope + 1, vker)
    if value_only:
        return total
    for left in range(1, size - 1):
        right = size - 1 - left
        total += _count(left, scope, vker, vker) * _count(right, scope, vker)
        total += _count(left, scope + 1, vker) * _count(right, scope, vker)
    return total


def _sample(size: int, scope: tuple, rng: random.Random, vker: bool, value_only: bool = False) -> Term:
    pick = rng.randrange(_count(size, len(scope), vker, value_only))
    if size == 1:
        return Var(scope[pick])
    x = _binder(len(scope))
    lam = _count(size - 1, len(scope) + 1, vker)
    if pick < lam:
        return Lam(x, _sample(size - 1, scope + (x,), rng, vker))
    pick -= lam
    for left in range(1, size - 1):
        right = size - 1 - left
        apps = _count(left, len(scope), vker, vker) * _count(right, len(scope), vker)
        if pick < apps:
            return App(
                _sample(left, scope, rng, vker, value_only=vker), _sample(right, scope, rng, vker)
            )
        pick -= apps
        subs = _count(left, len(scope) + 1, vker) * _count(right, len(scope), vker)
        if pick < subs:
            return Sub(_sample(left, scope + (x,), rng, vker), x, _sample(right, scope, rng, vker))
        pick -= subs
    raise AssertionError("sample index out of range")


def random_term(size: int, seed: int, mode: Mode = "lsub", closed: bool = True) -> Optional[Term]:
    """
    Uniformly random term of exactly `size` nodes; open terms draw free
    variables from f0..f2. None when no term of that size exists.
    """
    scope = () if closed else tuple(_free(k) for k in range(3))
    vker = mode == "vker"
    if _count(size, len(scope), vker) == 0:
        return None
    return _sample(size, scope, random.Random(seed), vker)


# ----------------------------------------------------------------------------
# Random processes

FREE_NAMES = (var("x"), var("y"), special("a"), special("b"))


def random_process(size: int, seed: int) -> Process:
    """
    Random process of exactly `size` nodes over a small pool of free names,
    so that matching outputs and inputs are common.
    """
    rng = random.Random(seed)

    def name(scope: tuple) -> Name:
        return rng.choice(FREE_NAMES + scope)

    def binder(depth: int) -> Name:
        return var(f"n{depth}") if rng.random() < 0.5 else special(f"n{depth}")

    def gen(n: int, scope: tuple) -> Process:
        if n == 1:
            roll = rng.randrange(5)
            if roll == 0:
                return Nil()
            if roll < 3:
                return OutU(name(scope), name(scope))
            return OutB(name(scope), name(scope), name(scope))
        roll = rng.randrange(4)
        depth = len(scope)
        if roll == 0:
            x = binder(depth)
            return Nu(x, gen(n - 1, scope + (x,)))
        if roll == 1:
            y, z = binder(depth), binder(depth + 1)
            return InB(name(scope), y, z, gen(n - 1, scope + (y, z)))
        if roll == 2:
            y = binder(depth)
            return RepIn(name(scope), y, gen(n - 1, scope + (y,)))
        if n < 3:
            return gen(n, scope)
        left = rng.randrange(1, n - 1)
        return Par(gen(left, scope), gen(n - 1 - left, scope))

    return gen(size, ())


def random_congruent_variant(p: Process, steps: int, seed: int) -> Process:
    """Apply `steps` randomly chosen generating rules of ≡."""
    rng = random.Random(seed)
    for _ in range(steps):
        candidates = rewrites(p)
        if not candidates:
            break
        _, p = rng.choice(candidates)
    return p
