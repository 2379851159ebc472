from typing import Callable, Iterator, TypeVar

from calculi.errors import WorkbenchError
from calculi.terms import App, Lam, Sub, Term, Var
from pi.process import NIL, InB, Nil, Nu, Par, Process, RepIn

T = TypeVar("T")


def smaller_terms(t: Term) -> Iterator[Term]:
    """Terms obtained by replacing one node with one of its children."""
    match t:
        case Var():
            return
        case Lam(binder=x, body=body):
            yield body
            for b in smaller_terms(body):
                yield Lam(x, b)
        case App(fun=fun, arg=arg):
            yield fun
            yield arg
            for f in smaller_terms(fun):
                yield App(f, arg)
            for a in smaller_terms(arg):
                yield App(fun, a)
        case Sub(body=body, binder=x, arg=arg):
            yield body
            yield arg
            for b in smaller_terms(body):
                yield Sub(b, x, arg)
            for a in smaller_terms(arg):
                yield Sub(body, x, a)


def smaller_processes(p: Process) -> Iterator[Process]:
    """Processes obtained by dropping a node, or replacing it with 0."""
    if not isinstance(p, Nil):
        yield NIL
    match p:
        case Nu(binder=x, body=body):
            yield body
            for b in smaller_processes(body):
                yield Nu(x, b)
        case InB(chan=c, binder1=y, binder2=z, cont=cont):
            yield cont
            for k in smaller_processes(cont):
                yield InB(c, y, z, k)
        case RepIn(chan=c, binder=y, cont=cont):
            yield cont
            for k in smaller_processes(cont):
                yield RepIn(c, y, k)
        case Par(left=left, right=right):
            yield left
            yield right
            for l in smaller_processes(left):
                yield Par(l, right)
            for r in smaller_processes(right):
                yield Par(left, r)


def _fails(still_fails: Callable[[T], bool], candidate: T) -> bool:
    try:
        return still_fails(candidate)
    except WorkbenchError:
        return False


def _shrink(value: T, candidates: Callable[[T], Iterator[T]], still_fails: Callable[[T], bool]) -> T:
    while True:
        for candidate in candidates(value):
            if _fails(still_fails, candidate):
                value = candidate
                break
        else:
            return value


def shrink_term(t: Term, still_fails: Callable[[Term], bool]) -> Term:
    """Greedy: take the first smaller term that still fails, until none does."""
    return _shrink(t, smaller_terms, still_fails)


def shrink_process(p: Process, still_fails: Callable[[Process], bool]) -> Process:
    return _shrink(p, smaller_processes, still_fails)
