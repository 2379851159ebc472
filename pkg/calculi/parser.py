"""
Concrete syntax of terms:

    term  := "\\" VAR "." term | app
    app   := item { item }
    item  := atom { "[" VAR "/" term "]" }
    atom  := VAR | "(" term ")"
    VAR   := [a-z][a-zA-Z0-9_]*
"""

from dataclasses import dataclass
from functools import reduce

import pyparsing as pp

from .errors import ParseError
from .names import var
from .terms import App, Lam, Sub, Term, Var, validate_vker

VAR = pp.Regex(r"[a-z][a-zA-Z0-9_]*").set_name("variable")


@dataclass(frozen=True)
class _Suffix:
    binder: str
    arg: Term


def _build_grammar() -> pp.ParserElement:
    term = pp.Forward().set_name("term")
    lparen, rparen = pp.Suppress("("), pp.Suppress(")")

    variable = VAR.copy().set_parse_action(lambda toks: Var(var(toks[0])))
    atom = variable | (lparen + term + rparen)

    suffix = (pp.Suppress("[") + VAR + pp.Suppress("/") + term + pp.Suppress("]"))
    suffix.set_parse_action(lambda toks: _Suffix(toks[0], toks[1]))

    item = atom + pp.ZeroOrMore(suffix)
    item.set_parse_action(
        lambda toks: reduce(lambda t, s: Sub(t, var(s.binder), s.arg), toks[1:], toks[0])
    )

    app = pp.OneOrMore(item)
    app.set_parse_action(lambda toks: reduce(App, toks[1:], toks[0]))

    lam = pp.Suppress("\\") + VAR + pp.Suppress(".") + term
    lam.set_parse_action(lambda toks: Lam(var(toks[0]), toks[1]))

    term <<= lam | app
    return term


_GRAMMAR = _build_grammar()


def parse_term(text: str) -> Term:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ParseError(f"syntax error: {e.msg}", e.loc) from None


def parse_vterm(text: str) -> Term:
    """Parse with the λ_lsub grammar, then reject non-λ_vker shapes."""
    return validate_vker(parse_term(text))
