"""
Concrete syntax of processes:

    proc     := factor { "|" factor }
    factor   := "0" | restrict | input | output | "(" proc ")"
    restrict := "new" NAME "." factor
    output   := NAME "<" NAME [ "," NAME ] ">"
    input    := [ "!" ] NAME "(" NAME [ "," NAME ] ")" "." factor
    NAME     := VAR | "@" VAR

Replicated inputs are unary and plain inputs are binary.
"""

from functools import reduce

import pyparsing as pp

from calculi.errors import ParseError
from calculi.names import special, var
from calculi.parser import VAR

from .process import InB, Nil, Nu, OutB, OutU, Par, Process, RepIn


def _name(toks):
    text = toks[0]
    return special(text[1:]) if text.startswith("@") else var(text)


def _input(s, loc, toks):
    toks = list(toks)
    replicated = toks[0] == "!"
    chan, *binders, cont = toks[1:] if replicated else toks
    if replicated:
        if len(binders) != 1:
            raise pp.ParseFatalException(s, loc, "replicated inputs must be unary")
        return RepIn(chan, binders[0], cont)
    if len(binders) != 2:
        raise pp.ParseFatalException(s, loc, "non-replicated inputs must be binary")
    if binders[0] == binders[1]:
        raise pp.ParseFatalException(s, loc, "input binders must be distinct")
    return InB(chan, binders[0], binders[1], cont)


def _output(toks):
    if len(toks) == 2:
        return OutU(toks[0], toks[1])
    return OutB(toks[0], toks[1], toks[2])


def _build_grammar() -> pp.ParserElement:
    proc = pp.Forward().set_name("process")
    factor = pp.Forward().set_name("factor")
    lparen, rparen, dot, comma = map(pp.Suppress, "().,")

    name = pp.Combine(pp.Optional("@") + VAR).set_name("name")
    name.set_parse_action(_name)

    nil = pp.Literal("0").set_parse_action(lambda: Nil())
    restrict = pp.Suppress(pp.Keyword("new")) + name + dot + factor
    restrict.set_parse_action(lambda toks: Nu(toks[0], toks[1]))
    output = name + pp.Suppress("<") + name + pp.Optional(comma + name) + pp.Suppress(">")
    output.set_parse_action(_output)
    input_ = (
        pp.Optional(pp.Literal("!"))
        + name
        + lparen
        + name
        + pp.Optional(comma + name)
        + rparen
        + dot
        + factor
    )
    input_.set_parse_action(_input)

    factor <<= nil | restrict | input_ | output | (lparen + proc + rparen)
    chain = factor + pp.ZeroOrMore(pp.Suppress("|") + factor)
    chain.set_parse_action(lambda toks: reduce(Par, toks[1:], toks[0]))
    proc <<= chain
    return proc


_GRAMMAR = _build_grammar()


def parse_process(text: str) -> Process:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ParseError(f"syntax error: {e.msg}", e.loc) from None
