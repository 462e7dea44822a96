"""Printing: canonical core text (with a parser), and named normal forms.

Core text is a compact, unambiguous rendering of explicit-substitution
syntax used in golden files and diagnostics::

    U   El(t)   Pi(A,B)   A[s]          -- types
    lam(t)   app(t)   p2(s)   t[s]      -- terms
    id   comp(s,s')   eps   ext(s,t)   p1(s)   -- substitutions

Normal forms are re-sugared into the surface syntax, inventing binder names
``x``, ``x1``, ``x2``, ... that do not clash with the names in scope.
"""
from __future__ import annotations

import re

from .normal import NApp, NEl, Nf, NLam, NPi, NTy, NU, NVar, Ne, NeuEl, NeuU
from .renaming import Var
from .syntax import (
    App,
    Comp,
    El,
    Empty,
    Ext,
    Id,
    Lam,
    Pi,
    Proj1,
    Proj2,
    SubstTm,
    SubstTy,
    U,
)

# -- core text ---------------------------------------------------------------


def core_text(x) -> str:
    match x:
        case U():
            return "U"
        case El(code):
            return f"El({core_text(code)})"
        case Pi(dom, cod):
            return f"Pi({core_text(dom)},{core_text(cod)})"
        case SubstTy(inner, sub) | SubstTm(inner, sub):
            return f"{core_text(inner)}[{core_text(sub)}]"
        case Lam(body):
            return f"lam({core_text(body)})"
        case App(fn):
            return f"app({core_text(fn)})"
        case Proj2(sub):
            return f"p2({core_text(sub)})"
        case Id():
            return "id"
        case Comp(first, second):
            return f"comp({core_text(first)},{core_text(second)})"
        case Empty():
            return "eps"
        case Ext(sub, tm):
            return f"ext({core_text(sub)},{core_text(tm)})"
        case Proj1(sub):
            return f"p1({core_text(sub)})"
    raise TypeError(f"not core syntax: {x!r}")


class CoreParseError(ValueError):
    pass


_CORE_TOKEN = re.compile(r"\s*([A-Za-z][A-Za-z0-9]*|[()\[\],])")


class _CoreParser:
    def __init__(self, text: str):
        self.tokens, pos = [], 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _CORE_TOKEN.match(text, pos)
            if m is None:
                raise CoreParseError(f"unexpected character at offset {pos}: {text[pos]!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise CoreParseError(f"expected {expected or 'a token'}, found {tok!r}")
        self.i += 1
        return tok

    def postfix(self, x, wrap):
        while self.peek() == "[":
            self.take("[")
            sub = self.sub()
            self.take("]")
            x = wrap(x, sub)
        return x

    def ty(self):
        head = self.take()
        match head:
            case "U":
                x = U()
            case "El":
                self.take("(")
                x = El(self.tm())
                self.take(")")
            case "Pi":
                self.take("(")
                dom = self.ty()
                self.take(",")
                cod = self.ty()
                self.take(")")
                x = Pi(dom, cod)
            case _:
                raise CoreParseError(f"expected a type, found {head!r}")
        return self.postfix(x, SubstTy)

    def tm(self):
        head = self.take()
        self.take("(")
        match head:
            case "lam":
                x = Lam(self.tm())
            case "app":
                x = App(self.tm())
            case "p2":
                x = Proj2(self.sub())
            case _:
                raise CoreParseError(f"expected a term, found {head!r}")
        self.take(")")
        return self.postfix(x, SubstTm)

    def sub(self):
        head = self.take()
        if head == "id":
            return Id()
        if head == "eps":
            return Empty()
        self.take("(")
        match head:
            case "comp":
                first = self.sub()
                self.take(",")
                x = Comp(first, self.sub())
            case "ext":
                rest = self.sub()
                self.take(",")
                x = Ext(rest, self.tm())
            case "p1":
                x = Proj1(self.sub())
            case _:
                raise CoreParseError(f"expected a substitution, found {head!r}")
        self.take(")")
        return x


def parse_core(text: str, sort: str):
    """Inverse of :func:`core_text`; ``sort`` is ``"ty"``, ``"tm"`` or ``"sub"``."""
    p = _CoreParser(text)
    x = {"ty": p.ty, "tm": p.tm, "sub": p.sub}[sort]()
    if p.peek() is not None:
        raise CoreParseError(f"trailing input starting at {p.peek()!r}")
    return x


# -- named normal forms ------------------------------------------------------


def fresh_name(names, base: str = "x") -> str:
    if base not in names:
        return base
    k = 1
    while f"{base}{k}" in names:
        k += 1
    return f"{base}{k}"


def _var_name(x: Var, names) -> str:
    if x.index >= len(names):
        return f"#{x.index}"
    return names[len(names) - 1 - x.index]


def ne_text(ne: Ne, names=()) -> str:
    match ne:
        case NVar(x):
            return _var_name(x, names)
        case NApp(fn, arg):
            return f"{ne_text(fn, names)} {_arg_text(arg, names)}"
    raise TypeError(f"not a neutral term: {ne!r}")


def _arg_text(arg: Nf, names) -> str:
    text = nf_text(arg, names)
    simple = isinstance(arg, (NeuU, NeuEl)) and isinstance(arg.ne, NVar)
    return text if simple else f"({text})"


def nf_text(nf: Nf, names=()) -> str:
    """Surface text of a normal form; ``names`` are the names in scope, innermost last."""
    match nf:
        case NeuU(ne) | NeuEl(ne):
            return ne_text(ne, names)
        case NLam(body):
            x = fresh_name(names)
            return f"\\{x}. {nf_text(body, tuple(names) + (x,))}"
    raise TypeError(f"not a normal form: {nf!r}")


def unembed(tm) -> Nf | None:
    """Recover a normal form from its embedding, or ``None`` if ``tm`` is not one.

    The base-type coercion is always taken to be ``NeuU``; printing does not
    distinguish it from ``NeuEl``.
    """
    ne = _unembed_ne(tm)
    if ne is not None:
        return NeuU(ne)
    if isinstance(tm, Lam):
        body = unembed(tm.body)
        return None if body is None else NLam(body)
    return None


def _unembed_ne(tm) -> Ne | None:
    depth = 0
    while isinstance(tm, SubstTm) and tm.sub == Proj1(Id()):
        tm, depth = tm.tm, depth + 1
    if tm == Proj2(Id()):
        return NVar(Var(depth))
    if depth == 0 and isinstance(tm, SubstTm) and isinstance(tm.tm, App):
        sub = tm.sub
        if isinstance(sub, Ext) and isinstance(sub.sub, Id):
            fn, arg = _unembed_ne(tm.tm.fn), unembed(sub.tm)
            if fn is not None and arg is not None:
                return NApp(fn, arg)
    return None


def nty_text(nty: NTy, names=()) -> str:
    """Surface text of a normal type; ``El`` contents print as normal forms when they are embedded ones."""
    match nty:
        case NU():
            return "U"
        case NEl(code):
            nf = unembed(code)
            if nf is None:
                return f"El {{{core_text(code)}}}"
            return f"El {_arg_text(nf, names)}"
        case NPi(dom, cod):
            x = fresh_name(names)
            return f"({x} : {nty_text(dom, names)}) -> {nty_text(cod, tuple(names) + (x,))}"
    raise TypeError(f"not a normal type: {nty!r}")


def nf_json(nf) -> object:
    """Structured form of a normal form or neutral term, with de Bruijn indices."""
    match nf:
        case NVar(x):
            return {"var": x.index}
        case NApp(fn, arg):
            return {"app": [nf_json(fn), nf_json(arg)]}
        case NeuU(ne):
            return {"neuU": nf_json(ne)}
        case NeuEl(ne):
            return {"neuEl": nf_json(ne)}
        case NLam(body):
            return {"lam": nf_json(body)}
    raise TypeError(f"not a normal form: {nf!r}")
