"""Surface syntax with named variables, and its recursive-descent parser.

Grammar::

    file  ::= item*
    item  ::= "assume" IDENT ":" expr  |  "check" expr ":" expr
    expr  ::= "\\" IDENT+ "." expr
            | "(" IDENT ":" expr ")" "->" expr
            | app
    app   ::= atom+                      -- left-associative juxtaposition
    atom  ::= IDENT | "U" | "El" app | "(" expr ")" | "(" expr ":" expr ")"
            | "\\" ...                   -- a trailing lambda argument

Identifiers are ``[A-Za-z][A-Za-z0-9_']*`` minus the keywords ``U``, ``El``,
``assume`` and ``check``; ``--`` starts a comment that runs to end of line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

KEYWORDS = frozenset({"U", "El", "assume", "check"})


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message, self.line, self.col = message, line, col


# -- syntax ------------------------------------------------------------------

_pos = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class SVar:
    name: str
    pos: tuple | None = _pos


@dataclass(frozen=True)
class SLam:
    name: str
    body: "SurfaceTerm"
    pos: tuple | None = _pos


@dataclass(frozen=True)
class SApp:
    fn: "SurfaceTerm"
    arg: "SurfaceTerm"
    pos: tuple | None = _pos


@dataclass(frozen=True)
class SU:
    pos: tuple | None = _pos


@dataclass(frozen=True)
class SEl:
    code: "SurfaceTerm"
    pos: tuple | None = _pos


@dataclass(frozen=True)
class SPi:
    name: str
    dom: "SurfaceTerm"
    cod: "SurfaceTerm"
    pos: tuple | None = _pos


@dataclass(frozen=True)
class SAnn:
    term: "SurfaceTerm"
    ty: "SurfaceTerm"
    pos: tuple | None = _pos


SurfaceTerm = Union[SVar, SLam, SApp, SU, SEl, SPi, SAnn]


@dataclass(frozen=True)
class Assume:
    name: str
    ty: SurfaceTerm
    pos: tuple | None = _pos


@dataclass(frozen=True)
class Check:
    term: SurfaceTerm
    ty: SurfaceTerm
    pos: tuple | None = _pos


Item = Union[Assume, Check]


def surface_size(e: SurfaceTerm) -> int:
    match e:
        case SVar() | SU():
            return 1
        case SLam(_, body) | SEl(body):
            return 1 + surface_size(body)
        case SApp(a, b) | SAnn(a, b) | SPi(_, a, b):
            return 1 + surface_size(a) + surface_size(b)
    raise TypeError(f"not a surface term: {e!r}")


# -- lexer -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "ident", "kw", "sym", "eof"
    text: str
    line: int
    col: int


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>--[^\n]*)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_']*)|(?P<sym>->|[()\\:.])"
)


def tokenize(text: str) -> list[Token]:
    tokens, line, line_start, i = [], 1, 0, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        col = i - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind == "ident":
            word = m.group()
            tokens.append(Token("kw" if word in KEYWORDS else "ident", word, line, col))
        elif kind == "sym":
            tokens.append(Token("sym", m.group(), line, col))
        i = m.end()
    tokens.append(Token("eof", "", line, i - line_start + 1))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "kw") and self.tok.text == text

    def fail(self, message: str):
        raise ParseError(message, self.tok.line, self.tok.col)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            self.fail(f"expected {text!r}, found {found!r}")
        return self.advance()

    def ident(self) -> Token:
        if self.tok.kind != "ident":
            self.fail(f"expected an identifier, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def file(self) -> list[Item]:
        items = []
        while self.tok.kind != "eof":
            start = self.tok
            if self.at("assume"):
                self.advance()
                name = self.ident().text
                self.expect(":")
                items.append(Assume(name, self.expr(), (start.line, start.col)))
            elif self.at("check"):
                self.advance()
                term = self.expr()
                self.expect(":")
                items.append(Check(term, self.expr(), (start.line, start.col)))
            else:
                self.fail(f"expected 'assume' or 'check', found {self.tok.text!r}")
        return items

    def expr(self) -> SurfaceTerm:
        if self.at("\\"):
            return self.lam()
        return self.app()

    def lam(self) -> SurfaceTerm:
        start = self.expect("\\")
        names = [self.ident().text]
        while self.tok.kind == "ident":
            names.append(self.advance().text)
        self.expect(".")
        body = self.expr()
        for name in reversed(names):
            body = SLam(name, body, (start.line, start.col))
        return body

    def app(self) -> SurfaceTerm:
        start = self.tok
        head = self.atom()
        if isinstance(head, SPi):
            return head
        while self.starts_atom():
            if self.at("\\"):
                return SApp(head, self.lam(), (start.line, start.col))
            head = SApp(head, self.atom(), (start.line, start.col))
        return head

    def starts_atom(self) -> bool:
        return self.tok.kind == "ident" or self.at("U") or self.at("El") or self.at("(") or self.at("\\")

    def atom(self) -> SurfaceTerm:
        tok = self.tok
        pos = (tok.line, tok.col)
        if tok.kind == "ident":
            self.advance()
            return SVar(tok.text, pos)
        if self.at("U"):
            self.advance()
            return SU(pos)
        if self.at("El"):
            self.advance()
            if not self.starts_atom():
                self.fail("expected an argument to El")
            return SEl(self.app(), pos)
        if self.at("\\"):
            return self.lam()
        if self.at("("):
            self.advance()
            inner = self.expr()
            if self.at(":"):
                self.advance()
                ty = self.expr()
                self.expect(")")
                if self.at("->"):
                    if not isinstance(inner, SVar):
                        raise ParseError("the binder of a Pi type must be a name", *pos)
                    self.advance()
                    return SPi(inner.name, ty, self.expr(), pos)
                return SAnn(inner, ty, pos)
            self.expect(")")
            return inner
        self.fail(f"expected an expression, found {tok.text or 'end of input'!r}")


def parse(text: str | bytes) -> list[Item]:
    """Parse a whole file into toplevel items."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return _Parser(text).file()


def parse_expr(text: str) -> SurfaceTerm:
    p = _Parser(text)
    e = p.expr()
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.tok.text!r} after expression")
    return e
