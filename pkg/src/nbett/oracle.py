"""Reduction-based conversion oracle, independent of the evaluator.

Both sides are rewritten with the conversion axioms, oriented, until they
meet:

* the substitution axioms (``[id] [][] U[] El[] Pi[] id∘ ∘id ∘∘ εη π₁β πη
  ,∘ π₂β lam[]``) are applied exhaustively by translating into plain de
  Bruijn lambda terms with a meta-level substitution;
* ``Πβ`` is applied in rounds of parallel reduction, at most ``depth`` of
  them per side;
* ``Πη`` is applied in the expanding direction, guided by the simple-type
  skeleton of each type.  Types have no large elimination, so the skeleton
  never depends on a term.

The verdict is three-valued: ``EQUAL`` when a common reduct is found,
``NOT_EQUAL`` when both sides reach distinct normal forms within the depth,
``UNKNOWN`` when the depth runs out first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .config import DEFAULT_ORACLE_DEPTH
from .syntax import (
    App,
    Comp,
    Context,
    El,
    Empty,
    Ext,
    Id,
    Lam,
    Pi,
    Proj1,
    Proj2,
    Subst,
    SubstTm,
    SubstTy,
    Term,
    Type,
    U,
)


class Verdict(enum.Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal-within-depth"
    UNKNOWN = "unknown"


class OracleError(ValueError):
    """Input is not well-formed enough to compare."""


# -- lambda terms with de Bruijn indices -------------------------------------


@dataclass(frozen=True, slots=True)
class LVar:
    index: int


@dataclass(frozen=True, slots=True)
class LLam:
    body: "LTerm"


@dataclass(frozen=True, slots=True)
class LApp:
    fn: "LTerm"
    arg: "LTerm"


@dataclass(frozen=True, slots=True)
class LU:
    pass


@dataclass(frozen=True, slots=True)
class LEl:
    code: "LTerm"


@dataclass(frozen=True, slots=True)
class LPi:
    dom: "LType"
    cod: "LType"


LTerm = Union[LVar, LLam, LApp]
LType = Union[LU, LEl, LPi]


@dataclass(frozen=True, slots=True)
class LSub:
    """Index ``i`` maps to ``terms[i]``, or past the end to a shifted variable."""

    terms: tuple = ()
    shift: int = 0

    def lookup(self, i: int) -> LTerm:
        n = len(self.terms)
        return self.terms[i] if i < n else LVar(i - n + self.shift)

    def tail(self) -> "LSub":
        if self.terms:
            return LSub(self.terms[1:], self.shift)
        return LSub((), self.shift + 1)

    def drop(self, k: int) -> "LSub":
        n = len(self.terms)
        return LSub(self.terms[k:], self.shift + max(0, k - n))

    def lift(self) -> "LSub":
        return LSub((LVar(0),) + tuple(shift(t, 1) for t in self.terms), self.shift + 1)


def shift(t: LTerm, k: int) -> LTerm:
    return t if k == 0 else subst(t, LSub((), k))


def subst(t: LTerm, s: LSub) -> LTerm:
    if not s.terms and s.shift == 0:
        return t
    match t:
        case LVar(i):
            return s.lookup(i)
        case LLam(body):
            return LLam(subst(body, s.lift()))
        case LApp(fn, arg):
            return LApp(subst(fn, s), subst(arg, s))
    raise OracleError(f"not a lambda term: {t!r}")


def subst_ty(a: LType, s: LSub) -> LType:
    match a:
        case LU():
            return a
        case LEl(code):
            return LEl(subst(code, s))
        case LPi(dom, cod):
            return LPi(subst_ty(dom, s), subst_ty(cod, s.lift()))
    raise OracleError(f"not a lambda type: {a!r}")


def compose(first: LSub, second: LSub) -> LSub:
    """``first o second``: apply ``first`` then substitute ``second`` into it."""
    rest = second.drop(first.shift)
    return LSub(tuple(subst(t, second) for t in first.terms) + rest.terms, rest.shift)


# -- substitution elimination ------------------------------------------------


@lru_cache(maxsize=1 << 16)
def translate_tm(tm: Term) -> LTerm:
    match tm:
        case SubstTm(inner, sub):
            return subst(translate_tm(inner), translate_sub(sub))
        case Proj2(sub):
            return translate_sub(sub).lookup(0)
        case Lam(body):
            return LLam(translate_tm(body))
        case App(fn):
            return LApp(shift(translate_tm(fn), 1), LVar(0))
    raise OracleError(f"not a term: {tm!r}")


@lru_cache(maxsize=1 << 16)
def translate_sub(sub: Subst) -> LSub:
    match sub:
        case Id() | Empty():
            return LSub()
        case Comp(first, second):
            return compose(translate_sub(first), translate_sub(second))
        case Ext(rest, tm):
            r = translate_sub(rest)
            return LSub((translate_tm(tm),) + r.terms, r.shift)
        case Proj1(inner):
            return translate_sub(inner).tail()
    raise OracleError(f"not a substitution: {sub!r}")


def translate_ty(ty: Type) -> LType:
    match ty:
        case U():
            return LU()
        case El(code):
            return LEl(translate_tm(code))
        case Pi(dom, cod):
            return LPi(translate_ty(dom), translate_ty(cod))
        case SubstTy(inner, sub):
            return subst_ty(translate_ty(inner), translate_sub(sub))
    raise OracleError(f"not a type: {ty!r}")


# -- beta --------------------------------------------------------------------


def has_redex(t: LTerm) -> bool:
    match t:
        case LVar(_):
            return False
        case LLam(body):
            return has_redex(body)
        case LApp(LLam(_), _):
            return True
        case LApp(fn, arg):
            return has_redex(fn) or has_redex(arg)
    raise OracleError(f"not a lambda term: {t!r}")


def parallel_beta(t: LTerm) -> LTerm:
    """Contract every redex present in ``t`` simultaneously."""
    match t:
        case LVar(_):
            return t
        case LLam(body):
            return LLam(parallel_beta(body))
        case LApp(LLam(body), arg):
            return subst(parallel_beta(body), LSub((parallel_beta(arg),), 0))
        case LApp(fn, arg):
            return LApp(parallel_beta(fn), parallel_beta(arg))
    raise OracleError(f"not a lambda term: {t!r}")


@lru_cache(maxsize=1 << 16)
def beta_normalize(t: LTerm, depth: int) -> tuple[LTerm, bool]:
    """At most ``depth`` rounds of parallel beta; the flag says whether a normal form was reached."""
    for _ in range(depth):
        if not has_redex(t):
            return t, True
        t = parallel_beta(t)
    return t, not has_redex(t)


# -- eta, by skeleton --------------------------------------------------------

BASE = "o"


@dataclass(frozen=True, slots=True)
class Arrow:
    dom: "Skeleton"
    cod: "Skeleton"


Skeleton = Union[str, Arrow]


def skeleton(ty) -> Skeleton:
    match ty:
        case U() | El(_) | LU() | LEl(_):
            return BASE
        case Pi(dom, cod) | LPi(dom, cod):
            return Arrow(skeleton(dom), skeleton(cod))
        case SubstTy(inner, _):
            return skeleton(inner)
    raise OracleError(f"not a type: {ty!r}")


def eta_expand(t: LTerm, sk: Skeleton, ctx: tuple) -> LTerm:
    """Eta-long form of a beta-normal term; ``ctx`` holds skeletons, innermost last."""
    if isinstance(sk, Arrow):
        inner = ctx + (sk.dom,)
        if isinstance(t, LLam):
            return LLam(eta_expand(t.body, sk.cod, inner))
        return LLam(eta_expand(LApp(shift(t, 1), LVar(0)), sk.cod, inner))
    args = []
    head = t
    while isinstance(head, LApp):
        args.append(head.arg)
        head = head.fn
    if not isinstance(head, LVar) or head.index >= len(ctx):
        raise OracleError(f"not a neutral term at base type: {t!r}")
    head_sk = ctx[-1 - head.index]
    out: LTerm = head
    for arg in reversed(args):
        if not isinstance(head_sk, Arrow):
            raise OracleError("too many arguments for the head variable")
        out = LApp(out, eta_expand(arg, head_sk.dom, ctx))
        head_sk = head_sk.cod
    if isinstance(head_sk, Arrow):
        raise OracleError("partially applied neutral term at base type")
    return out


# -- verdicts ----------------------------------------------------------------


def _ctx_skeleton(ctx: Context) -> tuple:
    return tuple(skeleton(a) for a in ctx)


def _normal_tm(t: LTerm, sk: Skeleton, ctx_sk: tuple, depth: int) -> tuple[LTerm, bool]:
    t, done = beta_normalize(t, depth)
    return (eta_expand(t, sk, ctx_sk), True) if done else (t, False)


def _normal_ty(a: LType, ctx_sk: tuple, depth: int) -> tuple[LType, bool]:
    match a:
        case LU():
            return a, True
        case LEl(code):
            code, done = _normal_tm(code, BASE, ctx_sk, depth)
            return LEl(code), done
        case LPi(dom, cod):
            d, done_d = _normal_ty(dom, ctx_sk, depth)
            c, done_c = _normal_ty(cod, ctx_sk + (skeleton(dom),), depth)
            return LPi(d, c), done_d and done_c
    raise OracleError(f"not a lambda type: {a!r}")


def _decide(pair0, pair1) -> Verdict:
    (n0, done0), (n1, done1) = pair0, pair1
    if n0 == n1:
        return Verdict.EQUAL
    if done0 and done1:
        return Verdict.NOT_EQUAL
    return Verdict.UNKNOWN


def rewrite_oracle(ctx: Context, ty: Type, t0: Term, t1: Term, depth: int = DEFAULT_ORACLE_DEPTH) -> Verdict:
    if t0 == t1:
        return Verdict.EQUAL
    sk, ctx_sk = skeleton(ty), _ctx_skeleton(ctx)
    return _decide(
        _normal_tm(translate_tm(t0), sk, ctx_sk, depth),
        _normal_tm(translate_tm(t1), sk, ctx_sk, depth),
    )


def rewrite_oracle_ty(ctx: Context, a0: Type, a1: Type, depth: int = DEFAULT_ORACLE_DEPTH) -> Verdict:
    if a0 == a1:
        return Verdict.EQUAL
    ctx_sk = _ctx_skeleton(ctx)
    return _decide(_normal_ty(translate_ty(a0), ctx_sk, depth), _normal_ty(translate_ty(a1), ctx_sk, depth))


def rewrite_oracle_sub(ctx: Context, cod: Context, s0: Subst, s1: Subst, depth: int = DEFAULT_ORACLE_DEPTH) -> Verdict:
    """Compare two substitutions into ``cod`` componentwise."""
    if s0 == s1:
        return Verdict.EQUAL
    ctx_sk = _ctx_skeleton(ctx)
    l0, l1 = translate_sub(s0), translate_sub(s1)
    verdicts = []
    for i, entry in enumerate(reversed(cod)):
        sk = skeleton(entry)
        verdicts.append(_decide(_normal_tm(l0.lookup(i), sk, ctx_sk, depth), _normal_tm(l1.lookup(i), sk, ctx_sk, depth)))
    if all(v is Verdict.EQUAL for v in verdicts):
        return Verdict.EQUAL
    if any(v is Verdict.NOT_EQUAL for v in verdicts):
        return Verdict.NOT_EQUAL
    return Verdict.UNKNOWN
