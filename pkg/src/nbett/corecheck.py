"""A defensive type checker for core syntax.

Core syntax carries no annotations, so only some of it is inferable.  The
checker is bidirectional in the usual way and raises :class:`CannotInfer`
when it would have to guess a type, for instance the domain of a bare
``Lam`` or the extending type of an ``Ext`` whose term type gives no hint.
Types are compared up to conversion with :func:`nbett.nbe.conv_ty`.
"""
from __future__ import annotations

from . import nbe
from . import semantics as sem
from .normal import NPi, embed_nty, norm_ty
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


class CoreTypeError(TypeError):
    """The input is ill-typed."""


class CannotInfer(CoreTypeError):
    """Inference needs information the unannotated syntax does not carry."""


def _conv_ty(ctx: Context, a0: Type, a1: Type) -> bool:
    try:
        return bool(nbe.conv_ty(ctx, a0, a1))
    except sem.EvalError as err:
        raise CoreTypeError(f"comparing types got stuck: {err}") from err


def _require_pi(ctx: Context, ty: Type, what: str) -> NPi:
    nty = norm_ty(ty)
    if not isinstance(nty, NPi):
        raise CoreTypeError(f"{what} has type {type(nty).__name__}, expected a Pi type")
    return nty


def check_ctx(ctx: Context) -> None:
    for j, entry in enumerate(ctx):
        check_ty(ctx[:j], entry)


def check_ty(ctx: Context, ty: Type) -> None:
    match ty:
        case U():
            return
        case El(code):
            check_tm(ctx, code, U())
        case Pi(dom, cod):
            check_ty(ctx, dom)
            check_ty(ctx + (dom,), cod)
        case SubstTy(inner, sub):
            check_ty(infer_sub(ctx, sub), inner)
        case _:
            raise CoreTypeError(f"not a type: {ty!r}")


def infer_tm(ctx: Context, tm: Term) -> Type:
    match tm:
        case Proj2(sub):
            cod = infer_sub(ctx, sub)
            if not cod:
                raise CoreTypeError("second projection out of the empty context")
            return SubstTy(cod[-1], Proj1(sub))
        case SubstTm(App(fn), Ext(rest, arg)) if not isinstance(fn, Lam):
            # the function fixes the extending type, so the argument is checked
            try:
                inner_ctx = infer_sub(ctx, rest)
                fn_ty = _require_pi(inner_ctx, infer_tm(inner_ctx, fn), "applied term")
            except CannotInfer:
                return SubstTy(infer_tm(infer_sub(ctx, tm.sub), tm.tm), tm.sub)
            check_tm(ctx, arg, SubstTy(embed_nty(fn_ty.dom), rest))
            return SubstTy(embed_nty(fn_ty.cod), tm.sub)
        case SubstTm(inner, sub):
            return SubstTy(infer_tm(infer_sub(ctx, sub), inner), sub)
        case App(Lam(body)):
            # app (lam t) is t, so the body's type is the application's type
            if not ctx:
                raise CoreTypeError("application in the empty context")
            return infer_tm(ctx, body)
        case App(fn):
            if not ctx:
                raise CoreTypeError("application in the empty context")
            fn_ty = _require_pi(ctx[:-1], infer_tm(ctx[:-1], fn), "applied term")
            if not _conv_ty(ctx[:-1], embed_nty(fn_ty.dom), ctx[-1]):
                raise CoreTypeError("argument slot does not match the function domain")
            return embed_nty(fn_ty.cod)
        case Lam(_):
            raise CannotInfer("cannot infer the domain of a lambda")
    raise CoreTypeError(f"not a term: {tm!r}")


def check_tm(ctx: Context, tm: Term, ty: Type) -> None:
    if isinstance(tm, Lam):
        nty = _require_pi(ctx, ty, "lambda")
        check_tm(ctx + (embed_nty(nty.dom),), tm.body, embed_nty(nty.cod))
        return
    actual = infer_tm(ctx, tm)
    if not _conv_ty(ctx, actual, ty):
        raise CoreTypeError("type mismatch")


def infer_sub(ctx: Context, sub: Subst) -> Context:
    """The codomain context of ``sub`` out of ``ctx``."""
    match sub:
        case Id():
            return ctx
        case Empty():
            return ()
        case Comp(first, second):
            return infer_sub(infer_sub(ctx, second), first)
        case Proj1(inner):
            cod = infer_sub(ctx, inner)
            if not cod:
                raise CoreTypeError("first projection out of the empty context")
            return cod[:-1]
        case Ext(rest, tm):
            cod = infer_sub(ctx, rest)
            tm_ty = infer_tm(ctx, tm)
            if isinstance(rest, Id):
                return cod + (tm_ty,)
            if isinstance(tm_ty, SubstTy) and tm_ty.sub == rest:
                check_ty(cod, tm_ty.ty)
                return cod + (tm_ty.ty,)
            raise CannotInfer("cannot infer the extending type of a substitution")
    raise CoreTypeError(f"not a substitution: {sub!r}")


def check_sub(ctx: Context, sub: Subst, cod: Context) -> None:
    match sub:
        case Empty():
            if cod:
                raise CoreTypeError("empty substitution into a non-empty context")
            return
        case Ext(rest, tm):
            if not cod:
                raise CoreTypeError("extended substitution into the empty context")
            check_sub(ctx, rest, cod[:-1])
            check_tm(ctx, tm, SubstTy(cod[-1], rest))
            return
        case Comp(first, second):
            check_sub(infer_sub(ctx, second), first, cod)
            return
    actual = infer_sub(ctx, sub)
    try:
        same = bool(nbe.conv_ctx(actual, cod))
    except sem.EvalError as err:
        raise CoreTypeError(f"comparing contexts got stuck: {err}") from err
    if not same:
        raise CoreTypeError("codomain mismatch")
