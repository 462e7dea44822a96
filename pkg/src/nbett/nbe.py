"""Quote/unquote and the top-level normaliser and conversion checker."""
from __future__ import annotations

from . import semantics as sem
from .normal import (
    DecResult,
    Equal,
    NEl,
    Nf,
    NLam,
    NotEqual,
    NPi,
    NTy,
    NU,
    NVar,
    Ne,
    NeuEl,
    NeuU,
    dec_nf,
    embed_nf,
    embed_nty,
    norm_ty,
)
from .renaming import VZe, wk_renaming
from .syntax import Context, Subst, Term, Type, U


class QuoteError(sem.EvalError):
    """A value does not have the shape its type demands."""


def _ctx_len(ctx) -> int:
    return ctx if isinstance(ctx, int) else len(ctx)


def quote(ty: sem.VType, value: sem.Value, ctx) -> Nf:
    """Read a value of semantic type ``ty`` back as an eta-long beta-normal form."""
    n = _ctx_len(ctx)
    match ty:
        case sem.VU():
            if isinstance(value, sem.VNeutral):
                return NeuU(value.ne)
        case sem.VEl(_):
            if isinstance(value, sem.VNeutral):
                return NeuEl(value.ne)
        case sem.VPi(dom, cod):
            wk = wk_renaming(n)
            fresh = unquote(sem.rename_vtype(dom, wk), NVar(VZe), n + 1)
            body = sem.apply_vfun(value, wk, fresh)
            return NLam(quote(sem.instantiate(sem.rename_tyclosure(cod, wk), fresh), body, n + 1))
    raise QuoteError(f"cannot quote {value!r} at {ty!r}")


def unquote(ty: sem.VType, ne: Ne, ctx=None) -> sem.Value:
    # At Pi types the neutral's application behaviour lives in apply_vfun.
    return sem.VNeutral(ne, ty)


def fresh_env(ctx: Context) -> sem.Env:
    """Unquote the variables of ``ctx``: the environment interpreting ``id``."""
    env = sem.Env((), 0)
    for entry in ctx:
        ty = sem.eval_ty(entry, env)
        wk = wk_renaming(env.size)
        env = sem.rename_env(env, wk).extend(unquote(sem.rename_vtype(ty, wk), NVar(VZe)))
    return env


def quote_env(ctx: Context, env: sem.Env) -> tuple:
    """Quote an environment interpreting the context ``ctx`` into a list of normal forms."""
    if len(ctx) != len(env.values):
        raise QuoteError(f"environment of length {len(env.values)} for a context of length {len(ctx)}")
    out = []
    for j, entry in enumerate(ctx):
        ty = sem.eval_ty(entry, sem.Env(env.values[:j], env.size))
        out.append(quote(ty, env.values[j], env.size))
    return tuple(out)


def quote_ty(ty: sem.VType, ctx) -> NTy:
    """Read back a semantic type; terms under ``El`` come out normal."""
    n = _ctx_len(ctx)
    match ty:
        case sem.VU():
            return NU()
        case sem.VEl(code):
            return NEl(embed_nf(quote(sem.VU(), code, n)))
        case sem.VPi(dom, cod):
            wk = wk_renaming(n)
            fresh = unquote(sem.rename_vtype(dom, wk), NVar(VZe))
            return NPi(quote_ty(dom, n), quote_ty(sem.instantiate(sem.rename_tyclosure(cod, wk), fresh), n + 1))
    raise QuoteError(f"not a semantic type: {ty!r}")


def norm(ctx: Context, ty: Type, tm: Term, fuel: int = sem.DEFAULT_FUEL) -> Nf:
    with sem.fuel(fuel):
        env = fresh_env(ctx)
        return quote(sem.eval_ty(ty, env), sem.eval_tm(tm, env), len(ctx))


def norm_sub(ctx: Context, cod: Context, sub: Subst, fuel: int = sem.DEFAULT_FUEL) -> tuple:
    with sem.fuel(fuel):
        return quote_env(cod, sem.eval_sub(sub, fresh_env(ctx)))


def norm_type(ctx: Context, ty: Type, fuel: int = sem.DEFAULT_FUEL) -> NTy:
    """Fully normal type: substitutions pushed and ``El`` contents normalised."""
    with sem.fuel(fuel):
        return quote_ty(sem.eval_ty(ty, fresh_env(ctx)), len(ctx))


def conv(ctx: Context, ty: Type, t0: Term, t1: Term, fuel: int = sem.DEFAULT_FUEL) -> DecResult:
    with sem.fuel(fuel):
        return dec_nf(norm(ctx, ty, t0), norm(ctx, ty, t1), ctx, ty)


def conv_ty(ctx: Context, a0: Type, a1: Type, fuel: int = sem.DEFAULT_FUEL) -> DecResult:
    with sem.fuel(fuel):
        return _conv_nty(ctx, norm_ty(a0), norm_ty(a1))


def _conv_nty(ctx: Context, a0: NTy, a1: NTy) -> DecResult:
    match a0, a1:
        case NU(), NU():
            return Equal()
        case NEl(c0), NEl(c1):
            res = conv(ctx, U(), c0, c1)
            return res if res else NotEqual(f"El: {res.reason}")
        case NPi(d0, c0), NPi(d1, c1):
            dom = _conv_nty(ctx, d0, d1)
            if not dom:
                return dom
            return _conv_nty(ctx + (embed_nty(d0),), c0, c1)
    return NotEqual(f"type heads differ: {type(a0).__name__} vs {type(a1).__name__}")


def conv_ctx(c0: Context, c1: Context) -> DecResult:
    if len(c0) != len(c1):
        return NotEqual("context lengths differ")
    for j in range(len(c0)):
        res = conv_ty(c0[:j], c0[j], c1[j])
        if not res:
            return NotEqual(f"context entry {j}: {res.reason}")
    return Equal()
