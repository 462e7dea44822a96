"""Exhaustive enumeration of well-typed normal forms by size.

Normal forms are enumerated type-directed: at a Pi type only lambdas, at a
base type only neutral spines whose type matches.  Types are matched by
their full normal form, so the enumeration is exact up to conversion.
"""
from __future__ import annotations

from functools import lru_cache

from . import nbe
from .normal import NApp, Nf, NLam, NPi, NU, NVar, Ne, NeuEl, NeuU, embed_nf, embed_nty, nf_size, norm_ty
from .renaming import Var
from .syntax import Context, SubstTy, Type, single_subst, var_type


@lru_cache(maxsize=None)
def enumerate_ne(ctx: Context, bound: int) -> tuple[tuple[Ne, Type], ...]:
    """All neutral terms of size at most ``bound`` over ``ctx``, with their types."""
    if bound < 1:
        return ()
    out = [(NVar(Var(i)), var_type(ctx, i)) for i in range(len(ctx))]
    # grow spines by one argument at a time, shortest heads first
    frontier = list(out)
    while frontier:
        nxt = []
        for ne, ty in frontier:
            nty = norm_ty(ty)
            if not isinstance(nty, NPi):
                continue
            room = bound - 1 - nf_size(ne)
            for arg in _enumerate_nf(ctx, embed_nty(nty.dom), room):
                nxt.append((NApp(ne, arg), SubstTy(embed_nty(nty.cod), single_subst(embed_nf(arg)))))
        out += nxt
        frontier = nxt
    return tuple(out)


def enumerate_nf(ctx: Context, ty: Type, bound: int) -> list[Nf]:
    """Exactly the normal forms of type ``ty`` over ``ctx`` with size at most ``bound``.

    The order is deterministic: by size, then by construction order.
    """
    return list(_enumerate_nf(ctx, ty, bound))


@lru_cache(maxsize=None)
def _enumerate_nf(ctx: Context, ty: Type, bound: int) -> tuple[Nf, ...]:
    if bound < 1:
        return ()
    nty = norm_ty(ty)
    if isinstance(nty, NPi):
        inner = ctx + (embed_nty(nty.dom),)
        return tuple(NLam(body) for body in _enumerate_nf(inner, embed_nty(nty.cod), bound - 1))
    target = nbe.norm_type(ctx, ty)
    wrap = NeuU if isinstance(nty, NU) else NeuEl
    found = [wrap(ne) for ne, ne_ty in enumerate_ne(ctx, bound) if nbe.norm_type(ctx, ne_ty) == target]
    return tuple(sorted(found, key=nf_size))
