"""Sampling instances of the Kripke naturality law for function values.

For a function value ``f`` over ``Psi``, renamings ``beta : Omega -> Psi`` and
``gamma : Xi -> Omega`` and an argument ``u`` over ``Omega``::

    rename(apply(f, beta, u), gamma)  ==  apply(f, beta o gamma, rename(u, gamma))

Both sides are compared after quoting at the instantiated codomain.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import nbe
from . import semantics as sem
from .enumeration import enumerate_nf
from .generate import PI_U_EL, PI_U_U, default_pool
from .normal import NPi, Nf, embed_nf, embed_nty, norm_ty
from .renaming import Renaming, Var, compose_renaming, embed_renaming
from .syntax import Context, SubstTy, Term, Type, U, var_type

EXTRA_ENTRIES = (U(), PI_U_U, PI_U_EL)


def typed_renamings(src: Context, tgt: Context):
    """Every renaming from ``src`` to ``tgt`` that respects the entry types."""

    def go(prefix: tuple):
        j = len(prefix)
        if j == len(tgt):
            yield Renaming(prefix, len(src))
            return
        need = SubstTy(tgt[j], embed_renaming(Renaming(prefix, len(src))))
        for i in range(len(src)):
            if nbe.conv_ty(src, var_type(src, i), need):
                yield from go(prefix + (Var(i),))

    yield from go(())


@lru_cache(maxsize=None)
def _renamings(src: Context, tgt: Context) -> tuple:
    return tuple(typed_renamings(src, tgt))


@dataclass(frozen=True)
class NaturalitySample:
    psi: Context
    fn: Term
    fn_ty: Type
    beta: Renaming
    gamma: Renaming
    arg: Nf
    lhs: Nf
    rhs: Nf


@lru_cache(maxsize=1)
def _functions() -> tuple:
    pool = default_pool()
    return tuple(
        (ctx, tm, ty)
        for ctx in pool.contexts
        if len(ctx) <= 2
        for tm, ty in pool.terms[ctx]
        if isinstance(norm_ty(ty), NPi)
    )


def naturality_sample(seed: int) -> NaturalitySample:
    """One random instance; both sides of the law are quoted into ``lhs``/``rhs``."""
    rng = random.Random(seed)
    fns = _functions()
    while True:
        psi, fn, fn_ty = rng.choice(fns)
        omega = psi + tuple(rng.choice(EXTRA_ENTRIES) for _ in range(rng.randint(0, 2)))
        xi = omega + tuple(rng.choice(EXTRA_ENTRIES) for _ in range(rng.randint(0, 1)))
        betas, gammas = _renamings(omega, psi), _renamings(xi, omega)
        if not betas or not gammas:
            continue
        beta, gamma = rng.choice(betas), rng.choice(gammas)
        nty = norm_ty(fn_ty)
        dom_ty = SubstTy(embed_nty(nty.dom), embed_renaming(beta))
        args = enumerate_nf(omega, dom_ty, 4)
        if not args:
            continue
        arg = rng.choice(args)
        return _instance(psi, fn, fn_ty, beta, gamma, omega, xi, arg)


def _instance(psi, fn, fn_ty, beta, gamma, omega, xi, arg) -> NaturalitySample:
    f = sem.eval_tm(fn, nbe.fresh_env(psi))
    vty = sem.eval_ty(fn_ty, nbe.fresh_env(psi))
    u = sem.eval_tm(embed_nf(arg), nbe.fresh_env(omega))
    both = compose_renaming(beta, gamma)
    u_xi = sem.rename_value(u, gamma)
    cod = sem.instantiate(sem.rename_tyclosure(vty.cod, both), u_xi)
    lhs = sem.rename_value(sem.apply_vfun(f, beta, u), gamma)
    rhs = sem.apply_vfun(f, both, u_xi)
    n = len(xi)
    return NaturalitySample(psi, fn, fn_ty, beta, gamma, arg, nbe.quote(cod, lhs, n), nbe.quote(cod, rhs, n))
