"""Test-data generation: raw and typed enumeration of core syntax, axiom instances.

Raw core syntax is tiny at small sizes (a few hundred terms up to size 6), so
typed data is produced by exhaustive raw enumeration filtered through the
core checker over a menu of small contexts.  Axiom instances are then
assembled from those typed pools so that every metavariable binding has a
verified typing judgment.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from . import nbe
from .axioms import AXIOMS, ConvAxiom, instantiate
from .corecheck import CannotInfer, CoreTypeError, check_sub, check_tm, check_ty, infer_sub, infer_tm
from .normal import NPi, NTy, NU, embed_nty, norm_ty
from .renaming import VZe, Var, embed_var
from .semantics import EvalError
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
    SubstTm,
    SubstTy,
    Type,
    U,
    var_type,
)


class GeneratorExhausted(RuntimeError):
    """The pools cannot supply the requested number of distinct instances."""


# -- raw enumeration ---------------------------------------------------------


@lru_cache(maxsize=None)
def raw_terms(n: int) -> tuple:
    """Every raw term with exactly ``n`` constructors."""
    if n < 2:
        return ()
    out = [Lam(t) for t in raw_terms(n - 1)]
    out += [App(t) for t in raw_terms(n - 1)]
    out += [Proj2(s) for s in raw_subs(n - 1)]
    out += [SubstTm(t, s) for i in range(2, n - 1) for t in raw_terms(i) for s in raw_subs(n - 1 - i)]
    return tuple(out)


@lru_cache(maxsize=None)
def raw_subs(n: int) -> tuple:
    if n < 1:
        return ()
    out = [Id(), Empty()] if n == 1 else []
    out += [Comp(s, r) for i in range(1, n - 1) for s in raw_subs(i) for r in raw_subs(n - 1 - i)]
    out += [Ext(s, t) for i in range(1, n - 2) for s in raw_subs(i) for t in raw_terms(n - 1 - i)]
    out += [Proj1(s) for s in raw_subs(n - 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def raw_types(n: int) -> tuple:
    if n < 1:
        return ()
    out = [U()] if n == 1 else []
    out += [El(t) for t in raw_terms(n - 1)]
    out += [Pi(a, b) for i in range(1, n - 1) for a in raw_types(i) for b in raw_types(n - 1 - i)]
    out += [SubstTy(a, s) for i in range(1, n - 1) for a in raw_types(i) for s in raw_subs(n - 1 - i)]
    return tuple(out)


def raw_upto(kind: Callable[[int], tuple], max_size: int) -> Iterator:
    for n in range(1, max_size + 1):
        yield from kind(n)


# -- context menus -----------------------------------------------------------

V0 = embed_var(VZe)
PI_U_U = Pi(U(), U())
PI_U_EL = Pi(U(), El(V0))  # (x : U) -> El x


def u_vars(ctx: Context) -> list[int]:
    """De Bruijn indices of the ``U``-typed variables of ``ctx``."""
    return [i for i in range(len(ctx)) if isinstance(norm_ty(var_type(ctx, i)), NU)]


def context_menu(max_len: int, entries=(U(), PI_U_U, PI_U_EL), with_el: bool = True) -> list[Context]:
    """All contexts of length up to ``max_len`` over ``entries``.

    With ``with_el`` an entry may also be ``El x`` for an earlier ``U``-typed
    variable ``x``.
    """
    out: list[Context] = [()]
    frontier: list[Context] = [()]
    for _ in range(max_len):
        nxt = []
        for ctx in frontier:
            options = list(entries)
            if with_el:
                options += [El(embed_var(Var(i))) for i in u_vars(ctx)]
            nxt += [ctx + (e,) for e in options]
        out += nxt
        frontier = nxt
    return out


def type_menu(ctx: Context) -> list[Type]:
    """Candidate types for checking terms whose type cannot be inferred."""
    els = [El(embed_var(Var(i))) for i in u_vars(ctx)]
    out = [U(), PI_U_U, PI_U_EL, Pi(PI_U_U, U()), Pi(U(), PI_U_U)] + els
    out += [Pi(e, U()) for e in els] + [Pi(U(), SubstTy(e, Proj1(Id()))) for e in els]
    out += [Pi(e, SubstTy(e, Proj1(Id()))) for e in els]
    out += [var_type(ctx, i) for i in range(len(ctx))]
    return out


def canonical_ctx(ctx: Context) -> Context:
    """Representative of the conversion class of a context: entries in normal form."""
    return tuple(embed_nty(nbe.norm_type(ctx[:j], ctx[j])) for j in range(len(ctx)))


# -- typed pools -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TypedTerm:
    ctx: Context
    ty: Type
    tm: object


@dataclass
class Pool:
    """Well-typed syntax indexed by context (contexts are canonical)."""

    contexts: list
    types: dict = field(default_factory=dict)  # ctx -> [Type]
    terms: dict = field(default_factory=dict)  # ctx -> [(Term, Type)]
    terms_at: dict = field(default_factory=dict)  # (ctx, NTy) -> [Term]
    subs_from: dict = field(default_factory=dict)  # ctx -> [(Subst, cod)]
    subs_into: dict = field(default_factory=dict)  # cod -> [(ctx, Subst)]

    def typed_terms(self) -> list[TypedTerm]:
        return [TypedTerm(ctx, ty, tm) for ctx in self.contexts for tm, ty in self.terms.get(ctx, [])]


_CHECK_ERRORS = (CoreTypeError, EvalError, IndexError)


def infer_or_check(ctx: Context, tm) -> list[Type]:
    """Types ``tm`` has in ``ctx``: the inferred one, or those of the menu it checks against."""
    try:
        return [infer_tm(ctx, tm)]
    except CannotInfer:
        pass
    except _CHECK_ERRORS:
        return []
    out = []
    for ty in type_menu(ctx):
        try:
            check_tm(ctx, tm, ty)
        except _CHECK_ERRORS:
            continue
        out.append(ty)
    return out


def build_pool(contexts, max_size: int = 5) -> Pool:
    pool = Pool([canonical_ctx(c) for c in contexts])
    for ctx in pool.contexts:
        tys = pool.types.setdefault(ctx, [])
        for ty in raw_upto(raw_types, max_size):
            try:
                check_ty(ctx, ty)
            except _CHECK_ERRORS:
                continue
            tys.append(ty)
        tms = pool.terms.setdefault(ctx, [])
        for tm in raw_upto(raw_terms, max_size):
            for ty in infer_or_check(ctx, tm):
                tms.append((tm, ty))
                pool.terms_at.setdefault((ctx, nbe.norm_type(ctx, ty)), []).append(tm)
        subs = pool.subs_from.setdefault(ctx, [])
        for sub in raw_upto(raw_subs, max_size):
            try:
                cod = canonical_ctx(infer_sub(ctx, sub))
            except _CHECK_ERRORS:
                continue
            subs.append((sub, cod))
            pool.subs_into.setdefault(cod, []).append((ctx, sub))
    return pool


@lru_cache(maxsize=8)
def default_pool(max_len: int = 3, max_size: int = 5) -> Pool:
    return build_pool(context_menu(max_len), max_size)


def well_typed_terms(contexts, max_size: int) -> list[TypedTerm]:
    """Every (context, type, term) with a term of size at most ``max_size``.

    Inferable terms appear once at their inferred type; the others once per
    menu type they check against.
    """
    return build_pool(contexts, max_size).typed_terms()


def well_formed_types(contexts, max_size: int) -> list[tuple[Context, Type]]:
    out = []
    for ctx in contexts:
        for ty in raw_upto(raw_types, max_size):
            try:
                check_ty(ctx, ty)
            except _CHECK_ERRORS:
                continue
            out.append((ctx, ty))
    return out


# -- axiom instances ---------------------------------------------------------


@dataclass(frozen=True)
class AxiomInstance:
    """A pair of sides of one axiom, with the judgment they share.

    ``ty`` is set for term axioms and ``cod`` for substitution axioms.
    ``judgments`` lists the typing judgment of each metavariable binding, in
    the form ``(sort, ctx, value, type-or-codomain)``.
    """

    axiom: str
    ctx: Context
    lhs: object
    rhs: object
    ty: Type | None = None
    cod: Context | None = None
    judgments: tuple = ()

    @property
    def pair(self) -> tuple:
        return self.lhs, self.rhs


def _with_cod(pool: Pool, rng: random.Random, pred=lambda ctx, cod: True):
    options = [(ctx, sub, cod) for ctx in pool.contexts for sub, cod in pool.subs_from[ctx] if pred(ctx, cod)]
    return rng.choice(options) if options else None


def _sub_from(pool: Pool, rng, ctx, pred=lambda cod: True):
    options = [(sub, cod) for sub, cod in pool.subs_from.get(ctx, []) if pred(cod)]
    return rng.choice(options) if options else None


def _term_at(pool: Pool, rng, ctx, ty):
    options = pool.terms_at.get((ctx, nbe.norm_type(ctx, ty)), [])
    return rng.choice(options) if options else None


def _in_pool(pool: Pool):
    return lambda cod: cod in pool.types


def _gen_id(pool, rng):
    ctx = rng.choice(pool.contexts)
    a = rng.choice(pool.types[ctx])
    return ctx, {"A": a}, None, None, (("ty", ctx, a, None),)


def _gen_subst_subst(pool, rng):
    ctx = rng.choice(pool.contexts)
    got = _sub_from(pool, rng, ctx, _in_pool(pool))
    if not got:
        return None
    nu, theta = got
    got = _sub_from(pool, rng, theta, _in_pool(pool))
    if not got:
        return None
    sigma, delta = got
    a = rng.choice(pool.types[delta])
    return ctx, {"A": a, "sigma": sigma, "nu": nu}, None, None, (
        ("ty", delta, a, None),
        ("sub", theta, sigma, delta),
        ("sub", ctx, nu, theta),
    )


def _gen_u_subst(pool, rng):
    ctx, sigma, delta = _with_cod(pool, rng)
    return ctx, {"sigma": sigma}, None, None, (("sub", ctx, sigma, delta),)


def _gen_el_subst(pool, rng):
    got = _with_cod(pool, rng, lambda c, d: (d, NU()) in pool.terms_at)
    if not got:
        return None
    ctx, sigma, delta = got
    a = rng.choice(pool.terms_at[(delta, NU())])
    return ctx, {"a": a, "sigma": sigma}, None, None, (("sub", ctx, sigma, delta), ("tm", delta, a, U()))


def _gen_pi_subst(pool, rng):
    ext = rng.choice([c for c in pool.contexts if c and c[:-1] in pool.subs_into])
    delta, a = ext[:-1], ext[-1]
    ctx, sigma = rng.choice(pool.subs_into[delta])
    b = rng.choice(pool.types[ext])
    return ctx, {"A": a, "B": b, "sigma": sigma}, None, None, (
        ("sub", ctx, sigma, delta),
        ("ty", delta, a, None),
        ("ty", ext, b, None),
    )


def _gen_one_sub(pool, rng, pred=lambda ctx, cod: True):
    got = _with_cod(pool, rng, pred)
    if not got:
        return None
    ctx, sigma, delta = got
    return ctx, {"sigma": sigma}, None, delta, (("sub", ctx, sigma, delta),)


def _gen_comp_comp(pool, rng):
    ctx = rng.choice(pool.contexts)
    got = _sub_from(pool, rng, ctx, lambda c: c in pool.subs_from)
    if not got:
        return None
    delta_sub, theta1 = got
    got = _sub_from(pool, rng, theta1, lambda c: c in pool.subs_from)
    if not got:
        return None
    nu, theta = got
    got = _sub_from(pool, rng, theta)
    if not got:
        return None
    sigma, cod = got
    return ctx, {"sigma": sigma, "nu": nu, "delta": delta_sub}, None, cod, (
        ("sub", theta, sigma, cod),
        ("sub", theta1, nu, theta),
        ("sub", ctx, delta_sub, theta1),
    )


def _ext_parts(pool, rng, ctx):
    """``sigma : ctx -> delta``, a type ``A`` over ``delta`` and ``t : A[sigma]``."""
    got = _sub_from(pool, rng, ctx, _in_pool(pool))
    if not got:
        return None
    sigma, delta = got
    a = rng.choice(pool.types[delta])
    t = _term_at(pool, rng, ctx, SubstTy(a, sigma))
    if t is None:
        return None
    return sigma, delta, a, t


def _gen_proj1_beta(pool, rng):
    ctx = rng.choice(pool.contexts)
    parts = _ext_parts(pool, rng, ctx)
    if not parts:
        return None
    sigma, delta, a, t = parts
    return ctx, {"sigma": sigma, "t": t}, None, delta, (
        ("sub", ctx, sigma, delta),
        ("ty", delta, a, None),
        ("tm", ctx, t, SubstTy(a, sigma)),
    )


def _gen_ext_comp(pool, rng):
    ctx = rng.choice(pool.contexts)
    got = _sub_from(pool, rng, ctx, _in_pool(pool))
    if not got:
        return None
    nu, theta = got
    parts = _ext_parts(pool, rng, theta)
    if not parts:
        return None
    sigma, delta, a, t = parts
    return ctx, {"sigma": sigma, "t": t, "nu": nu}, None, delta + (a,), (
        ("sub", theta, sigma, delta),
        ("ty", delta, a, None),
        ("tm", theta, t, SubstTy(a, sigma)),
        ("sub", ctx, nu, theta),
    )


def _gen_proj2_beta(pool, rng):
    ctx = rng.choice(pool.contexts)
    parts = _ext_parts(pool, rng, ctx)
    if not parts:
        return None
    sigma, delta, a, t = parts
    return ctx, {"sigma": sigma, "t": t}, SubstTy(a, sigma), None, (
        ("sub", ctx, sigma, delta),
        ("ty", delta, a, None),
        ("tm", ctx, t, SubstTy(a, sigma)),
    )


def _gen_pi_beta(pool, rng):
    ctx = rng.choice([c for c in pool.contexts if c and pool.terms[c]])
    t, b = rng.choice(pool.terms[ctx])
    return ctx, {"t": t}, b, None, (("tm", ctx, t, b),)


def _gen_pi_eta(pool, rng):
    options = [(c, t, ty) for c in pool.contexts for t, ty in pool.terms[c] if isinstance(norm_ty(ty), NPi)]
    ctx, t, ty = rng.choice(options)
    return ctx, {"t": t}, ty, None, (("tm", ctx, t, ty),)


def _gen_lam_subst(pool, rng):
    ext = rng.choice([c for c in pool.contexts if c and pool.terms[c] and c[:-1] in pool.subs_into])
    delta, a = ext[:-1], ext[-1]
    t, b = rng.choice(pool.terms[ext])
    ctx, sigma = rng.choice(pool.subs_into[delta])
    return ctx, {"t": t, "sigma": sigma}, SubstTy(Pi(a, b), sigma), None, (
        ("sub", ctx, sigma, delta),
        ("tm", ext, t, b),
    )


_BUILDERS: dict[str, Callable] = {
    "[id]": _gen_id,
    "[][]": _gen_subst_subst,
    "U[]": _gen_u_subst,
    "El[]": _gen_el_subst,
    "Π[]": _gen_pi_subst,
    "id∘": _gen_one_sub,
    "∘id": _gen_one_sub,
    "∘∘": _gen_comp_comp,
    "εη": lambda pool, rng: _gen_one_sub(pool, rng, lambda c, d: d == ()),
    "π₁β": _gen_proj1_beta,
    "πη": lambda pool, rng: _gen_one_sub(pool, rng, lambda c, d: d != ()),
    ",∘": _gen_ext_comp,
    "π₂β": _gen_proj2_beta,
    "Πβ": _gen_pi_beta,
    "Πη": _gen_pi_eta,
    "lam[]": _gen_lam_subst,
}


def check_judgment(judgment) -> None:
    """Raise :class:`CoreTypeError` unless one metavariable judgment holds."""
    sort, ctx, value, of = judgment
    match sort:
        case "ty":
            check_ty(ctx, value)
        case "tm":
            check_tm(ctx, value, of)
        case "sub":
            check_sub(ctx, value, of)


def check_instance_side(inst: AxiomInstance, side) -> bool:
    """Best-effort core check of one side; ``False`` only when inference gives up."""
    try:
        match AXIOMS[inst.axiom].sort:
            case "ty":
                check_ty(inst.ctx, side)
            case "tm":
                check_tm(inst.ctx, side, inst.ty)
            case "sub":
                check_sub(inst.ctx, side, inst.cod)
    except CannotInfer:
        return False
    return True


def axiom_instances(ax: ConvAxiom | str, seed: int, n: int, pool: Pool | None = None, attempts: int | None = None) -> list[AxiomInstance]:
    """``n`` distinct well-typed instances of ``ax``, reproducibly from ``seed``."""
    ax = AXIOMS[ax] if isinstance(ax, str) else ax
    pool = pool or default_pool()
    rng = random.Random(seed)
    build = _BUILDERS[ax.name]
    seen: set = set()
    out: list[AxiomInstance] = []
    for _ in range(attempts or 50 * n):
        if len(out) == n:
            break
        got = build(pool, rng)
        if got is None:
            continue
        ctx, binding, ty, cod, judgments = got
        lhs, rhs = instantiate(ax.lhs, binding), instantiate(ax.rhs, binding)
        if (ctx, lhs) in seen:
            continue
        seen.add((ctx, lhs))
        out.append(AxiomInstance(ax.name, ctx, lhs, rhs, ty, cod, judgments))
    if len(out) < n:
        raise GeneratorExhausted(f"only {len(out)} distinct instances of {ax.name} found, {n} requested")
    return out


# -- surface terms -----------------------------------------------------------


def surface_terms(size: int, names=("x", "y"), scope: tuple = ()) -> Iterator:
    """Every closed-in-``scope`` surface expression with exactly ``size`` nodes.

    Binders range over ``names``; variables over the names in scope.
    """
    from .surface import SAnn, SApp, SEl, SLam, SPi, SU, SVar

    if size == 1:
        yield SU()
        for x in dict.fromkeys(scope):
            yield SVar(x)
        return
    for body in surface_terms(size - 1, names, scope):
        yield SEl(body)
    for x in names:
        for body in surface_terms(size - 1, names, scope + (x,)):
            yield SLam(x, body)
    for i in range(1, size - 1):
        for left in surface_terms(i, names, scope):
            for right in surface_terms(size - 1 - i, names, scope):
                yield SApp(left, right)
                yield SAnn(left, right)
        for x in names:
            for dom in surface_terms(i, names, scope):
                for cod in surface_terms(size - 1 - i, names, scope + (x,)):
                    yield SPi(x, dom, cod)
