"""Normal forms, neutral terms, normal types and their decidable equality.

Normal forms are indexed by ordinary (not necessarily normal) types, so the
equality deciders follow the bidirectional split: the context determines
the type of a variable or neutral term, while a normal form is compared at a
type supplied by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .renaming import Renaming, Var, embed_var, lift_renaming, rename_var
from .syntax import (
    Comp,
    Context,
    El,
    Empty,
    Ext,
    Lam,
    Pi,
    Subst,
    SubstTm,
    SubstTy,
    Term,
    Type,
    U,
    apply_tm,
    lift_subst,
    single_subst,
    var_type,
)


@dataclass(frozen=True, slots=True)
class NVar:
    var: Var


@dataclass(frozen=True, slots=True)
class NApp:
    fn: "Ne"
    arg: "Nf"


@dataclass(frozen=True, slots=True)
class NeuU:
    ne: "Ne"


@dataclass(frozen=True, slots=True)
class NeuEl:
    ne: "Ne"


@dataclass(frozen=True, slots=True)
class NLam:
    body: "Nf"


Ne = Union[NVar, NApp]
Nf = Union[NeuU, NeuEl, NLam]


# -- normal types ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class NU:
    pass


@dataclass(frozen=True, slots=True)
class NEl:
    code: Term  # arbitrary, possibly non-normal, term of type U


@dataclass(frozen=True, slots=True)
class NPi:
    dom: "NTy"
    cod: "NTy"


NTy = Union[NU, NEl, NPi]


# -- decisions ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Equal:
    def __bool__(self):
        return True


@dataclass(frozen=True, slots=True)
class NotEqual:
    reason: str

    def __bool__(self):
        return False


DecResult = Union[Equal, NotEqual]


# -- embeddings --------------------------------------------------------------


def embed_ne(ne: Ne) -> Term:
    match ne:
        case NVar(x):
            return embed_var(x)
        case NApp(fn, arg):
            return apply_tm(embed_ne(fn), embed_nf(arg))
    raise TypeError(f"not a neutral term: {ne!r}")


def embed_nf(nf: Nf) -> Term:
    match nf:
        case NeuU(ne) | NeuEl(ne):
            return embed_ne(ne)
        case NLam(body):
            return Lam(embed_nf(body))
    raise TypeError(f"not a normal form: {nf!r}")


def embed_nf_list(nfs) -> Subst:
    sub: Subst = Empty()
    for nf in nfs:
        sub = Ext(sub, embed_nf(nf))
    return sub


def nf_size(x) -> int:
    """Constructor count; the ``neuU``/``neuEl`` coercions are not counted."""
    match x:
        case NVar(_):
            return 1
        case NApp(fn, arg):
            return 1 + nf_size(fn) + nf_size(arg)
        case NeuU(ne) | NeuEl(ne):
            return nf_size(ne)
        case NLam(body):
            return 1 + nf_size(body)
    raise TypeError(f"not a normal form: {x!r}")


# -- renaming ----------------------------------------------------------------


def rename_ne(ne: Ne, ren: Renaming) -> Ne:
    match ne:
        case NVar(x):
            return NVar(rename_var(x, ren))
        case NApp(fn, arg):
            return NApp(rename_ne(fn, ren), rename_nf(arg, ren))
    raise TypeError(f"not a neutral term: {ne!r}")


def rename_nf(nf: Nf, ren: Renaming) -> Nf:
    match nf:
        case NeuU(ne):
            return NeuU(rename_ne(ne, ren))
        case NeuEl(ne):
            return NeuEl(rename_ne(ne, ren))
        case NLam(body):
            return NLam(rename_nf(body, lift_renaming(ren)))
    raise TypeError(f"not a normal form: {nf!r}")


def rename_nf_list(nfs: tuple, ren: Renaming) -> tuple:
    return tuple(rename_nf(nf, ren) for nf in nfs)


def rename_ne_list(nes: tuple, ren: Renaming) -> tuple:
    return tuple(rename_ne(ne, ren) for ne in nes)


# -- type normalisation ------------------------------------------------------


def norm_ty(ty: Type) -> NTy:
    """Push explicit substitutions down to ``U`` and ``El``.

    Terms under ``El`` are left alone apart from receiving the pushed
    substitution, so the result is substitution-free only at the type level.
    """
    return _push(ty, None)


def _push(ty: Type, sub: Subst | None) -> NTy:
    match ty:
        case U():
            return NU()
        case El(code):
            return NEl(code if sub is None else SubstTm(code, sub))
        case Pi(dom, cod):
            return NPi(_push(dom, sub), _push(cod, None if sub is None else lift_subst(sub, dom)))
        case SubstTy(inner, inner_sub):
            return _push(inner, inner_sub if sub is None else Comp(inner_sub, sub))
    raise TypeError(f"not a type: {ty!r}")


def embed_nty(nty: NTy) -> Type:
    match nty:
        case NU():
            return U()
        case NEl(code):
            return El(code)
        case NPi(dom, cod):
            return Pi(embed_nty(dom), embed_nty(cod))
    raise TypeError(f"not a normal type: {nty!r}")


class ShapeMismatch(TypeError):
    pass


def inj_pi(a: NTy, b: NTy) -> tuple[tuple[NTy, NTy], tuple[NTy, NTy]]:
    """Components of two normal Pi types: ``((dom_a, dom_b), (cod_a, cod_b))``."""
    if not (isinstance(a, NPi) and isinstance(b, NPi)):
        raise ShapeMismatch(f"expected two Pi types, got {a!r} and {b!r}")
    return (a.dom, b.dom), (a.cod, b.cod)


def inj_pi_domain(a: NTy, b: NTy) -> tuple[NTy, NTy]:
    return inj_pi(a, b)[0]


def inj_el(a: NTy, b: NTy) -> tuple[Term, Term]:
    if not (isinstance(a, NEl) and isinstance(b, NEl)):
        raise ShapeMismatch(f"expected two El types, got {a!r} and {b!r}")
    return a.code, b.code


def inj_ctx_ext(a: Context, b: Context) -> tuple[tuple[Context, Context], tuple[Type, Type]]:
    if not (a and b):
        raise ShapeMismatch("expected two extended contexts")
    return (a[:-1], b[:-1]), (a[-1], b[-1])


# -- typing of neutrals ------------------------------------------------------


def type_of_ne(ne: Ne, ctx: Context) -> Type:
    """The type the context assigns to a neutral term."""
    match ne:
        case NVar(x):
            return var_type(ctx, x.index)
        case NApp(fn, arg):
            fn_ty = norm_ty(type_of_ne(fn, ctx))
            if not isinstance(fn_ty, NPi):
                raise ShapeMismatch(f"head of application has non-Pi type {fn_ty!r}")
            return SubstTy(embed_nty(fn_ty.cod), single_subst(embed_nf(arg)))
    raise TypeError(f"not a neutral term: {ne!r}")


# -- decidable equality ------------------------------------------------------


def dec_var(x0: Var, x1: Var) -> DecResult:
    i, j = x0.index, x1.index
    while i and j:
        i, j = i - 1, j - 1
    if i == j == 0:
        return Equal()
    return NotEqual("vze/vsu")


def dec_ne(n0: Ne, n1: Ne, ctx: Context) -> DecResult:
    match n0, n1:
        case NVar(x0), NVar(x1):
            res = dec_var(x0, x1)
            return res if res else NotEqual(f"variable: {res.reason}")
        case NApp(f0, a0), NApp(f1, a1):
            head = dec_ne(f0, f1, ctx)
            if not head:
                return head
            # equal heads have equal Pi types, hence equal domains
            fn_ty = norm_ty(type_of_ne(f0, ctx))
            if not isinstance(fn_ty, NPi):
                return NotEqual("ill-typed application head")
            arg = dec_nf(a0, a1, ctx, embed_nty(fn_ty.dom))
            return arg if arg else NotEqual(f"argument: {arg.reason}")
    return NotEqual("var/app")


def dec_nf(v0: Nf, v1: Nf, ctx: Context, ty: Type) -> DecResult:
    nty = norm_ty(ty)
    match nty, v0, v1:
        case NPi(dom, cod), NLam(b0), NLam(b1):
            return dec_nf(b0, b1, ctx + (embed_nty(dom),), embed_nty(cod))
        case NU(), NeuU(n0), NeuU(n1):
            return dec_ne(n0, n1, ctx)
        case NEl(_), NeuEl(n0), NeuEl(n1):
            return dec_ne(n0, n1, ctx)
    return NotEqual("normal form does not fit its type")
