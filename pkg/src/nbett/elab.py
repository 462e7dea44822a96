"""Bidirectional elaboration of surface syntax into core syntax.

Variables, applications and annotations are inferred; lambdas are checked
against a Pi type.  Named variables become de Bruijn projections out of the
identity substitution, and types are compared with the conversion checker,
so a term is accepted at any type convertible to its inferred one.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import nbe
from .normal import NPi, embed_nty, norm_ty
from .pretty import nty_text
from .renaming import Var, embed_var
from .surface import Assume, Check, Item, SAnn, SApp, SEl, SLam, SPi, SU, SurfaceTerm, SVar
from .syntax import Context, El, Lam, Pi, Term, Type, U, apply_tm, single_subst, SubstTy, var_type


class ElabError(ValueError):
    def __init__(self, message: str, pos: tuple | None = None):
        line, col = pos or (0, 0)
        super().__init__(f"{line}:{col}: {message}" if pos else message)
        self.message, self.line, self.col = message, line, col


@dataclass(frozen=True)
class Signature:
    """Names in scope (innermost last) with their elaborated context.

    Serves both as the toplevel signature of assumptions and as the local
    scope under binders.  Lookup finds the innermost binding of a name.
    """

    names: tuple = ()
    ctx: Context = ()

    def extend(self, name: str, ty: Type) -> "Signature":
        return Signature(self.names + (name,), self.ctx + (ty,))

    def lookup(self, name: str) -> int | None:
        for i, n in enumerate(reversed(self.names)):
            if n == name:
                return i
        return None

    def show_type(self, ty: Type) -> str:
        return nty_text(nbe.norm_type(self.ctx, ty), self.names)


def infer_type(sig: Signature, e: SurfaceTerm) -> tuple[Term, Type]:
    match e:
        case SVar(name):
            i = sig.lookup(name)
            if i is None:
                raise ElabError(f"unbound name {name!r}", e.pos)
            return embed_var(Var(i)), var_type(sig.ctx, i)
        case SApp(SLam(name, body), arg):
            # a lambda applied directly: its domain is the argument's type
            arg_tm, arg_ty = infer_type(sig, arg)
            body_tm, body_ty = infer_type(sig.extend(name, arg_ty), body)
            return apply_tm(Lam(body_tm), arg_tm), SubstTy(body_ty, single_subst(arg_tm))
        case SApp(fn, arg):
            fn_tm, fn_ty = infer_type(sig, fn)
            nty = norm_ty(fn_ty)
            if not isinstance(nty, NPi):
                raise ElabError(f"cannot apply a term of non-function type {sig.show_type(fn_ty)}", e.pos)
            arg_tm = check_type(sig, arg, embed_nty(nty.dom))
            return apply_tm(fn_tm, arg_tm), SubstTy(embed_nty(nty.cod), single_subst(arg_tm))
        case SAnn(term, ty):
            a = elab_type(sig, ty)
            return check_type(sig, term, a), a
        case SLam():
            raise ElabError("cannot infer the type of an unannotated lambda", e.pos)
        case SU() | SEl() | SPi():
            raise ElabError("a type cannot be used as a term", e.pos)
    raise ElabError(f"not a surface term: {e!r}")


def check_type(sig: Signature, e: SurfaceTerm, ty: Type) -> Term:
    if isinstance(e, SLam):
        nty = norm_ty(ty)
        if not isinstance(nty, NPi):
            raise ElabError(f"lambda checked against non-Pi type {sig.show_type(ty)}", e.pos)
        return Lam(check_type(sig.extend(e.name, embed_nty(nty.dom)), e.body, embed_nty(nty.cod)))
    tm, actual = infer_type(sig, e)
    if not nbe.conv_ty(sig.ctx, actual, ty):
        raise ElabError(
            f"type mismatch: expected {sig.show_type(ty)}, got {sig.show_type(actual)}", e.pos
        )
    return tm


def elab_type(sig: Signature, e: SurfaceTerm) -> Type:
    match e:
        case SU():
            return U()
        case SEl(code):
            return El(check_type(sig, code, U()))
        case SPi(name, dom, cod):
            a = elab_type(sig, dom)
            return Pi(a, elab_type(sig.extend(name, a), cod))
    raise ElabError("expected a type", e.pos)


@dataclass(frozen=True)
class CheckedItem:
    item: Item
    term: Term | None
    ty: Type


def elab_items(items: list[Item], sig: Signature = Signature()) -> tuple[Signature, list[CheckedItem]]:
    """Elaborate a file's items in order; the first error is raised."""
    out = []
    for item in items:
        match item:
            case Assume(name, ty):
                a = elab_type(sig, ty)
                sig = sig.extend(name, a)
                out.append(CheckedItem(item, None, a))
            case Check(term, ty):
                a = elab_type(sig, ty)
                out.append(CheckedItem(item, check_type(sig, term, a), a))
    return sig, out
