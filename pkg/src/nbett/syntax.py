"""Explicit-substitution core syntax.

Contexts are tuples of types, innermost entry last.  Terms have no variable
constructor: a de Bruijn variable is a second projection out of a chain of
first projections of the identity (see :func:`nbett.renaming.embed_var`).
Nothing carries a type annotation; well-typedness is established by the
elaborator or by :mod:`nbett.corecheck`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

# -- types -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class U:
    pass


@dataclass(frozen=True, slots=True)
class El:
    code: "Term"


@dataclass(frozen=True, slots=True)
class Pi:
    dom: "Type"
    cod: "Type"  # scoped in the context extended by ``dom``


@dataclass(frozen=True, slots=True)
class SubstTy:
    ty: "Type"
    sub: "Subst"


# -- terms -------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Lam:
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    """Categorical application: ``fn : Tm G (Pi A B)`` gives ``App(fn) : Tm (G, A) B``."""

    fn: "Term"


@dataclass(frozen=True, slots=True)
class Proj2:
    sub: "Subst"


@dataclass(frozen=True, slots=True)
class SubstTm:
    tm: "Term"
    sub: "Subst"


# -- substitutions -----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Id:
    pass


@dataclass(frozen=True, slots=True)
class Comp:
    """``Comp(first, second)`` is ``first o second``: apply ``second`` first."""

    first: "Subst"
    second: "Subst"


@dataclass(frozen=True, slots=True)
class Empty:
    pass


@dataclass(frozen=True, slots=True)
class Ext:
    sub: "Subst"
    tm: "Term"


@dataclass(frozen=True, slots=True)
class Proj1:
    sub: "Subst"


Type = Union[U, El, Pi, SubstTy]
Term = Union[Lam, App, Proj2, SubstTm]
Subst = Union[Id, Comp, Empty, Ext, Proj1]
Context = tuple  # tuple[Type, ...]

TYPE_CLASSES = (U, El, Pi, SubstTy)
TERM_CLASSES = (Lam, App, Proj2, SubstTm)
SUBST_CLASSES = (Id, Comp, Empty, Ext, Proj1)


def sort_of(x) -> str:
    if isinstance(x, TYPE_CLASSES):
        return "ty"
    if isinstance(x, TERM_CLASSES):
        return "tm"
    if isinstance(x, SUBST_CLASSES):
        return "sub"
    raise TypeError(f"not core syntax: {x!r}")


# -- derived operators -------------------------------------------------------

WK = Proj1(Id())  # weakening by one: Tms (G, A) G


def lift_subst(sub: Subst, ty: Type | None = None) -> Subst:
    """``sub`` lifted under a binder: ``(sub o p1 id), p2 id``.

    ``ty`` is the bound type over the codomain; it does not occur in the
    result and is accepted only so call sites read like the typing rule.
    """
    return Ext(Comp(sub, WK), Proj2(Id()))


def single_subst(tm: Term) -> Subst:
    return Ext(Id(), tm)


def apply_tm(fn: Term, arg: Term) -> Term:
    return SubstTm(App(fn), single_subst(arg))


def weaken_ty(ty: Type, times: int = 1) -> Type:
    for _ in range(times):
        ty = SubstTy(ty, WK)
    return ty


def var_type(ctx: Context, index: int) -> Type:
    """Type of de Bruijn variable ``index`` in ``ctx``, weakened into ``ctx``."""
    if not 0 <= index < len(ctx):
        raise IndexError(f"variable {index} out of scope in context of length {len(ctx)}")
    return weaken_ty(ctx[len(ctx) - 1 - index], index + 1)


def size(x) -> int:
    """Number of core constructors in a type, term or substitution."""
    match x:
        case U() | Id() | Empty():
            return 1
        case El(a) | Lam(a) | App(a) | Proj2(a) | Proj1(a):
            return 1 + size(a)
        case Pi(a, b) | SubstTy(a, b) | SubstTm(a, b) | Comp(a, b) | Ext(a, b):
            return 1 + size(a) + size(b)
    raise TypeError(f"not core syntax: {x!r}")
