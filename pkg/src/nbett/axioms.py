"""The sixteen conversion axioms of the object theory, as schemas.

Executable data cannot be quotiented, so the equations between core
constructors live here as a catalog: each :class:`ConvAxiom` is a pair of
schemas over metavariables.  The catalog drives the soundness suite (every
well-typed instance must have equal normal forms) and supports one-step
rewriting for cross-checking the conversion oracle.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterator

from .syntax import (
    WK,
    App,
    Comp,
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
    U,
)


@dataclass(frozen=True, slots=True)
class Meta:
    """A schema metavariable; ``sort`` is ``"ty"``, ``"tm"`` or ``"sub"``."""

    name: str
    sort: str


@dataclass(frozen=True)
class ConvAxiom:
    name: str
    sort: str  # sort of both sides
    lhs: object
    rhs: object
    side_condition: str = ""

    @property
    def metas(self) -> frozenset:
        return frozenset(metas_of(self.lhs)) | frozenset(metas_of(self.rhs))


A, B = Meta("A", "ty"), Meta("B", "ty")
a, t = Meta("a", "tm"), Meta("t", "tm")
sigma, nu, delta = Meta("sigma", "sub"), Meta("nu", "sub"), Meta("delta", "sub")

# sigma lifted under a binder, spelled out so the schema is plain data
_LIFT = Ext(Comp(sigma, WK), Proj2(Id()))

CATALOG: tuple[ConvAxiom, ...] = (
    ConvAxiom("[id]", "ty", SubstTy(A, Id()), A),
    ConvAxiom("[][]", "ty", SubstTy(SubstTy(A, sigma), nu), SubstTy(A, Comp(sigma, nu))),
    ConvAxiom("U[]", "ty", SubstTy(U(), sigma), U()),
    ConvAxiom("El[]", "ty", SubstTy(El(a), sigma), El(SubstTm(a, sigma))),
    ConvAxiom("Π[]", "ty", SubstTy(Pi(A, B), sigma), Pi(SubstTy(A, sigma), SubstTy(B, _LIFT))),
    ConvAxiom("id∘", "sub", Comp(Id(), sigma), sigma),
    ConvAxiom("∘id", "sub", Comp(sigma, Id()), sigma),
    ConvAxiom("∘∘", "sub", Comp(Comp(sigma, nu), delta), Comp(sigma, Comp(nu, delta))),
    ConvAxiom("εη", "sub", sigma, Empty(), "sigma targets the empty context"),
    ConvAxiom("π₁β", "sub", Proj1(Ext(sigma, t)), sigma),
    ConvAxiom("πη", "sub", Ext(Proj1(sigma), Proj2(sigma)), sigma, "sigma targets an extended context"),
    ConvAxiom(",∘", "sub", Comp(Ext(sigma, t), nu), Ext(Comp(sigma, nu), SubstTm(t, nu))),
    ConvAxiom("π₂β", "tm", Proj2(Ext(sigma, t)), t),
    ConvAxiom("Πβ", "tm", App(Lam(t)), t),
    ConvAxiom("Πη", "tm", Lam(App(t)), t, "t has a Pi type"),
    ConvAxiom("lam[]", "tm", SubstTm(Lam(t), sigma), Lam(SubstTm(t, _LIFT))),
)

AXIOMS: dict[str, ConvAxiom] = {ax.name: ax for ax in CATALOG}


def metas_of(schema) -> Iterator[Meta]:
    if isinstance(schema, Meta):
        yield schema
    elif dataclasses.is_dataclass(schema):
        for f in dataclasses.fields(schema):
            yield from metas_of(getattr(schema, f.name))


def instantiate(schema, binding: dict):
    """Replace every metavariable in ``schema`` by its binding."""
    if isinstance(schema, Meta):
        return binding[schema.name]
    if dataclasses.is_dataclass(schema):
        return type(schema)(*(instantiate(getattr(schema, f.name), binding) for f in dataclasses.fields(schema)))
    return schema


def match(schema, target, binding: dict | None = None) -> dict | None:
    """First-order matching; returns the extended binding or ``None``."""
    binding = dict(binding or {})
    if isinstance(schema, Meta):
        if schema.name in binding:
            return binding if binding[schema.name] == target else None
        binding[schema.name] = target
        return binding
    if type(schema) is not type(target):
        return None
    if not dataclasses.is_dataclass(schema):
        return binding if schema == target else None
    for f in dataclasses.fields(schema):
        binding = match(getattr(schema, f.name), getattr(target, f.name), binding)
        if binding is None:
            return None
    return binding


def rewrite_at_root(x, ax: ConvAxiom, reverse: bool = False):
    """Rewrite ``x`` by ``ax`` at the root, or return ``None`` if it does not match.

    Side conditions are not checked, and a reversed rewrite is refused when the
    target side mentions a metavariable the source side does not bind.
    """
    src, dst = (ax.rhs, ax.lhs) if reverse else (ax.lhs, ax.rhs)
    binding = match(src, x)
    if binding is None or not set(m.name for m in metas_of(dst)) <= binding.keys():
        return None
    return instantiate(dst, binding)


def rewrites(x, axioms=CATALOG, skip_side_conditions: bool = True) -> Iterator[tuple[str, object]]:
    """All left-to-right one-step rewrites of ``x`` at any position.

    Axioms with a typing side condition are skipped by default, since the
    syntax alone cannot tell whether they apply.
    """
    for ax in axioms:
        if skip_side_conditions and ax.side_condition:
            continue
        out = rewrite_at_root(x, ax)
        if out is not None:
            yield ax.name, out
    if dataclasses.is_dataclass(x):
        fields = dataclasses.fields(x)
        for i, f in enumerate(fields):
            for name, sub in rewrites(getattr(x, f.name), axioms, skip_side_conditions):
                args = [getattr(x, g.name) for g in fields]
                args[i] = sub
                yield name, type(x)(*args)
