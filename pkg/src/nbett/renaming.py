"""The category of renamings: typed de Bruijn variables and variable lists."""
from __future__ import annotations

from dataclasses import dataclass

from .syntax import WK, Empty, Ext, Id, Proj2, Subst, SubstTm, Term


@dataclass(frozen=True, slots=True, order=True)
class Var:
    """De Bruijn index; ``Var(0)`` is the innermost variable."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("negative de Bruijn index")


VZe = Var(0)


def VSu(x: Var) -> Var:
    return Var(x.index + 1)


@dataclass(frozen=True, slots=True)
class Renaming:
    """A morphism ``Vars dom target`` of the renaming category.

    ``vars`` has one entry per entry of the target context (outermost first),
    each a variable of the source context.  ``dom`` is the source context
    length: quoting under a renamed closure needs it to pick fresh variables.
    """

    vars: tuple = ()
    dom: int = 0

    def __post_init__(self):
        for x in self.vars:
            if x.index >= self.dom:
                raise ValueError(f"{x} not in scope of a source context of length {self.dom}")

    @property
    def cod(self) -> int:
        return len(self.vars)

    def ext(self, x: Var) -> "Renaming":
        return Renaming(self.vars + (x,), self.dom)

    def is_identity(self) -> bool:
        n = len(self.vars)
        return self.dom == n and all(x.index == n - 1 - j for j, x in enumerate(self.vars))


def REmpty(dom: int = 0) -> Renaming:
    return Renaming((), dom)


def embed_var(x: Var) -> Term:
    tm: Term = Proj2(Id())
    for _ in range(x.index):
        tm = SubstTm(tm, WK)
    return tm


def embed_renaming(ren: Renaming) -> Subst:
    sub: Subst = Empty()
    for x in ren.vars:
        sub = Ext(sub, embed_var(x))
    return sub


def weaken_renaming(ren: Renaming) -> Renaming:
    return Renaming(tuple(VSu(x) for x in ren.vars), ren.dom + 1)


def id_renaming(ctx_len) -> Renaming:
    """Identity renaming on a context (or a context length)."""
    n = ctx_len if isinstance(ctx_len, int) else len(ctx_len)
    ren = REmpty()
    for _ in range(n):
        ren = weaken_renaming(ren).ext(VZe)
    return ren


def wk_renaming(ctx_len: int) -> Renaming:
    """``wkV id``: the projection from a context extended by one entry."""
    return weaken_renaming(id_renaming(ctx_len))


def lift_renaming(ren: Renaming) -> Renaming:
    return weaken_renaming(ren).ext(VZe)


def rename_var(x: Var, ren: Renaming) -> Var:
    if x.index >= len(ren.vars):
        raise IndexError(f"{x} out of range of a renaming into a context of length {len(ren.vars)}")
    return ren.vars[-1 - x.index]


def compose_renaming(first: Renaming, second: Renaming) -> Renaming:
    """``first o second``: rename the entries of ``first`` along ``second``."""
    if first.dom != second.cod:
        raise ValueError(f"cannot compose: {first.dom} != {second.cod}")
    return Renaming(tuple(rename_var(x, second) for x in first.vars), second.dom)


def all_renamings(dom: int, cod: int):
    """Every untyped renaming from a context of length ``dom`` into one of length ``cod``."""
    if cod == 0:
        yield REmpty(dom)
        return
    for prefix in all_renamings(dom, cod - 1):
        for i in range(dom):
            yield prefix.ext(Var(i))
