"""Evaluation into a Kripke semantic domain over the category of renamings.

Values live in an ambient context (tracked by its length).  A function value
is a closure that can be applied after any renaming of its ambient context,
which is what lets quotation go under binders by weakening with ``wkV id``.
The proof components of the logical predicate are erased: a value at a base
type is just its neutral witness.
"""
from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Union

from .config import DEFAULT_FUEL
from .normal import NApp, Ne, rename_ne
from .renaming import Renaming, id_renaming
from .syntax import (
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
    Subst,
    SubstTm,
    SubstTy,
    Term,
    Type,
    U,
)


class EvalError(RuntimeError):
    """Evaluation got stuck: an ill-typed term escaped the checker."""


class FuelExhausted(EvalError):
    pass


@dataclass(frozen=True, slots=True)
class Env:
    values: tuple = ()  # innermost last
    size: int = 0  # length of the ambient context

    def extend(self, value: "Value") -> "Env":
        return Env(self.values + (value,), self.size)

    def pop(self) -> "Env":
        if not self.values:
            raise EvalError("projection out of an empty environment")
        return Env(self.values[:-1], self.size)

    def top(self) -> "Value":
        if not self.values:
            raise EvalError("projection out of an empty environment")
        return self.values[-1]


@dataclass(frozen=True, slots=True)
class Closure:
    env: Env
    body: Term


@dataclass(frozen=True, slots=True)
class TyClosure:
    env: Env
    body: Type


@dataclass(frozen=True, slots=True)
class VNeutral:
    ne: Ne
    ty: "VType"


@dataclass(frozen=True, slots=True)
class VFun:
    closure: Closure


@dataclass(frozen=True, slots=True)
class VU:
    pass


@dataclass(frozen=True, slots=True)
class VEl:
    code: "Value"


@dataclass(frozen=True, slots=True)
class VPi:
    dom: "VType"
    cod: TyClosure


Value = Union[VNeutral, VFun]
VType = Union[VU, VEl, VPi]


# -- fuel --------------------------------------------------------------------

_fuel: ContextVar = ContextVar("nbett_fuel", default=None)


@contextmanager
def fuel(limit: int = DEFAULT_FUEL):
    """Bound the number of evaluation steps in the enclosed block.

    Nested uses share the outermost budget.
    """
    if _fuel.get() is not None:
        yield
        return
    token = _fuel.set([limit])
    try:
        yield
    finally:
        _fuel.reset(token)


def _tick():
    box = _fuel.get()
    if box is not None:
        box[0] -= 1
        if box[0] < 0:
            raise FuelExhausted("evaluation fuel exhausted")


# -- evaluation --------------------------------------------------------------


def eval_tm(tm: Term, env: Env) -> Value:
    _tick()
    match tm:
        case SubstTm(inner, sub):
            return eval_tm(inner, eval_sub(sub, env))
        case Proj2(sub):
            return eval_sub(sub, env).top()
        case Lam(body):
            return VFun(Closure(env, body))
        case App(fn):
            fn_val = eval_tm(fn, env.pop())
            return apply_vfun(fn_val, id_renaming(env.size), env.top())
    raise EvalError(f"not a term: {tm!r}")


def eval_sub(sub: Subst, env: Env) -> Env:
    _tick()
    match sub:
        case Id():
            return env
        case Comp(first, second):
            return eval_sub(first, eval_sub(second, env))
        case Empty():
            return Env((), env.size)
        case Ext(rest, tm):
            return eval_sub(rest, env).extend(eval_tm(tm, env))
        case Proj1(inner):
            return eval_sub(inner, env).pop()
    raise EvalError(f"not a substitution: {sub!r}")


def eval_ty(ty: Type, env: Env) -> VType:
    _tick()
    match ty:
        case U():
            return VU()
        case El(code):
            return VEl(eval_tm(code, env))
        case Pi(dom, cod):
            return VPi(eval_ty(dom, env), TyClosure(env, cod))
        case SubstTy(inner, sub):
            return eval_ty(inner, eval_sub(sub, env))
    raise EvalError(f"not a type: {ty!r}")


def instantiate(clo: TyClosure, value: Value) -> VType:
    return eval_ty(clo.body, clo.env.extend(value))


def apply_vfun(fn: Value, ren: Renaming, arg: Value) -> Value:
    """Apply a function value living in the target of ``ren`` at the source of ``ren``."""
    match fn:
        case VFun(Closure(env, body)):
            return eval_tm(body, rename_env(env, ren).extend(arg))
        case VNeutral(ne, VPi(dom, cod)):
            arg_nf = nbe.quote(rename_vtype(dom, ren), arg, ren.dom)
            cod_ty = instantiate(rename_tyclosure(cod, ren), arg)
            return VNeutral(NApp(rename_ne(ne, ren), arg_nf), cod_ty)
    raise EvalError(f"applying a non-function value {fn!r}")


# -- the presheaf action -----------------------------------------------------


def rename_value(value: Value, ren: Renaming) -> Value:
    if ren.is_identity():
        return value
    match value:
        case VNeutral(ne, ty):
            return VNeutral(rename_ne(ne, ren), rename_vtype(ty, ren))
        case VFun(Closure(env, body)):
            return VFun(Closure(rename_env(env, ren), body))
    raise EvalError(f"not a value: {value!r}")


def rename_vtype(ty: VType, ren: Renaming) -> VType:
    if ren.is_identity():
        return ty
    match ty:
        case VU():
            return ty
        case VEl(code):
            return VEl(rename_value(code, ren))
        case VPi(dom, cod):
            return VPi(rename_vtype(dom, ren), rename_tyclosure(cod, ren))
    raise EvalError(f"not a semantic type: {ty!r}")


def rename_tyclosure(clo: TyClosure, ren: Renaming) -> TyClosure:
    return TyClosure(rename_env(clo.env, ren), clo.body)


def rename_env(env: Env, ren: Renaming) -> Env:
    if len(ren.vars) != env.size:
        raise EvalError(f"renaming into a context of length {len(ren.vars)} applied at {env.size}")
    if ren.is_identity():
        return env
    return Env(tuple(rename_value(v, ren) for v in env.values), ren.dom)


# quote and apply_vfun are mutually recursive
from . import nbe  # noqa: E402
