import pytest

from nbett import nbe
from nbett.corecheck import check_tm
from nbett.elab import ElabError, Signature, check_type, elab_items, elab_type, infer_type
from nbett.normal import NLam, NVar, NeuU
from nbett.renaming import VZe
from nbett.surface import parse, parse_expr
from nbett.syntax import El, Lam, Pi, U, apply_tm

from conftest import PI_U_U, V0, V1


def sig_of(text):
    return elab_items(parse(text))[0]


def test_variable():
    sig = Signature().extend("a", U())
    tm, ty = infer_type(sig, parse_expr("a"))
    assert tm == V0 and nbe.conv_ty(sig.ctx, ty, U())


def test_application():
    sig = sig_of("assume f : (x : U) -> U\nassume a : U")
    tm, ty = infer_type(sig, parse_expr("f a"))
    assert tm == apply_tm(V1, V0)
    assert nbe.conv_ty(sig.ctx, ty, U())


def test_applying_a_non_function():
    sig = sig_of("assume a : U")
    with pytest.raises(ElabError, match="non-function"):
        infer_type(sig, parse_expr("a a"))


def test_check_lambda():
    tm = check_type(Signature(), parse_expr("\\x. x"), PI_U_U)
    assert tm == Lam(V0)
    assert nbe.norm((), PI_U_U, tm) == NLam(NeuU(NVar(VZe)))
    with pytest.raises(ElabError, match="non-Pi"):
        check_type(Signature(), parse_expr("\\x. x"), U())


def test_check_up_to_conversion():
    sig = sig_of("assume a : U\nassume e : El a")
    tm = check_type(sig, parse_expr("e"), El(apply_tm(Lam(V0), V1)))
    assert tm == V0


def test_applied_lambda_is_inferable():
    sig = sig_of("assume a : U")
    tm, ty = infer_type(sig, parse_expr("(\\x. x) a"))
    assert nbe.norm(sig.ctx, ty, tm) == NeuU(NVar(VZe))


def test_elab_type():
    assert elab_type(Signature(), parse_expr("U")) == U()
    assert elab_type(Signature(), parse_expr("(x : U) -> El x")) == Pi(U(), El(V0))
    with pytest.raises(ElabError, match="expected a type"):
        elab_type(Signature(), parse_expr("\\x. x"))


def test_types_are_not_terms():
    with pytest.raises(ElabError, match="type cannot be used as a term"):
        infer_type(Signature(), parse_expr("U"))


def test_unannotated_lambda_and_unbound_names():
    with pytest.raises(ElabError, match="unannotated lambda"):
        infer_type(Signature(), parse_expr("\\x. x"))
    with pytest.raises(ElabError, match="unbound") as info:
        infer_type(Signature(), parse_expr("  q"))
    assert (info.value.line, info.value.col) == (1, 3)


def test_mismatch_reports_normal_types():
    sig = sig_of("assume a : U\nassume e : El a")
    with pytest.raises(ElabError) as info:
        check_type(sig, parse_expr("e"), U())
    assert info.value.message == "type mismatch: expected U, got El a"


def test_shadowing_inner_binding_wins():
    sig = sig_of("assume x : U\nassume x : (y : U) -> U")
    tm = check_type(sig, parse_expr("x"), Pi(U(), U()))
    assert tm == V0
    tm = check_type(sig, parse_expr("\\x. x"), PI_U_U)
    assert tm == Lam(V0)


def test_elaborated_terms_recheck_in_core():
    text = "assume a : U\nassume f : (x : U) -> El x\ncheck f a : El a\ncheck (\\y. f y : (y : U) -> El y) : (z : U) -> El z"
    sig, items = elab_items(parse(text))
    for c in items:
        if c.term is not None:
            check_tm(sig.ctx[: 2], c.term, c.ty)
