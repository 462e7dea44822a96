import pytest
from hypothesis import given, strategies as st

from nbett.enumeration import enumerate_nf
from nbett.generate import raw_subs, raw_terms, raw_types
from nbett.normal import NApp, NEl, NLam, NPi, NU, NVar, NeuU, embed_nf
from nbett.pretty import CoreParseError, core_text, fresh_name, nf_json, nf_text, nty_text, parse_core, unembed
from nbett.renaming import VSu, VZe
from nbett.syntax import WK, Comp, Ext, Id, Pi, Proj2, SubstTm, SubstTy, U

from conftest import PI_U_U, V0


def test_core_text_examples():
    assert core_text(SubstTy(Pi(U(), U()), WK)) == "Pi(U,U)[p1(id)]"
    assert core_text(SubstTm(V0, Ext(Comp(Id(), WK), V0))) == "p2(id)[ext(comp(id,p1(id)),p2(id))]"


@pytest.mark.parametrize("n", range(1, 7))
def test_core_round_trip_exhaustive(n):
    for sort, kind in (("tm", raw_terms), ("sub", raw_subs), ("ty", raw_types)):
        for x in kind(n):
            assert parse_core(core_text(x), sort) == x


@given(st.sampled_from(raw_terms(7)))
def test_core_round_trip_tolerates_whitespace(t):
    spaced = core_text(t).replace(",", ", ").replace("(", "( ")
    assert parse_core(spaced, "tm") == t


@pytest.mark.parametrize("text,sort", [("lam(", "tm"), ("U U", "ty"), ("foo", "sub"), ("p2(id) !", "tm")])
def test_core_parse_errors(text, sort):
    with pytest.raises(CoreParseError):
        parse_core(text, sort)


def test_fresh_names():
    assert fresh_name(()) == "x"
    assert fresh_name(("x",)) == "x1"
    assert fresh_name(("x", "x1")) == "x2"


def test_nf_text():
    assert nf_text(NLam(NeuU(NApp(NVar(VSu(VZe)), NeuU(NVar(VZe))))), ("f",)) == "\\x. f x"
    assert nf_text(NLam(NeuU(NVar(VZe)))) == "\\x. x"
    nested = NeuU(NApp(NVar(VSu(VZe)), NeuU(NApp(NVar(VSu(VZe)), NeuU(NVar(VZe))))))
    assert nf_text(nested, ("g", "a")) == "g (g a)"
    lam_arg = NeuU(NApp(NVar(VZe), NLam(NeuU(NVar(VZe)))))
    assert nf_text(lam_arg, ("h",)) == "h (\\x. x)"
    # binder names avoid the names in scope
    assert nf_text(NLam(NeuU(NVar(VSu(VZe)))), ("x",)) == "\\x1. x"


def test_nty_text():
    assert nty_text(NPi(NU(), NEl(V0))) == "(x : U) -> El x"
    assert nty_text(NEl(SubstTm(V0, WK)), ("a", "b")) == "El a"
    assert nty_text(NEl(Proj2(WK)), ("a", "b")) == "El {p2(p1(id))}"


def test_unembed_inverts_embedding():
    ctx = (U(), PI_U_U)
    for v in enumerate_nf(ctx, U(), 6):
        assert unembed(embed_nf(v)) == v
    assert unembed(Proj2(WK)) is None


def test_nf_json():
    assert nf_json(NLam(NeuU(NVar(VZe)))) == {"lam": {"neuU": {"var": 0}}}
