import pytest
from hypothesis import given, strategies as st

from nbett import nbe
from nbett.enumeration import enumerate_nf
from nbett.normal import (
    Equal,
    NApp,
    NEl,
    NLam,
    NPi,
    NotEqual,
    NU,
    NVar,
    NeuEl,
    NeuU,
    ShapeMismatch,
    dec_ne,
    dec_nf,
    dec_var,
    embed_ne,
    embed_nf,
    embed_nf_list,
    embed_nty,
    inj_ctx_ext,
    inj_el,
    inj_pi,
    inj_pi_domain,
    nf_size,
    norm_ty,
    rename_nf,
    type_of_ne,
)
from nbett.renaming import REmpty, Var, VSu, VZe, all_renamings, compose_renaming, id_renaming
from nbett.syntax import WK, El, Empty, Ext, Id, Pi, Proj2, SubstTm, SubstTy, U, apply_tm, lift_subst

from conftest import PI_U_EL, PI_U_U, V0, V1


def test_embed_examples():
    assert embed_nf(NeuU(NVar(VZe))) == Proj2(Id())
    ne = NApp(NVar(VSu(VZe)), NeuU(NVar(VZe)))
    assert embed_ne(ne) == apply_tm(SubstTm(Proj2(Id()), WK), Proj2(Id()))
    assert embed_nf(NLam(NeuU(NVar(VZe)))).body == Proj2(Id())
    assert embed_nf_list(()) == Empty()
    assert embed_nf_list((NeuU(NVar(VZe)),)) == Ext(Empty(), Proj2(Id()))


def test_nf_size_ignores_coercions():
    assert nf_size(NeuU(NVar(VZe))) == 1
    assert nf_size(NLam(NeuU(NApp(NVar(VSu(VZe)), NeuU(NVar(VZe)))))) == 4


def test_rename_examples():
    v = NeuU(NVar(VZe))
    assert rename_nf(v, REmpty(2).ext(VSu(VZe))) == NeuU(NVar(VSu(VZe)))
    lam = NLam(NeuU(NApp(NVar(VSu(VZe)), NeuU(NVar(VZe)))))
    moved = rename_nf(lam, REmpty(2).ext(VSu(VZe)))
    assert moved == NLam(NeuU(NApp(NVar(Var(2)), NeuU(NVar(VZe)))))


def test_norm_ty_examples():
    sigma = WK
    assert norm_ty(SubstTy(U(), sigma)) == NU()
    assert norm_ty(SubstTy(El(V0), sigma)) == NEl(SubstTm(V0, sigma))
    assert norm_ty(SubstTy(Pi(U(), U()), sigma)) == NPi(
        norm_ty(SubstTy(U(), sigma)), norm_ty(SubstTy(U(), lift_subst(sigma, U())))
    )
    nested = norm_ty(SubstTy(SubstTy(El(V0), WK), Id()))
    assert isinstance(nested, NEl)


def test_norm_ty_after_embed_is_identity_on_examples():
    for nty in [NU(), NPi(NU(), NU()), NPi(NU(), NEl(V0)), NEl(SubstTm(V0, WK))]:
        assert norm_ty(embed_nty(nty)) == nty
    assert embed_nty(NU()) == U()


def test_injectivity_helpers():
    assert inj_pi_domain(NPi(NU(), NU()), NPi(NU(), NU())) == (NU(), NU())
    assert inj_pi(NPi(NU(), NEl(V0)), NPi(NU(), NU()))[1] == (NEl(V0), NU())
    assert inj_el(NEl(V0), NEl(V0)) == (V0, V0)
    assert inj_ctx_ext((U(), U()), (U(), PI_U_U)) == (((U(),), (U(),)), (U(), PI_U_U))
    with pytest.raises(ShapeMismatch):
        inj_pi(NU(), NPi(NU(), NU()))
    with pytest.raises(ShapeMismatch):
        inj_el(NU(), NU())
    with pytest.raises(ShapeMismatch):
        inj_ctx_ext((), (U(),))


def test_dec_var_examples():
    assert dec_var(VZe, VZe) == Equal()
    assert isinstance(dec_var(VZe, VSu(VZe)), NotEqual)


@pytest.mark.parametrize("n", range(5))
def test_dec_var_agrees_with_structural_equality(n):
    for i in range(n):
        for j in range(n):
            assert bool(dec_var(Var(i), Var(j))) == (i == j)


def test_dec_ne_examples():
    ctx = (U(), PI_U_U, U())
    f = NVar(VSu(VZe))
    assert dec_ne(NVar(VZe), NVar(VZe), ctx)
    assert not dec_ne(NVar(VZe), NApp(f, NeuU(NVar(VZe))), ctx)
    a0, a1 = NeuU(NVar(VZe)), NeuU(NVar(Var(2)))
    assert dec_ne(NApp(f, a0), NApp(f, a0), ctx)
    res = dec_ne(NApp(f, a0), NApp(f, a1), ctx)
    assert not res and res.reason.startswith("argument")


def test_dec_nf_examples():
    ctx = (U(), U())
    assert dec_nf(NeuU(NVar(VZe)), NeuU(NVar(VZe)), ctx, U())
    assert not dec_nf(NeuU(NVar(VZe)), NeuU(NVar(VSu(VZe))), ctx, U())
    # ill-typed input is refused, not explored
    assert not dec_nf(NLam(NeuU(NVar(VZe))), NLam(NeuU(NVar(VZe))), ctx, U())


CTX_TYPES = [
    ((PI_U_U,), PI_U_U),
    ((U(), PI_U_U), U()),
    ((U(), PI_U_EL), El(V1)),
    ((U(), PI_U_U), PI_U_U),
    ((PI_U_EL, U()), El(V0)),
]


@pytest.mark.parametrize("ctx,ty", CTX_TYPES)
def test_dec_nf_is_structural_equality_on_enumeration(ctx, ty):
    nfs = enumerate_nf(ctx, ty, 6)
    assert nfs
    for v0 in nfs:
        for v1 in nfs:
            assert bool(dec_nf(v0, v1, ctx, ty)) == (v0 == v1)


@pytest.mark.parametrize("ctx,ty", CTX_TYPES)
def test_presheaf_laws_for_normal_forms(ctx, ty):
    n = len(ctx)
    for v in enumerate_nf(ctx, ty, 5):
        assert rename_nf(v, id_renaming(n)) == v
        for beta in all_renamings(n, n):
            for gamma in all_renamings(n + 1, n):
                once = rename_nf(rename_nf(v, beta), gamma)
                assert once == rename_nf(v, compose_renaming(beta, gamma))


def test_type_of_ne_applies_the_codomain():
    ctx = (U(), PI_U_EL)
    ne = NApp(NVar(VZe), NeuU(NVar(VSu(VZe))))
    ty = type_of_ne(ne, ctx)
    assert nbe.norm_type(ctx, ty) == NEl(V1)
    with pytest.raises(ShapeMismatch):
        type_of_ne(NApp(NVar(VSu(VZe)), NeuU(NVar(VZe))), ctx)


@given(st.sampled_from(CTX_TYPES), st.data())
def test_stability_property(ctx_ty, data):
    ctx, ty = ctx_ty
    v = data.draw(st.sampled_from(enumerate_nf(ctx, ty, 6)))
    assert nbe.norm(ctx, ty, embed_nf(v)) == v
