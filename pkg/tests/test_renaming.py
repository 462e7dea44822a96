import itertools

import pytest

from nbett import nbe
from nbett.renaming import (
    REmpty,
    Renaming,
    Var,
    VSu,
    VZe,
    all_renamings,
    compose_renaming,
    embed_renaming,
    embed_var,
    id_renaming,
    lift_renaming,
    rename_var,
    weaken_renaming,
    wk_renaming,
)
from nbett.oracle import Verdict, rewrite_oracle, rewrite_oracle_sub
from nbett.syntax import WK, Comp, Empty, Ext, Id, Proj1, Proj2, SubstTm, U

from conftest import PI_U_U


def test_embed_var_examples():
    assert embed_var(VZe) == Proj2(Id())
    assert embed_var(VSu(VZe)) == SubstTm(Proj2(Id()), Proj1(Id()))
    assert embed_var(VSu(VSu(VZe))) == SubstTm(SubstTm(Proj2(Id()), Proj1(Id())), Proj1(Id()))


def test_var_rejects_negative_index():
    with pytest.raises(ValueError):
        Var(-1)


def test_embed_renaming_examples():
    assert embed_renaming(REmpty()) == Empty()
    assert embed_renaming(REmpty(1).ext(VZe)) == Ext(Empty(), Proj2(Id()))


def test_weaken_renaming_examples():
    assert weaken_renaming(REmpty()).vars == ()
    assert weaken_renaming(REmpty(1).ext(VZe)).vars == (VSu(VZe),)


def test_id_renaming_examples():
    assert id_renaming(()) == REmpty()
    assert id_renaming((U(),)).vars == (VZe,)
    assert id_renaming((U(), U())).vars == (VSu(VZe), VZe)
    assert id_renaming(3).is_identity()
    assert not wk_renaming(2).is_identity()


def test_rename_var_examples():
    beta = REmpty(2).ext(VSu(VZe))
    assert rename_var(VZe, beta) == VSu(VZe)
    y = VSu(VZe)
    assert rename_var(VSu(VZe), REmpty(2).ext(VZe).ext(y)) == VZe
    with pytest.raises(IndexError):
        rename_var(VSu(VZe), beta)


def test_renaming_rejects_out_of_scope_variable():
    with pytest.raises(ValueError):
        Renaming((Var(1),), 1)


@pytest.mark.parametrize("n", range(5))
def test_rename_var_identity(n):
    for i in range(n):
        assert rename_var(Var(i), id_renaming(n)) == Var(i)


@pytest.mark.parametrize("n", range(5))
def test_compose_with_identity(n):
    for m in range(3):
        for gamma in all_renamings(m, n):
            assert compose_renaming(id_renaming(n), gamma) == gamma
            assert compose_renaming(gamma, id_renaming(m)) == gamma
    assert compose_renaming(REmpty(n), id_renaming(n)) == REmpty(n)


def test_compose_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        compose_renaming(id_renaming(2), id_renaming(3))


def test_composition_is_associative():
    for a, b, c, d in itertools.product(range(3), repeat=4):
        for beta in all_renamings(b, a):
            for gamma in all_renamings(c, b):
                for delta in all_renamings(d, c):
                    left = compose_renaming(compose_renaming(beta, gamma), delta)
                    right = compose_renaming(beta, compose_renaming(gamma, delta))
                    assert left == right


def test_all_renamings_counts():
    assert len(list(all_renamings(3, 2))) == 9
    assert list(all_renamings(0, 0)) == [REmpty()]
    assert list(all_renamings(0, 1)) == []


def test_lift_is_weaken_then_extend():
    beta = REmpty(2).ext(VZe)
    assert lift_renaming(beta) == Renaming((VSu(VZe), VZe), 3)


CTXS = [(), (U(),), (U(), PI_U_U), (PI_U_U, U(), U())]


@pytest.mark.parametrize("ctx", CTXS)
def test_embedded_identity_is_convertible_to_id(ctx):
    ren = embed_renaming(id_renaming(ctx))
    assert nbe.norm_sub(ctx, ctx, ren) == nbe.norm_sub(ctx, ctx, Id())
    assert rewrite_oracle_sub(ctx, ctx, ren, Id()) is Verdict.EQUAL


@pytest.mark.parametrize("ctx", CTXS[1:])
def test_lifted_identity_is_the_identity_of_the_extended_context(ctx):
    """``embed(id) lifted`` is convertible to ``embed(id)`` one level up."""
    ext = ctx + (U(),)
    lifted = Ext(Comp(embed_renaming(id_renaming(ctx)), WK), Proj2(Id()))
    assert rewrite_oracle_sub(ext, ext, lifted, embed_renaming(id_renaming(ext)), 8) is Verdict.EQUAL


def test_embedding_is_functorial():
    ctxs = {n: tuple(U() for _ in range(n)) for n in range(4)}
    for a, b, c in itertools.product(range(3), repeat=3):
        for beta in all_renamings(b, a):
            for gamma in all_renamings(c, b):
                lhs = Comp(embed_renaming(beta), embed_renaming(gamma))
                rhs = embed_renaming(compose_renaming(beta, gamma))
                assert nbe.norm_sub(ctxs[c], ctxs[a], lhs) == nbe.norm_sub(ctxs[c], ctxs[a], rhs)
                assert rewrite_oracle_sub(ctxs[c], ctxs[a], lhs, rhs) is Verdict.EQUAL
                wk = Comp(embed_renaming(beta), WK)
                assert nbe.norm_sub(ctxs[b + 1], ctxs[a], wk) == nbe.norm_sub(
                    ctxs[b + 1], ctxs[a], embed_renaming(weaken_renaming(beta))
                )


def test_embedding_commutes_with_variable_renaming():
    ctxs = {n: tuple(U() for _ in range(n)) for n in range(4)}
    for a, b in itertools.product(range(1, 4), repeat=2):
        for beta in all_renamings(b, a):
            for i in range(a):
                lhs = SubstTm(embed_var(Var(i)), embed_renaming(beta))
                rhs = embed_var(rename_var(Var(i), beta))
                assert nbe.conv(ctxs[b], U(), lhs, rhs)
                assert rewrite_oracle(ctxs[b], U(), lhs, rhs) is Verdict.EQUAL
