import pytest

from nbett.axioms import CATALOG
from nbett.corecheck import check_tm
from nbett.generate import (
    GeneratorExhausted,
    axiom_instances,
    build_pool,
    canonical_ctx,
    check_judgment,
    context_menu,
    raw_subs,
    raw_terms,
    raw_types,
    surface_terms,
)
from nbett.surface import surface_size
from nbett.syntax import U, size

from conftest import PI_U_EL, PI_U_U


def test_raw_counts():
    assert [len(raw_terms(n)) for n in range(1, 7)] == [0, 2, 6, 22, 78, 286]
    assert [len(raw_subs(n)) for n in range(1, 5)] == [2, 2, 6, 18]
    assert [len(raw_types(n)) for n in range(1, 5)] == [1, 0, 5, 8]


@pytest.mark.parametrize("n", range(1, 6))
def test_raw_enumeration_sizes_and_distinctness(n):
    for kind in (raw_terms, raw_subs, raw_types):
        xs = kind(n)
        assert len(set(xs)) == len(xs)
        assert all(size(x) == n for x in xs)


def test_context_menu():
    menu = context_menu(1)
    assert menu == [(), (U(),), (PI_U_U,), (PI_U_EL,)]
    assert len(context_menu(2)) == 1 + 3 + 3 * 3 + 1  # (U, El x) is the extra one


def test_canonical_ctx_is_idempotent():
    for ctx in context_menu(2):
        assert canonical_ctx(ctx) == ctx
        assert canonical_ctx(canonical_ctx(ctx)) == canonical_ctx(ctx)


def test_pool_terms_are_well_typed(pool):
    for t in pool.typed_terms()[:300]:
        check_tm(t.ctx, t.tm, t.ty)


@pytest.mark.parametrize("ax", CATALOG, ids=lambda ax: ax.name)
def test_instance_judgments_hold(ax, pool):
    insts = axiom_instances(ax, 7, 30, pool)
    assert len({(i.ctx, i.lhs) for i in insts}) == 30
    for inst in insts:
        assert inst.judgments
        for j in inst.judgments:
            check_judgment(j)
        assert all(len(j[1]) <= 3 for j in inst.judgments)


def test_instances_are_reproducible(pool):
    assert axiom_instances("Πβ", 3, 10, pool) == axiom_instances("Πβ", 3, 10, pool)


def test_exhaustion_is_reported():
    tiny = build_pool([()], 2)
    with pytest.raises(GeneratorExhausted):
        axiom_instances("εη", 0, 50, tiny)


def test_surface_terms_have_the_requested_size():
    for n in range(1, 5):
        for e in surface_terms(n):
            assert surface_size(e) == n
    assert len(list(surface_terms(1))) == 1
