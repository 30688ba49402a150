import pytest

from crsatake.dsl import parse_spec
from crsatake.fibration import (
    NotFundamental,
    PsiNotSubset,
    fiber_nodes,
    fiber_over,
    fundamental_reduction,
    generated_roots,
    reduction_diagram,
    weak_reduction,
)
from crsatake.oracles import oracle_fundamental
from crsatake.parabolic import analyze, is_weakly_nondegenerate
from crsatake.rootcore import root_closure


def test_su13_over_psi1_fiber_is_black_cross():
    rep = fiber_over(parse_spec("su(1,3) cross {1,2}"), {1})
    eff = rep.effective_fiber
    assert eff.satake.labels == (2,) and eff.satake.black == frozenset({2}) and eff.crosses == frozenset({2})
    assert rep.Bsecond == frozenset({2})
    assert not rep.is_cr_fibration


def test_su13_over_psi2_fiber_trivial():
    rep = fiber_over(parse_spec("su(1,3) cross {1,2}"), {2})
    assert rep.effective_fiber.rootsys.rank == 0
    assert not rep.is_cr_fibration


def test_trivial_psi_equals_phi():
    cd = parse_spec("su(1,3) cross {1,2}")
    rep = fiber_over(cd, {1, 2})
    assert rep.effective_fiber.rootsys.rank == 0 and rep.is_cr_fibration


def test_psi_not_subset():
    with pytest.raises(PsiNotSubset):
        fiber_over(parse_spec("su(1,3) cross {1}"), {2})


def test_su22_reduction_chain():
    cd = parse_spec("su(2,2) cross {2,3}")
    psi, base, fiber = fundamental_reduction(cd)
    assert psi == frozenset({2}) and analyze(base).cr_dim == 0
    assert fiber.satake.labels == (1, 3)
    assert fiber.satake.arrows == frozenset({(1, 3)}) and fiber.crosses == frozenset({3})
    assert oracle_fundamental(fiber)
    removed, wbase, wfiber = weak_reduction(fiber)
    assert removed == frozenset({3})
    assert is_weakly_nondegenerate(wbase) and analyze(wfiber).cr_codim == 0
    with pytest.raises(NotFundamental):
        weak_reduction(cd)


def test_closure_equals_base_q():
    cd = parse_spec("su(2,2) cross {2,3}")
    psi, base, _ = fundamental_reduction(cd)
    closure = generated_roots(cd)
    assert closure == root_closure(cd.rootsys, closure)
    assert closure == frozenset(
        b for b in cd.rootsys.all_roots if min(b) >= 0 or not any(b[cd.rootsys.graph.index(p)] for p in psi)
    )


def test_compact_su2_weak_reduction():
    cd = parse_spec("compact(A1) cross {1}")
    a = analyze(cd)
    assert a.cr_codim == 0 and not a.ideal_nondeg
    removed, base, fiber = weak_reduction(cd)
    assert removed == frozenset({1}) and not base.crosses


def test_reduction_diagram_corners():
    rep = reduction_diagram(parse_spec("su(2,2) cross {2,3}"))
    assert list(rep.composite) == ["total", "totally_real_base", "fundamental", "weakly_nondegenerate_base"]
    assert rep.fundamental_psi == frozenset({2}) and rep.weak_removed == frozenset({3})


def test_reduction_diagram_on_fundamental_input():
    rep = reduction_diagram(parse_spec("su(1,3) cross {1,2}"))
    assert not rep.fundamental_psi and not rep.weak_removed


def test_fiber_nodes_exceptional():
    cd = parse_spec("ex(EIII) cross {1,2}")
    assert fiber_nodes(cd, {1}) == fiber_over(cd, {1}).Bsecond
