import pytest
from hypothesis import given, settings, strategies as st

from crsatake.dsl import parse_spec
from crsatake.parabolic import (
    CrossedDiagram,
    analyze,
    component_diagrams,
    is_effective,
    is_fundamental,
    is_ideal_nondegenerate,
    is_strictly_nondegenerate,
    is_weakly_nondegenerate,
    parabolic_roots,
)
from crsatake.satake import OutOfRange, catalog_forms, catalog_lookup, direct_sum


def test_su13_phi12():
    a = analyze(parse_spec("su(1,3) cross {1,2}"))
    assert (a.cr_dim, a.cr_codim, a.dim_g, a.dim_isotropy) == (2, 3, 15, 8)
    assert all(a.flags()[f] for f in ("effective", "fundamental", "weakly_nondeg", "strictly_nondeg", "ideal_nondeg"))


@pytest.mark.parametrize("p,q", [(1, 2), (1, 3), (2, 2), (2, 3), (1, 5), (3, 3)])
def test_hyperquadric(p, q):
    # closed orbit of SU(p,q) in CP^{p+q-1}: null lines, a real hypersurface
    a = analyze(parse_spec(f"su({p},{q}) cross {{1}}"))
    assert (a.cr_dim, a.cr_codim) == (p + q - 2, 1)
    assert a.strictly_nondeg == (p + q > 2)


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "G2"])
def test_compact_forms_are_complex_flag_manifolds(t):
    d = catalog_lookup("compact", (t,))
    for mask in range(1, 1 << d.rootsys.rank):
        crosses = {d.labels[i] for i in range(d.rootsys.rank) if mask >> i & 1}
        cd = CrossedDiagram(d, crosses)
        a = analyze(cd)
        pd = parabolic_roots(d.rootsys, crosses)
        assert (a.cr_dim, a.cr_codim) == (len(pd.Qn), 0)
        assert a.totally_complex and a.fundamental


@pytest.mark.parametrize("name", ["sl_r(4)", "sp_r(3)", "ex(EI)", "ex(G)"])
def test_split_forms_are_totally_real(name):
    d = parse_spec(name).satake
    for mask in range(1 << d.rootsys.rank):
        cd = CrossedDiagram(d, {d.labels[i] for i in range(d.rootsys.rank) if mask >> i & 1})
        a = analyze(cd)
        assert a.totally_real
        assert a.fundamental == (mask == 0)


def test_effective_fails_on_uncrossed_summand():
    d = direct_sum(catalog_lookup("su", (1, 2)), catalog_lookup("su", (1, 1)))
    assert not is_effective(CrossedDiagram(d, {1}))
    assert is_effective(CrossedDiagram(d, {1, 3}))


def test_out_of_range_cross():
    with pytest.raises(OutOfRange):
        parse_spec("su(1,3) cross {4}")


def test_bitmask_and_with_crosses():
    cd = parse_spec("su(2,3) cross {1,4}")
    assert cd.bitmask() == 0b1001
    assert cd.with_crosses({2}).crosses == frozenset({2})


def test_component_diagrams_split_crosses():
    d = direct_sum(catalog_lookup("su", (1, 2)), catalog_lookup("compact", ("A1",)))
    parts = component_diagrams(CrossedDiagram(d, {2, 3}))
    assert [sorted(p.crosses) for p in parts] == [[2], [3]]


def test_sweep_rank2_is_clean(sweep2):
    assert sweep2.instances_checked == 92 and not sweep2.mismatches


INSTANCES = [(d, m) for d in catalog_forms(4) for m in range(1 << d.rootsys.rank)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(INSTANCES))
def test_flag_relations(inst):
    d, mask = inst
    cd = CrossedDiagram(d, {d.labels[i] for i in range(d.rootsys.rank) if mask >> i & 1})
    a = analyze(cd)
    assert a.fundamental == is_fundamental(cd)
    assert a.strictly_nondeg == is_strictly_nondegenerate(cd)
    if is_strictly_nondegenerate(cd):
        assert is_weakly_nondegenerate(cd)
    if is_weakly_nondegenerate(cd):
        assert is_ideal_nondegenerate(cd)
    if not cd.crosses:
        assert (a.cr_dim, a.cr_codim) == (0, 0)
    assert a.dim_g == d.rootsys.rank + len(d.rootsys.all_roots)
