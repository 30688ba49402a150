import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crsatake.rootcore import (
    DynkinGraph,
    MalformedGraph,
    build_root_system,
    longest_involution,
    longest_word,
    reflect,
    root_closure,
    support,
)

# |R+| per simple type, from the standard tables
POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16, "C3": 9, "C4": 16,
    "D4": 12, "D5": 20, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}
TYPES = sorted(POSITIVE_COUNTS)


@pytest.mark.parametrize("t", TYPES)
def test_positive_root_count(t):
    rs = build_root_system(DynkinGraph.from_type(t))
    assert len(rs.positive) == POSITIVE_COUNTS[t]
    assert len(rs.all_roots) == 2 * POSITIVE_COUNTS[t]


@pytest.mark.parametrize("t", TYPES)
def test_longest_element_is_minus_identity_or_diagram_flip(t):
    rs = build_root_system(DynkinGraph.from_type(t))
    W = longest_involution(rs, rs.labels)
    assert np.array_equal(W @ W, np.eye(rs.rank, dtype=W.dtype))
    assert all(rs.apply(W, b) in rs.negative for b in rs.positive)
    assert len(longest_word(rs, rs.labels)) == len(rs.positive)
    minus_id = np.array_equal(W, -np.eye(rs.rank, dtype=W.dtype))
    # w0 = -1 except for A_n (n >= 2), D_odd and E6
    flips = (t[0] == "A" and t != "A1") or (t[0] == "D" and int(t[1:]) % 2) or t == "E6"
    assert minus_id != bool(flips)


def test_highest_root_e8():
    rs = build_root_system(DynkinGraph.from_type("E8"))
    assert rs.highest_root() == (2, 3, 4, 6, 5, 4, 3, 2)


def test_type_string_and_components():
    g = DynkinGraph.from_type("A3+B2")
    assert g.rank == 5 and g.type_string() == "A3+B2"
    assert g.components() == [(1, 2, 3), (4, 5)]
    assert DynkinGraph.from_type("C2").type_string() == "C2"
    assert DynkinGraph.from_type("B", 2).type_string() == "B2"


def test_restrict_keeps_labels():
    g = DynkinGraph.from_type("A4").restrict({1, 2, 4})
    assert g.labels == (1, 2, 4)
    assert g.type_string() == "A2+A1"
    assert not g.is_standard()


@pytest.mark.parametrize("bad", ["A0", "B1", "D3", "E5", "F3", "G3", "Q2"])
def test_invalid_types(bad):
    with pytest.raises(MalformedGraph):
        DynkinGraph.from_type(bad)


def test_non_finite_cartan_rejected():
    with pytest.raises(MalformedGraph):
        DynkinGraph(((2, -2), (-2, 2)), (1, 2))
    with pytest.raises(MalformedGraph):
        DynkinGraph(((2, -1, -1), (-1, 2, -1), (-1, -1, 2)), (1, 2, 3))


def test_root_closure_of_simple_roots_is_positive():
    rs = build_root_system(DynkinGraph.from_type("F4"))
    assert root_closure(rs, rs.simple_roots()) == rs.positive
    assert root_closure(rs, rs.simple_roots() + [tuple(-x for x in rs.highest_root())]) == rs.all_roots


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_reflections_preserve_roots_and_pairing(t, data):
    rs = build_root_system(DynkinGraph.from_type(t))
    beta = data.draw(st.sampled_from(sorted(rs.all_roots)))
    label = data.draw(st.sampled_from(rs.labels))
    img = reflect(rs, beta, label)
    assert img in rs.all_roots
    assert reflect(rs, img, label) == beta
    G = rs.gram()
    b = np.array(beta)
    assert np.isclose(np.array(img) @ G @ np.array(img), b @ G @ b)
    assert support(rs, beta) == support(rs, tuple(-x for x in beta))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_longest_of_subset_is_involution_on_its_roots(t, data):
    rs = build_root_system(DynkinGraph.from_type(t))
    sub = data.draw(st.sets(st.sampled_from(rs.labels)))
    W = longest_involution(rs, sub)
    assert np.array_equal(W @ W, np.eye(rs.rank, dtype=W.dtype))
    inside = rs.roots_in(sub)
    for b in inside:
        img = rs.apply(W, b)
        assert img in inside and (b in rs.positive) != (img in rs.positive)
    for b in rs.positive - inside:
        assert rs.apply(W, b) in rs.positive
