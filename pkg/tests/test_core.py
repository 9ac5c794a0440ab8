import pytest

import hypersign as hs
from hypersign.errors import (
    DuplicateVertexInEdgeError,
    EmptyEdgeError,
    NotAdjacentError,
    UnknownEdgeError,
    UnknownVertexError,
    VertexOutOfRangeError,
)


def test_build_basic(e1):
    assert e1.n == 2
    assert e1.m == 1
    assert e1.members(0) == (1, 2)
    assert e1.orientation(0, 1) == 1
    assert e1.orientation(0, 2) == -1
    assert e1.incidence_count == 2


def test_build_rejects_empty_edge():
    with pytest.raises(EmptyEdgeError):
        hs.build(3, [[]])


def test_build_rejects_duplicate_vertex():
    with pytest.raises(DuplicateVertexInEdgeError):
        hs.build(3, [[(1, 1), (1, -1)]])


def test_build_rejects_out_of_range_vertex():
    with pytest.raises(VertexOutOfRangeError):
        hs.build(2, [[(1, 1), (3, 1)]])
    with pytest.raises(VertexOutOfRangeError):
        hs.build(2, [[(0, 1)]])


def test_build_rejects_bad_sign():
    with pytest.raises(ValueError):
        hs.build(2, [[(1, 2)]])


def test_unit_edges_are_legal():
    g = hs.build(1, [[(1, -1)]])
    assert g.members(0) == (1,)
    assert hs.edge_sign(g, 0) == -1  # (-1)^0 * (-1)


def test_lookup_errors(e1):
    with pytest.raises(UnknownEdgeError):
        e1.members(1)
    with pytest.raises(NotAdjacentError):
        e1.orientation(0, 5)
    with pytest.raises(UnknownVertexError):
        e1.edges_of(7)


def test_degree_counts_incidences(ex):
    assert [ex.degree(v) for v in range(1, 7)] == [2, 2, 2, 2, 2, 2]
    g = hs.build(3, [[(1, 1), (2, 1)], [(1, -1), (3, 1)], [(1, 1), (2, -1), (3, 1)]])
    assert g.degree(1) == 3
    assert g.degree(2) == 2


def test_edges_of(ex):
    assert ex.edges_of(1) == (0, 1)
    assert ex.edges_of(3) == (0, 2)


def test_edge_sign_parity_rule(e1, ex):
    # (-1)^(|e|-1) times the product of the orientations
    assert hs.edge_sign(e1, 0) == (-1) ** 1 * (1 * -1)
    for j in range(ex.m):
        assert hs.edge_sign(ex, j) == 1


def test_adjacency_sign(e1):
    assert hs.adjacency_sign(e1, 1, 2, 0) == 1  # -(+1)(-1)
    with pytest.raises(NotAdjacentError):
        hs.adjacency_sign(e1, 1, 1, 0)


def test_induced_signed(ex):
    s = hs.induced_signed(ex)
    assert isinstance(s, hs.SignedHypergraph)
    assert s.gamma == (1, 1, 1)
    assert s.edges == tuple(ex.members(j) for j in range(ex.m))


def test_all_positive_variant(ex):
    plus = hs.all_positive_variant(ex)
    assert hs.structures_match(ex, plus)
    for j in range(plus.m):
        for v in plus.members(j):
            assert plus.orientation(j, v) == 1
    # and the induced sign of a 4-edge with all-positive orientations is -1
    assert hs.induced_signed(plus).gamma == (-1, -1, -1)


def test_structures_match(e1):
    same_sets = hs.build(2, [[(1, -1), (2, 1)]])
    assert hs.structures_match(e1, same_sets)
    other = hs.build(2, [[(1, 1)]])
    assert not hs.structures_match(e1, other)
    assert not hs.structures_match(e1, hs.build(3, [[(1, 1), (2, -1)]]))


def test_uniform_edge_size(e1, ex):
    assert hs.uniform_edge_size(e1) == 2
    assert hs.uniform_edge_size(ex) == 4
    mixed = hs.build(3, [[(1, 1), (2, 1)], [(1, 1), (2, 1), (3, 1)]])
    assert hs.uniform_edge_size(mixed) is None
    assert hs.uniform_edge_size(hs.build(2, [])) is None


def test_with_orientations(e1):
    flipped = e1.with_orientations((((1, 1), (2, 1)),))
    assert flipped.orientation(0, 2) == 1
    assert flipped.orientation(0, 1) == 1
    assert e1.orientation(0, 2) == -1  # original untouched


def test_signed_constructor_validation():
    with pytest.raises(ValueError):
        hs.SignedHypergraph(2, ((1, 2),), (0,))
    with pytest.raises(ValueError):
        hs.SignedHypergraph(2, ((1, 2),), (1, 1))
    s = hs.build_signed(2, [(1, 2)], [-1])
    assert s.sign(0) == -1
    assert s.degree(1) == 1


def test_names_round_trip():
    g = hs.build(2, [[(1, 1), (2, 1)]], names=("left",))
    assert g.names == ("left",)
    with pytest.raises(ValueError):
        hs.build(2, [[(1, 1)]], names=("a", "b"))
