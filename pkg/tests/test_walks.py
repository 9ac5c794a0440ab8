import pytest

import hypersign as hs
from hypersign.errors import DisconnectedPairError, InvalidWalkError
from hypersign.walks import EDGE, VERTEX, Walk, edge_node, vertex_node


def test_walk_validation():
    w = Walk(((VERTEX, 1), (EDGE, 0), (VERTEX, 2)))
    assert w.length == 2
    assert not w.is_closed
    with pytest.raises(InvalidWalkError):
        Walk(())
    with pytest.raises(InvalidWalkError):
        Walk(((VERTEX, 1), (VERTEX, 2)))
    with pytest.raises(InvalidWalkError):
        Walk((("x", 1),))


def test_walk_incidences_and_signs(e1):
    w = Walk((vertex_node(1), edge_node(0), vertex_node(2)))
    assert hs.walk_incidences(w, e1) == [(0, 1, 1), (0, 2, -1)]
    assert hs.incidence_sign_of(w, e1) == -1
    # t = 2, so the adjacency variant flips the sign once
    assert hs.adjacency_sign_of(w, e1) == 1
    bogus = Walk((vertex_node(1), edge_node(0), vertex_node(1)))
    assert hs.incidence_sign_of(bogus, e1) == 1  # repeated incidence, fine for walks


def test_walk_rejects_nonincident_steps(e1):
    w = Walk((vertex_node(2), edge_node(0), vertex_node(1), edge_node(3)))
    with pytest.raises(InvalidWalkError):
        hs.walk_incidences(w, e1)


def test_canonical_cycle_rotation_invariance(triangle):
    a = Walk(
        (
            vertex_node(1),
            edge_node(0),
            vertex_node(2),
            edge_node(2),
            vertex_node(3),
            edge_node(1),
            vertex_node(1),
        )
    )
    b = Walk(
        (
            vertex_node(3),
            edge_node(1),
            vertex_node(1),
            edge_node(0),
            vertex_node(2),
            edge_node(2),
            vertex_node(3),
        )
    )
    ca, cb = hs.canonical_cycle(a), hs.canonical_cycle(b)
    assert ca == cb
    assert hs.incidence_sign_of(ca, triangle) == hs.incidence_sign_of(a, triangle)
    with pytest.raises(InvalidWalkError):
        hs.canonical_cycle(Walk((vertex_node(1), edge_node(0), vertex_node(2))))


def test_connected_components(e1):
    assert hs.is_connected(e1)
    two_parts = hs.build(4, [[(1, 1), (2, 1)], [(3, 1), (4, -1)]])
    comps = hs.connected_components(two_parts)
    assert len(comps) == 2
    assert not hs.is_connected(two_parts)
    # isolated vertex disconnects
    iso = hs.build(3, [[(1, 1), (2, 1)]])
    assert not hs.is_connected(iso)
    # empty and single-vertex structures count as connected
    assert hs.is_connected(hs.build(0, []))
    assert hs.is_connected(hs.build(1, []))


def test_enumerate_cycles_triangle(triangle):
    enum = hs.enumerate_cycles(triangle)
    assert not enum.truncated
    assert len(enum.cycles) == 1
    walk, sign = enum.cycles[0]
    assert walk.is_closed
    assert walk.length == 6
    assert sign == -1
    assert sign == hs.incidence_sign_of(walk, triangle)


def test_enumerate_cycles_counts():
    # a single edge has no cycles; a doubled edge has exactly one
    assert len(hs.enumerate_cycles(hs.build(2, [[(1, 1), (2, 1)]])).cycles) == 0
    doubled = hs.build(2, [[(1, 1), (2, 1)], [(1, 1), (2, -1)]])
    enum = hs.enumerate_cycles(doubled)
    assert len(enum.cycles) == 1
    assert enum.cycles[0][1] == -1
    # truncation flag trips when the budget is tiny
    ex_like = hs.build(3, [[(1, 1), (2, 1), (3, 1)], [(1, 1), (2, 1), (3, 1)]])
    full = hs.enumerate_cycles(ex_like)
    assert len(full.cycles) > 1
    cut = hs.enumerate_cycles(ex_like, max_count=1)
    assert cut.truncated
    assert len(cut.cycles) == 1


def test_cycles_within_one_edge_do_not_exist():
    g = hs.build(4, [[(1, 1), (2, -1), (3, 1), (4, 1)]])
    assert len(hs.enumerate_cycles(g).cycles) == 0


def test_paths_sign_consistent(e1, triangle):
    ok = hs.paths_sign_consistent(e1, vertex_node(1), vertex_node(2))
    assert ok.consistent and ok.paths_seen == 1
    bad = hs.paths_sign_consistent(triangle, vertex_node(1), vertex_node(2))
    assert not bad.consistent
    same = hs.paths_sign_consistent(e1, vertex_node(1), vertex_node(1))
    assert same.consistent
    # vertex-to-edge pairs work too
    mixed = hs.paths_sign_consistent(e1, vertex_node(1), edge_node(0))
    assert mixed.consistent


def test_paths_disconnected_pair():
    g = hs.build(4, [[(1, 1), (2, 1)], [(3, 1), (4, 1)]])
    with pytest.raises(DisconnectedPairError):
        hs.paths_sign_consistent(g, vertex_node(1), vertex_node(3))


def test_paths_balanced_instance_consistent_everywhere(ex):
    # switch EX to an all-positive orientation; every pair is then consistent
    plus = hs.all_positive_variant(ex)
    elements = [vertex_node(v) for v in range(1, 7)] + [edge_node(j) for j in range(3)]
    for i, a in enumerate(elements):
        for b in elements[i + 1 :]:
            assert hs.paths_sign_consistent(plus, a, b).consistent
