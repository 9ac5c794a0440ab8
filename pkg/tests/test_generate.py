import random

import pytest

import hypersign as hs
from hypersign.errors import InfeasibleParametersError


def test_generate_is_deterministic():
    a = hs.generate(6, 4, size_range=(2, 3), p_neg=0.5, connected=True, seed=12)
    b = hs.generate(6, 4, size_range=(2, 3), p_neg=0.5, connected=True, seed=12)
    assert a == b
    c = hs.generate(6, 4, size_range=(2, 3), p_neg=0.5, connected=True, seed=13)
    assert a != c


def test_generate_respects_bounds():
    g = hs.generate(7, 5, size_range=(2, 4), p_neg=0.3, seed=3)
    assert g.n == 7 and g.m == 5
    for j in range(g.m):
        assert 2 <= len(g.members(j)) <= 4
        for v in g.members(j):
            assert 1 <= v <= 7


def test_generate_uniform_k():
    g = hs.generate(6, 4, k=3, seed=9)
    assert hs.uniform_edge_size(g) == 3


def test_generate_sign_probability_extremes():
    allpos = hs.generate(6, 4, k=2, p_neg=0.0, seed=1)
    assert all(s == 1 for e in allpos.edges for _, s in e)
    allneg = hs.generate(6, 4, k=2, p_neg=1.0, seed=1)
    assert all(s == -1 for e in allneg.edges for _, s in e)


def test_generate_connected_flag():
    for seed in range(10):
        g = hs.generate(8, 5, size_range=(2, 4), connected=True, seed=seed)
        assert hs.is_connected(g)


def test_generate_rejects_bad_parameters():
    with pytest.raises(InfeasibleParametersError):
        hs.generate(-1, 2, k=2)
    with pytest.raises(InfeasibleParametersError):
        hs.generate(4, 2)  # neither k nor size_range
    with pytest.raises(InfeasibleParametersError):
        hs.generate(4, 2, k=2, size_range=(2, 3))  # both
    with pytest.raises(InfeasibleParametersError):
        hs.generate(4, 2, k=5)
    with pytest.raises(InfeasibleParametersError):
        hs.generate(4, 2, size_range=(3, 2))
    with pytest.raises(InfeasibleParametersError):
        hs.generate(4, 2, k=2, p_neg=1.5)
    with pytest.raises(InfeasibleParametersError):
        hs.generate(9, 2, k=3, connected=True)  # cannot cover 9 vertices
    with pytest.raises(InfeasibleParametersError):
        hs.generate(2, 0, k=2, connected=True)  # no edges, two components


def test_generate_edgeless():
    g = hs.generate(3, 0, size_range=(2, 2), seed=0)
    assert g.m == 0 and g.n == 3


def test_random_connected_stays_in_bounds():
    rng = random.Random(77)
    for _ in range(30):
        g = hs.random_connected(rng, n_max=8, m_max=6, size_min=2, size_max=4)
        assert 1 <= g.n <= 8
        assert 1 <= g.m <= 6
        assert all(2 <= len(g.members(j)) <= 4 for j in range(g.m))
        assert hs.is_connected(g)


def test_random_connected_uniform_stays_in_bounds():
    rng = random.Random(78)
    for k in (2, 3, 4):
        for _ in range(15):
            g = hs.random_connected_uniform(rng, k, n_max=8, m_max=6)
            assert hs.uniform_edge_size(g) == k
            assert hs.is_connected(g)
            assert g.n <= 8 and g.m <= 6
