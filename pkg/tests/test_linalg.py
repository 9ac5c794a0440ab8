import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersign.errors import EmptySpectrumError
from hypersign.linalg import (
    DenseSymMatrix,
    GF2Infeasible,
    GF2Solution,
    GF2System,
    RectMatrix,
    gf2_solve,
    singular_values,
    spectrum_contains,
    sym_eigenvalues,
)

# ---------------------------------------------------------------------------
# Matrix wrappers.


def test_dense_sym_requires_exact_symmetry():
    with pytest.raises(ValueError):
        DenseSymMatrix.from_rows([[0, 1], [1.0000001, 0]])
    with pytest.raises(ValueError):
        DenseSymMatrix.from_rows([[0, 1, 2], [1, 0, 3]])
    m = DenseSymMatrix.from_rows([[2, 1], [1, 2]])
    assert m.order == 2
    with pytest.raises(ValueError):
        m.values[0, 0] = 9  # write-protected


def test_rect_matrix_shape():
    r = RectMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert (r.rows, r.cols) == (2, 3)
    with pytest.raises(ValueError):
        RectMatrix(np.zeros(3))


# ---------------------------------------------------------------------------
# Eigenvalues / singular values.


def test_eigenvalues_hand_examples():
    assert sym_eigenvalues(DenseSymMatrix.from_rows([[0, -1], [-1, 0]])) == pytest.approx(
        [-1, 1], abs=1e-12
    )
    assert sym_eigenvalues(DenseSymMatrix.from_rows([[1, -1], [-1, 1]])) == pytest.approx(
        [0, 2], abs=1e-12
    )
    assert sym_eigenvalues(np.diag([3.0, -5.0, 3.0])) == [-5.0, 3.0, 3.0]
    assert sym_eigenvalues(np.zeros((2, 2))) == [0.0, 0.0]
    assert sym_eigenvalues(np.zeros((0, 0))) == []


@st.composite
def symmetric_int_matrices(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    entries = draw(
        st.lists(
            st.integers(min_value=-9, max_value=9),
            min_size=n * (n + 1) // 2,
            max_size=n * (n + 1) // 2,
        )
    )
    a = np.zeros((n, n))
    it = iter(entries)
    for i in range(n):
        for j in range(i, n):
            a[i, j] = a[j, i] = next(it)
    return a


@settings(max_examples=150, deadline=None)
@given(symmetric_int_matrices())
def test_eigenvalues_match_reference(a):
    ours = sym_eigenvalues(a)
    ref = np.linalg.eigvalsh(a)
    fro = max(1.0, math.sqrt((a * a).sum()))
    assert max(abs(x - y) for x, y in zip(ours, ref)) <= 1e-10 * fro


@settings(max_examples=100, deadline=None)
@given(symmetric_int_matrices())
def test_eigenvalue_invariants(a):
    ev = sym_eigenvalues(a)
    fro2 = float((a * a).sum())
    assert abs(sum(ev) - np.trace(a)) <= 1e-9 * max(1.0, math.sqrt(fro2))
    assert abs(sum(x * x for x in ev) - fro2) <= 1e-8 * max(1.0, fro2)


def test_singular_values_gram_route():
    m = RectMatrix.from_rows([[1, -1]])
    assert singular_values(m) == pytest.approx([math.sqrt(2)], abs=1e-12)
    wide = RectMatrix.from_rows([[1, 0, 2], [0, 1, -2]])
    tall = RectMatrix.from_rows([[1, 0], [0, 1], [2, -2]])
    assert singular_values(wide) == pytest.approx(singular_values(tall), abs=1e-9)
    ref = np.linalg.svd(np.array(wide.values, dtype=float), compute_uv=False)
    assert singular_values(wide) == pytest.approx(sorted(ref), abs=1e-9)


def test_singular_values_empty():
    assert singular_values(RectMatrix(np.zeros((0, 4)))) == []


# ---------------------------------------------------------------------------
# Spectrum membership.


def test_spectrum_contains_boundary():
    member, margin = spectrum_contains([1.9999999], 2.0, abs_tol=1e-7, rel_tol=1e-9)
    assert member
    assert margin == pytest.approx(1e-7, rel=1e-6)


def test_spectrum_contains_basic():
    assert spectrum_contains([0.0, 2.0], 2.0)[0]
    member, margin = spectrum_contains([0.0, 2.0], 1.0)
    assert not member
    assert margin == 1.0
    with pytest.raises(EmptySpectrumError):
        spectrum_contains([], 1.0)
    with pytest.raises(ValueError):
        spectrum_contains([1.0], 1.0, abs_tol=0.0)


# ---------------------------------------------------------------------------
# GF(2) systems.


def test_gf2_single_row_canonical_solution():
    res = gf2_solve(GF2System.from_sets(4, [((1, 2, 3, 4), 1)]))
    assert isinstance(res, GF2Solution)
    assert res.assignment == (1, 0, 0, 0)
    assert res.support == (1,)


def test_gf2_infeasible_witness():
    sys_ = GF2System.from_sets(
        6,
        [((1, 2, 3, 4), 1), ((1, 2, 5, 6), 1), ((3, 4, 5, 6), 1)],
    )
    res = gf2_solve(sys_)
    assert isinstance(res, GF2Infeasible)
    assert res.witness_rows == (0, 1, 2)
    mask = rhs = 0
    for r in res.witness_rows:
        mask ^= sys_.rows[r][0]
        rhs ^= sys_.rows[r][1]
    assert (mask, rhs) == (0, 1)


def test_gf2_trivial_and_empty_systems():
    res = gf2_solve(GF2System(3, ()))
    assert res.assignment == (0, 0, 0)
    res = gf2_solve(GF2System(0, ()))
    assert res.assignment == ()
    res = gf2_solve(GF2System.from_sets(2, [((), 1)]))
    assert isinstance(res, GF2Infeasible)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_gf2_random_systems_reverify(data):
    nvars = data.draw(st.integers(min_value=1, max_value=10))
    nrows = data.draw(st.integers(min_value=0, max_value=12))
    rows = tuple(
        (
            data.draw(st.integers(min_value=0, max_value=2**nvars - 1)),
            data.draw(st.integers(min_value=0, max_value=1)),
        )
        for _ in range(nrows)
    )
    sys_ = GF2System(nvars, rows)
    res = gf2_solve(sys_)
    if isinstance(res, GF2Solution):
        assert sys_.evaluate(res.assignment) == [rhs for _, rhs in rows]
    else:
        mask = rhs = 0
        for r in res.witness_rows:
            mask ^= rows[r][0]
            rhs ^= rows[r][1]
        assert (mask, rhs) == (0, 1)
