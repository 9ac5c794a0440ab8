"""Self-contained numerical kernels.

Dense symmetric eigenvalues via cyclic Jacobi rotations, singular values
through the smaller Gram matrix, bitset Gaussian elimination over GF(2)
with infeasibility witnesses, and tolerance-based spectrum membership.
Matrices at this scale are desk-sized (tens of rows), so the quadratic
sweep is comfortably fast and accurate to ~tol * ||A||_F.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySpectrumError, NoConvergenceError

__all__ = [
    "JACOBI_TOL",
    "JACOBI_SWEEP_BUDGET",
    "MEMBERSHIP_ABS_TOL",
    "MEMBERSHIP_REL_TOL",
    "DenseSymMatrix",
    "RectMatrix",
    "sym_eigenvalues",
    "singular_values",
    "GF2System",
    "GF2Solution",
    "GF2Infeasible",
    "gf2_solve",
    "spectrum_contains",
]

JACOBI_TOL = 1e-12
JACOBI_SWEEP_BUDGET = 100
MEMBERSHIP_ABS_TOL = 1e-7
MEMBERSHIP_REL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class DenseSymMatrix:
    """Immutable dense matrix with exact (bitwise) symmetry."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("expected a square 2-d array")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix must be exactly symmetric")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def order(self) -> int:
        return self.values.shape[0]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DenseSymMatrix":
        return cls(np.array(rows))


@dataclass(frozen=True, eq=False)
class RectMatrix:
    """Immutable dense rectangular matrix."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "RectMatrix":
        return cls(np.array(rows))


def _as_sym_array(a) -> np.ndarray:
    if isinstance(a, DenseSymMatrix):
        return np.array(a.values, dtype=np.float64)
    arr = np.array(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or not np.array_equal(arr, arr.T):
        raise ValueError("expected an exactly symmetric square matrix")
    return arr


def _off_diagonal_mass(mat: np.ndarray) -> float:
    # Sum the off-diagonal squares directly: subtracting the diagonal mass
    # from the total cancels catastrophically and floors near sqrt(eps)*fro.
    stripped = mat.copy()
    np.fill_diagonal(stripped, 0.0)
    return math.sqrt(float((stripped * stripped).sum()))


def sym_eigenvalues(
    a: DenseSymMatrix | np.ndarray,
    tol: float = JACOBI_TOL,
    sweep_budget: int = JACOBI_SWEEP_BUDGET,
) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending.

    Cyclic Jacobi: sweep the upper triangle, rotating away each pivot,
    until the off-diagonal Frobenius mass drops below tol * ||A||_F.
    Pivots already below tol * ||A||_F / (n^2 + 1) are skipped — if every
    pivot is that small the convergence test already holds.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    mat = _as_sym_array(a)
    n = mat.shape[0]
    if n == 0:
        return []
    fro = math.sqrt(float((mat * mat).sum()))
    if fro == 0.0:
        return [0.0] * n
    skip_below = tol * fro / (n * n + 1)
    for _ in range(sweep_budget):
        if _off_diagonal_mass(mat) <= tol * fro:
            return sorted(float(x) for x in np.diagonal(mat))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = mat[p, q]
                if abs(apq) <= skip_below:
                    continue
                app = mat[p, p]
                aqq = mat[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = mat[:, p].copy()
                colq = mat[:, q].copy()
                newp = c * colp - s * colq
                newq = s * colp + c * colq
                mat[:, p] = newp
                mat[p, :] = newp
                mat[:, q] = newq
                mat[q, :] = newq
                mat[p, p] = app - t * apq
                mat[q, q] = aqq + t * apq
                mat[p, q] = 0.0
                mat[q, p] = 0.0
    off = _off_diagonal_mass(mat)
    if off <= tol * fro:
        return sorted(float(x) for x in np.diagonal(mat))
    raise NoConvergenceError(
        f"Jacobi sweep budget of {sweep_budget} exhausted "
        f"(off-diagonal mass {off:.3e})"
    )


def singular_values(
    m: RectMatrix | np.ndarray,
    tol: float = JACOBI_TOL,
) -> list[float]:
    """min(rows, cols) singular values, ascending.

    Square roots of the Gram-matrix eigenvalues (the smaller of M Mᵀ and
    Mᵀ M); tiny negative eigenvalues from roundoff clip to zero.
    """
    arr = m.values if isinstance(m, RectMatrix) else np.asarray(m)
    arr = np.array(arr, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = arr.shape
    if min(rows, cols) == 0:
        return []
    gram = arr @ arr.T if rows <= cols else arr.T @ arr
    eigs = sym_eigenvalues(gram, tol)
    return sorted(math.sqrt(max(0.0, x)) for x in eigs)


# ---------------------------------------------------------------------------
# GF(2) linear systems as bit masks (bit j-1 <-> variable j).


@dataclass(frozen=True)
class GF2System:
    nvars: int
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.nvars < 0:
            raise ValueError("nvars must be nonnegative")
        limit = 1 << self.nvars
        for i, (mask, rhs) in enumerate(self.rows):
            if not 0 <= mask < limit:
                raise ValueError(f"row {i}: mask wider than {self.nvars} variables")
            if rhs not in (0, 1):
                raise ValueError(f"row {i}: right-hand side must be 0 or 1")

    @classmethod
    def from_sets(
        cls, nvars: int, equations: Iterable[tuple[Iterable[int], int]]
    ) -> "GF2System":
        """Each equation is (variable ids summing on the left, rhs bit)."""
        rows = []
        for variables, rhs in equations:
            mask = 0
            for var in variables:
                if not 1 <= var <= nvars:
                    raise ValueError(f"variable {var} outside 1..{nvars}")
                mask |= 1 << (var - 1)
            rows.append((mask, rhs))
        return cls(nvars, tuple(rows))

    def evaluate(self, assignment: Sequence[int]) -> list[int]:
        """Left-hand parity of every row under the 0/1 assignment."""
        vec = 0
        for j, bit in enumerate(assignment):
            if bit:
                vec |= 1 << j
        return [(mask & vec).bit_count() & 1 for mask, _ in self.rows]


@dataclass(frozen=True)
class GF2Solution:
    nvars: int
    assignment: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, bit in enumerate(self.assignment) if bit)


@dataclass(frozen=True)
class GF2Infeasible:
    witness_rows: tuple[int, ...]


def gf2_solve(system: GF2System) -> GF2Solution | GF2Infeasible:
    """Gaussian elimination over GF(2) with row-combination tracking.

    Feasible systems get the canonical solution whose free variables are
    all zero (so a single equation x1+x2+x3+x4 = 1 yields x = 1000...).
    Infeasible systems get the original rows whose XOR has empty
    left-hand side but right-hand side 1.
    """
    basis: dict[int, tuple[int, int, int]] = {}
    for idx, (mask, rhs) in enumerate(system.rows):
        m, r, combo = mask, rhs, 1 << idx
        while m:
            pivot = (m & -m).bit_length() - 1
            entry = basis.get(pivot)
            if entry is None:
                break
            m ^= entry[0]
            r ^= entry[1]
            combo ^= entry[2]
        if m:
            basis[(m & -m).bit_length() - 1] = (m, r, combo)
        elif r:
            witness = tuple(i for i in range(idx + 1) if (combo >> i) & 1)
            return GF2Infeasible(witness)
    assignment = [0] * system.nvars
    for pivot in sorted(basis, reverse=True):
        m, r, _ = basis[pivot]
        val = r
        rest = m & ~((1 << (pivot + 1)) - 1)
        while rest:
            bit = (rest & -rest).bit_length() - 1
            val ^= assignment[bit]
            rest &= rest - 1
        assignment[pivot] = val
    return GF2Solution(system.nvars, tuple(assignment))


def spectrum_contains(
    spectrum: Sequence[float],
    target: float,
    abs_tol: float = MEMBERSHIP_ABS_TOL,
    rel_tol: float = MEMBERSHIP_REL_TOL,
) -> tuple[bool, float]:
    """(membership, margin): nearest spectrum point within the tolerances.

    The absolute and relative tolerances combine additively, so a value
    quoted to exactly abs_tol decimal digits still passes after the
    decimal-to-binary round trip.
    """
    if abs_tol <= 0 or rel_tol <= 0:
        raise ValueError("tolerances must be positive")
    values = [float(x) for x in spectrum]
    if not values:
        raise EmptySpectrumError("membership test against an empty spectrum")
    margin = min(abs(x - target) for x in values)
    return margin <= abs_tol + rel_tol * abs(target), margin
