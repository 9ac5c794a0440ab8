"""Incidence, adjacency and Laplacian matrices and spectral balance tests.

The incidence matrix holds the orientation at each (edge, vertex) pair;
the adjacency matrix sums orientation products over shared edges with a
zero diagonal; the Laplacian adds the degrees and equals MᵀM in exact
integers.  For a connected instance, balance is equivalent to each of
three spectral memberships: the largest singular value of the
all-positive incidence matrix appearing among the singular values, and
the spectral radii of the all-positive Laplacian/adjacency appearing
among the eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import OrientedHypergraph, SignedHypergraph, all_positive_variant
from .errors import DisconnectedInputError, NotUniformError
from .linalg import (
    JACOBI_TOL,
    MEMBERSHIP_ABS_TOL,
    MEMBERSHIP_REL_TOL,
    DenseSymMatrix,
    RectMatrix,
    singular_values,
    spectrum_contains,
    sym_eigenvalues,
)
from .walks import is_connected

__all__ = [
    "M_CRITERION",
    "L_CRITERION",
    "A_CRITERION",
    "incidence_matrix",
    "adjacency_matrix",
    "laplacian_matrix",
    "signed_adjacency_matrix",
    "SpectralReport",
    "SpectralTestSuite",
    "spectral_balance_tests",
]

M_CRITERION = "incidence-singular-value"
L_CRITERION = "laplacian-eigenvalue"
A_CRITERION = "adjacency-eigenvalue"


def incidence_matrix(g: OrientedHypergraph) -> RectMatrix:
    """m x n integer matrix of orientations, one row per edge."""
    arr = np.zeros((g.m, g.n), dtype=np.int64)
    for j, edge in enumerate(g.edges):
        for v, s in edge:
            arr[j, v - 1] = s
    return RectMatrix(arr)


def adjacency_matrix(g: OrientedHypergraph) -> DenseSymMatrix:
    """Zero-diagonal symmetric matrix of summed orientation products."""
    arr = np.zeros((g.n, g.n), dtype=np.int64)
    for edge in g.edges:
        for i in range(len(edge)):
            u, su = edge[i]
            for t in range(i + 1, len(edge)):
                v, sv = edge[t]
                arr[u - 1, v - 1] += su * sv
                arr[v - 1, u - 1] += su * sv
    return DenseSymMatrix(arr)


def laplacian_matrix(g: OrientedHypergraph) -> DenseSymMatrix:
    """Degrees on the diagonal plus the adjacency matrix (equals MᵀM)."""
    arr = np.array(adjacency_matrix(g).values)
    for v in range(1, g.n + 1):
        arr[v - 1, v - 1] = g.degree(v)
    return DenseSymMatrix(arr)


def signed_adjacency_matrix(h: SignedHypergraph) -> DenseSymMatrix:
    """Adjacency matrix of a 2-uniform signed hypergraph (entries = signs)."""
    arr = np.zeros((h.n, h.n), dtype=np.int64)
    for j, edge in enumerate(h.edges):
        if len(edge) != 2:
            raise NotUniformError("signed adjacency matrix needs 2-uniform input")
        u, v = edge
        arr[u - 1, v - 1] += h.gamma[j]
        arr[v - 1, u - 1] += h.gamma[j]
    return DenseSymMatrix(arr)


@dataclass(frozen=True)
class SpectralReport:
    """One membership test: is the all-positive benchmark value present?"""

    criterion: str
    target: float
    spectrum: tuple[float, ...]
    decision: bool
    margin: float
    abs_tol: float
    rel_tol: float

    def classify(self, structural_balanced: bool) -> str:
        """agree / indeterminate / contradiction versus the structural verdict.

        The structural verdict is ground truth; a mismatch whose margin
        sits within 10x the effective tolerance is only "indeterminate"
        because membership is a tolerance-based decision.
        """
        if self.decision == structural_balanced:
            return "agree"
        threshold = 10.0 * (self.abs_tol + self.rel_tol * abs(self.target))
        if self.margin < threshold:
            return "indeterminate"
        return "contradiction"


@dataclass(frozen=True)
class SpectralTestSuite:
    incidence_report: SpectralReport
    laplacian_report: SpectralReport
    adjacency_report: SpectralReport

    @property
    def reports(self) -> tuple[SpectralReport, SpectralReport, SpectralReport]:
        return (self.incidence_report, self.laplacian_report, self.adjacency_report)

    @property
    def decisions(self) -> tuple[bool, bool, bool]:
        return tuple(r.decision for r in self.reports)

    @property
    def agree(self) -> bool:
        return len(set(self.decisions)) == 1

    def classify(self, structural_balanced: bool) -> tuple[str, str, str]:
        return tuple(r.classify(structural_balanced) for r in self.reports)


def spectral_balance_tests(
    g: OrientedHypergraph,
    abs_tol: float = MEMBERSHIP_ABS_TOL,
    rel_tol: float = MEMBERSHIP_REL_TOL,
    jacobi_tol: float = JACOBI_TOL,
) -> SpectralTestSuite:
    """Run the three spectral balance criteria on a connected instance.

    Edgeless (hence single-vertex) instances have no singular values to
    test, so the incidence criterion degenerates to a trivially positive
    report with zero margin.
    """
    if not is_connected(g):
        raise DisconnectedInputError(
            "the spectral characterization assumes a connected instance"
        )
    plus = all_positive_variant(g)

    def report(criterion: str, spectrum: list[float], target: float) -> SpectralReport:
        decision, margin = spectrum_contains(spectrum, target, abs_tol, rel_tol)
        return SpectralReport(
            criterion, target, tuple(spectrum), decision, margin, abs_tol, rel_tol
        )

    def trivial(criterion: str) -> SpectralReport:
        return SpectralReport(criterion, 0.0, (), True, 0.0, abs_tol, rel_tol)

    if g.m == 0:
        incidence_report = trivial(M_CRITERION)
    else:
        spectrum = singular_values(incidence_matrix(g), jacobi_tol)
        target = max(singular_values(incidence_matrix(plus), jacobi_tol))
        incidence_report = report(M_CRITERION, spectrum, target)

    if g.n == 0:
        laplacian_report = trivial(L_CRITERION)
        adjacency_report = trivial(A_CRITERION)
    else:
        spectrum = sym_eigenvalues(laplacian_matrix(g), jacobi_tol)
        target = max(sym_eigenvalues(laplacian_matrix(plus), jacobi_tol))
        laplacian_report = report(L_CRITERION, spectrum, target)

        spectrum = sym_eigenvalues(adjacency_matrix(g), jacobi_tol)
        target = max(sym_eigenvalues(adjacency_matrix(plus), jacobi_tol))
        adjacency_report = report(A_CRITERION, spectrum, target)

    return SpectralTestSuite(incidence_report, laplacian_report, adjacency_report)
