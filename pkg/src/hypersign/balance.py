"""Incidence balance: certified decision plus a five-way cross-check.

An orientation is balanced when the vertices split into two (possibly
empty) parts so that each edge meets one part only through positive
incidences and the other only through negative ones.  Equivalently there
is a +-1 labeling of vertices and edges with label(edge) * label(vertex)
equal to the orientation at every incidence; the decision procedure
propagates such labels in one pass and either returns the bipartition
(with the switching certificate that positivizes everything) or a cycle
whose incidence sign is -1.

equivalence_battery re-derives the same verdict along five independent
routes on oracle-scale instances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .core import OrientedHypergraph, all_positive_variant
from .errors import NotAPartitionError, OracleBudgetExceededError
from .switching import SwitchCertificate, oriented_switch_equivalent
from .walks import (
    EDGE,
    VERTEX,
    Walk,
    connected_components,
    enumerate_cycles,
    fundamental_cycle,
    paths_sign_consistent,
)

__all__ = [
    "Balanced",
    "Unbalanced",
    "incidence_balance",
    "verify_bipartition",
    "OracleLimits",
    "FiveWayReport",
    "equivalence_battery",
]


@dataclass(frozen=True)
class Balanced:
    """Witnessed positive verdict.

    part_positive/part_negative are the two sides, vertex_labels and
    edge_labels the +-1 labeling behind them, and cert the switchings
    that turn the instance into its all-positive variant.  has_empty_part
    marks the degenerate (but legal) one-sided bipartition.
    """

    part_positive: tuple[int, ...]
    part_negative: tuple[int, ...]
    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]
    cert: SwitchCertificate
    has_empty_part: bool = field(default=False)

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Unbalanced:
    """Witnessed negative verdict: a closed walk of incidence sign -1."""

    cycle: Walk

    def __bool__(self) -> bool:
        return False


BalanceVerdict = Balanced | Unbalanced


def incidence_balance(g: OrientedHypergraph) -> BalanceVerdict:
    """Decide balance in time linear in the number of incidences.

    Components are labeled independently, each rooted at its smallest
    node with label +1, which makes certificates deterministic.
    """
    n, m = g.n, g.m
    adj: list[list[int]] = [[] for _ in range(n + m)]
    sign_of: dict[tuple[int, int], int] = {}
    for j, edge in enumerate(g.edges):
        for v, s in edge:
            adj[v - 1].append(n + j)
            adj[n + j].append(v - 1)
            sign_of[(v - 1, n + j)] = s

    def incidence_sign(a: int, b: int) -> int:
        key = (a, b) if a < n else (b, a)
        return sign_of[key]

    label = [0] * (n + m)
    parent: dict[int, int] = {}
    for root in range(n + m):
        if label[root]:
            continue
        label[root] = 1
        parent[root] = root
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                want = label[x] * incidence_sign(x, y)
                if label[y] == 0:
                    label[y] = want
                    parent[y] = x
                    queue.append(y)
                elif label[y] != want:
                    return Unbalanced(cycle=fundamental_cycle(n, parent, x, y))
    part_positive = tuple(v + 1 for v in range(n) if label[v] == 1)
    part_negative = tuple(v + 1 for v in range(n) if label[v] == -1)
    return Balanced(
        part_positive=part_positive,
        part_negative=part_negative,
        vertex_labels=tuple(label[:n]),
        edge_labels=tuple(label[n:]),
        cert=SwitchCertificate(
            vertices=part_negative,
            edges=tuple(j for j in range(m) if label[n + j] == -1),
        ),
        has_empty_part=not part_positive or not part_negative,
    )


def verify_bipartition(
    g: OrientedHypergraph,
    part_positive,
    part_negative,
) -> bool:
    """Check the defining property of a balancing bipartition directly.

    For every edge some polarity p must satisfy: orientation p at every
    member in the first part and -p at every member in the second.
    """
    first = set(part_positive)
    second = set(part_negative)
    everything = set(range(1, g.n + 1))
    if first & second or first | second != everything:
        raise NotAPartitionError(
            "the two parts must be disjoint and cover all vertices"
        )
    for edge in g.edges:
        polarities = {s * (1 if v in first else -1) for v, s in edge}
        if len(polarities) > 1:
            return False
    return True


@dataclass(frozen=True)
class OracleLimits:
    """Budgets for the brute-force routes of equivalence_battery."""

    max_nodes: int = 16
    max_cycles: int = 20_000
    max_paths: int = 20_000


@dataclass(frozen=True)
class FiveWayReport:
    """One boolean per route; they must agree on every instance."""

    balanced_bipartition: bool
    cycles_all_positive: bool
    paths_consistent: bool
    labeling_exists: bool
    switch_equivalent_all_positive: bool
    verdict: BalanceVerdict

    def values(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.balanced_bipartition,
            self.cycles_all_positive,
            self.paths_consistent,
            self.labeling_exists,
            self.switch_equivalent_all_positive,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.values())) == 1


def _labeling_exists(g: OrientedHypergraph, max_nodes: int) -> bool:
    """Exhaustive search for a labeling with label(e)*label(v) = orientation."""
    nodes = g.n + g.m
    if nodes > max_nodes:
        raise OracleBudgetExceededError(f"{nodes} nodes exceed the {max_nodes} cap")
    if nodes == 0:
        return True
    shifts = np.arange(nodes, dtype=np.uint32)
    bits = np.arange(1 << nodes, dtype=np.uint32)
    labels = (1 - 2 * ((bits[:, None] >> shifts) & 1)).astype(np.int8)
    ok = np.ones(len(bits), dtype=bool)
    for j, edge in enumerate(g.edges):
        for v, s in edge:
            ok &= labels[:, v - 1] * labels[:, g.n + j] == s
    return bool(ok.any())


def equivalence_battery(
    g: OrientedHypergraph, limits: OracleLimits = OracleLimits()
) -> FiveWayReport:
    """Evaluate the five equivalent balance statements independently.

    Routes: (1) the certified bipartition re-checked by
    verify_bipartition; (2) every cycle has positive incidence sign;
    (3) all same-component element pairs have sign-consistent paths;
    (4) an exhaustive labeling search; (5) switching equivalence to the
    all-positive variant.  Budget exhaustion raises rather than guessing.
    """
    if g.n + g.m > limits.max_nodes:
        raise OracleBudgetExceededError(
            f"{g.n + g.m} nodes exceed the {limits.max_nodes} cap"
        )
    verdict = incidence_balance(g)
    statement_1 = isinstance(verdict, Balanced) and verify_bipartition(
        g, verdict.part_positive, verdict.part_negative
    )

    enumeration = enumerate_cycles(g, limits.max_cycles)
    if enumeration.truncated:
        raise OracleBudgetExceededError("cycle enumeration truncated")
    statement_2 = all(sign == 1 for _, sign in enumeration.cycles)

    statement_3 = True
    for comp in connected_components(g):
        elements = [
            (VERTEX, u + 1) if u < g.n else (EDGE, u - g.n) for u in comp
        ]
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                report = paths_sign_consistent(
                    g, elements[i], elements[j], limits.max_paths
                )
                if report.truncated:
                    raise OracleBudgetExceededError("path enumeration truncated")
                if not report.consistent:
                    statement_3 = False
                    break
            if not statement_3:
                break
        if not statement_3:
            break

    statement_4 = _labeling_exists(g, limits.max_nodes)
    statement_5 = isinstance(
        oriented_switch_equivalent(g, all_positive_variant(g)), SwitchCertificate
    )
    return FiveWayReport(
        balanced_bipartition=statement_1,
        cycles_all_positive=statement_2,
        paths_consistent=statement_3,
        labeling_exists=statement_4,
        switch_equivalent_all_positive=statement_5,
        verdict=verdict,
    )
