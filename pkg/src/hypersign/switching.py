"""Switching operations and constructive switching-equivalence tests.

A vertex switching negates every orientation at that vertex; an edge
switching negates every orientation inside that edge.  Two orientations
of the same structure are switching equivalent exactly when some
edge-signature and vertex-signature pair conjugates one incidence
pattern into the other; the test below finds such signatures by label
propagation, or exhibits a cycle on which they cannot exist.

For signed hypergraphs only vertex switchings act (an edge sign flips
when the switched set meets the edge an odd number of times), so
equivalence reduces to a GF(2) linear system over the vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import OrientedHypergraph, SignedHypergraph, structures_match
from .errors import StructureMismatchError
from .linalg import GF2Infeasible, GF2System, gf2_solve
from .walks import Walk, fundamental_cycle

__all__ = [
    "SwitchCertificate",
    "SignedSwitchCertificate",
    "NotEquivalent",
    "vertex_switch",
    "edge_switch",
    "apply_switches",
    "signed_vertex_switch",
    "apply_signed_switches",
    "oriented_switch_equivalent",
    "signed_switch_equivalent",
]


@dataclass(frozen=True)
class SwitchCertificate:
    """Vertex set and edge set whose switchings map source to target."""

    vertices: tuple[int, ...] = ()
    edges: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges))))


@dataclass(frozen=True)
class SignedSwitchCertificate:
    """Vertex set whose switchings map one edge-sign map to another."""

    vertices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))


@dataclass(frozen=True)
class NotEquivalent:
    """Obstruction: a conflicting cycle (oriented case) or an odd-sum
    subset of edge equations (signed case)."""

    cycle: Walk | None = None
    witness_edges: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return False


def vertex_switch(g: OrientedHypergraph, v: int) -> OrientedHypergraph:
    """Negate the orientation of every incidence at vertex v."""
    g.check_vertex(v)
    return g.with_orientations(
        tuple(
            tuple((u, -s if u == v else s) for u, s in edge)
            for edge in g.edges
        )
    )


def edge_switch(g: OrientedHypergraph, e: int) -> OrientedHypergraph:
    """Negate the orientation of every incidence of edge e."""
    g.check_edge(e)
    return g.with_orientations(
        tuple(
            tuple((u, -s) for u, s in edge) if j == e else edge
            for j, edge in enumerate(g.edges)
        )
    )


def apply_switches(g: OrientedHypergraph, cert: SwitchCertificate) -> OrientedHypergraph:
    """All switchings of the certificate at once (they commute)."""
    for v in cert.vertices:
        g.check_vertex(v)
    for e in cert.edges:
        g.check_edge(e)
    flip_v = set(cert.vertices)
    flip_e = set(cert.edges)
    new_edges = []
    for j, edge in enumerate(g.edges):
        edge_factor = -1 if j in flip_e else 1
        new_edges.append(
            tuple(
                (u, s * edge_factor * (-1 if u in flip_v else 1))
                for u, s in edge
            )
        )
    return g.with_orientations(tuple(new_edges))


def signed_vertex_switch(h: SignedHypergraph, v: int) -> SignedHypergraph:
    """Negate the sign of every edge containing vertex v."""
    h.check_vertex(v)
    return h.with_gamma(
        tuple(
            -s if v in h.edges[j] else s
            for j, s in enumerate(h.gamma)
        )
    )


def apply_signed_switches(
    h: SignedHypergraph, cert: SignedSwitchCertificate
) -> SignedHypergraph:
    """Negate each edge sign once per switched vertex it contains."""
    for v in cert.vertices:
        h.check_vertex(v)
    switched = set(cert.vertices)
    return h.with_gamma(
        tuple(
            s * (-1 if len(switched.intersection(h.edges[j])) % 2 else 1)
            for j, s in enumerate(h.gamma)
        )
    )


def oriented_switch_equivalent(
    source: OrientedHypergraph, target: OrientedHypergraph
) -> SwitchCertificate | NotEquivalent:
    """Certificate turning source into target, or a conflicting cycle.

    Labels every vertex and edge of the shared structure by breadth-first
    propagation of the per-incidence discrepancy source*target, each
    component rooted at its smallest element with label +1.  The
    resulting certificate is involutive: it also maps target to source.
    """
    if not structures_match(source, target):
        raise StructureMismatchError(
            "switching equivalence needs identical underlying structures"
        )
    n, m = source.n, source.m
    diff: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(n + m)]
    for j in range(m):
        for v in source.members(j):
            diff[(j, v)] = source.orientation(j, v) * target.orientation(j, v)
            adj[v - 1].append(n + j)
            adj[n + j].append(v - 1)

    def incidence_diff(a: int, b: int) -> int:
        e, v = (a - n, b + 1) if a >= n else (b - n, a + 1)
        return diff[(e, v)]

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
                want = label[x] * incidence_diff(x, y)
                if label[y] == 0:
                    label[y] = want
                    parent[y] = x
                    queue.append(y)
                elif label[y] != want:
                    return NotEquivalent(cycle=fundamental_cycle(n, parent, x, y))
    return SwitchCertificate(
        vertices=tuple(v + 1 for v in range(n) if label[v] == -1),
        edges=tuple(j for j in range(m) if label[n + j] == -1),
    )


def signed_switch_equivalent(
    first: SignedHypergraph, second: SignedHypergraph
) -> SignedSwitchCertificate | NotEquivalent:
    """Vertex switchings mapping first's signs to second's, if any.

    One parity equation per edge: the switched vertices inside the edge
    must sum to 1 mod 2 exactly when the two signs disagree.  On
    infeasibility the returned edges' equations XOR to 0 = 1.
    """
    if not structures_match(first, second):
        raise StructureMismatchError(
            "switching equivalence needs identical underlying structures"
        )
    system = GF2System.from_sets(
        first.n,
        (
            (first.members(j), 0 if first.gamma[j] == second.gamma[j] else 1)
            for j in range(first.m)
        ),
    )
    outcome = gf2_solve(system)
    if isinstance(outcome, GF2Infeasible):
        return NotEquivalent(witness_edges=outcome.witness_rows)
    return SignedSwitchCertificate(vertices=outcome.support)
