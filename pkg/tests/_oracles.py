"""Brute-force reference implementations used only by the tests.

These deliberately take the slowest, most literal route (explicit dense
tensors, exhaustive enumeration) so they share no code with the package
internals they check.
"""

from itertools import permutations
from math import factorial

import numpy as np

import hypersign as hs


def dense_adjacency_tensor(h: hs.SignedHypergraph) -> np.ndarray:
    """Order-k dense symmetric tensor with entry sign/(k-1)! for every
    permutation of every edge."""
    k = hs.uniform_edge_size(h)
    if k is None:
        raise ValueError("dense oracle needs a uniform instance")
    shape = (h.n,) * k
    tensor = np.zeros(shape)
    for j in range(h.m):
        value = h.gamma[j] / factorial(k - 1)
        for perm in permutations(h.members(j)):
            tensor[tuple(v - 1 for v in perm)] += value  # parallel edges add up
    return tensor


def dense_laplacian_tensor(h: hs.SignedHypergraph) -> np.ndarray:
    k = hs.uniform_edge_size(h)
    tensor = dense_adjacency_tensor(h)
    for v in range(1, h.n + 1):
        tensor[(v - 1,) * k] += h.degree(v)
    return tensor


def dense_contract(tensor: np.ndarray, x: np.ndarray) -> np.ndarray:
    """(T x^{k-1})_v: contract all but the first index with x."""
    out = tensor.astype(complex if np.iscomplexobj(x) else float)
    for _ in range(tensor.ndim - 1):
        out = out @ x
    return out


def balance_by_bipartition_bruteforce(g: hs.OrientedHypergraph):
    """Try every bipartition of the vertices: per edge, the positively
    incident vertices must sit in one part and the negatively incident
    vertices in the other."""
    n = g.n
    for bits in range(2 ** n):
        ok = True
        for j in range(g.m):
            seen = {1: set(), -1: set()}
            for v in g.members(j):
                side = (bits >> (v - 1)) & 1
                seen[g.orientation(j, v)].add(side)
            if len(seen[1]) > 1 or len(seen[-1]) > 1 or (seen[1] & seen[-1]):
                ok = False
                break
        if ok:
            pos = tuple(v for v in range(1, n + 1) if not (bits >> (v - 1)) & 1)
            neg = tuple(v for v in range(1, n + 1) if (bits >> (v - 1)) & 1)
            return pos, neg
    return None
