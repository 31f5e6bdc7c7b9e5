"""All-pairs reachability by non-decreasing paths.

Process edges in increasing weight order while maintaining, per vertex v,
a complete binary tree whose leaf u holds r**u mod p when u can already
reach v along a path whose edge weights never decrease.  Internal nodes
hold subtree sums, so the trees of two vertices can be compared top-down
and descended only where they disagree.  When edge (a, b) arrives, every
leaf where the trees of a and b differ is a vertex that reaches exactly
one endpoint; it gains the other endpoint, with the endpoint it already
reaches recorded as its parent there.  A pair discovered once is final,
which is what makes the per-edge work proportional to what the edge
actually changes.

Hash misses are one-sided: a descent can overlook a differing leaf only
through a mod-p collision, so every emitted discovery is genuine.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._primes import INT64_SAFE_LIMIT, prime_for_vertices, validate_hash_prime
from .errors import (DistinctWeightsError, InvalidEdgeError,
                     InvalidParameterError)

_STACK_SLOTS = 160


@dataclass
class EdgeList:
    """Validated instance: endpoint arrays sorted by ascending weight."""

    n: int
    a: np.ndarray
    b: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.a)


class PathMatrix:
    """Parent matrix plus discovery order.

    parent[u][v] is the predecessor of v on an optimal non-decreasing
    path from u to v (-1 when v is unreachable from u, u itself on the
    diagonal).  disc[u][v] is the index, in weight order, of the edge
    whose arrival made the pair reachable; -1 on the diagonal and for
    unreachable pairs.
    """

    __slots__ = ("n", "parent", "disc")

    def __init__(self, n: int, parent, disc):
        self.n = n
        self.parent = np.asarray(parent, dtype=np.int32)
        self.disc = np.asarray(disc, dtype=np.int32)

    def reachable(self, u: int, v: int) -> bool:
        return bool(self.parent[u, v] >= 0)

    def parent_lists(self) -> list:
        """Row-major nested lists with None for unreachable pairs."""
        return [[None if p < 0 else int(p) for p in row]
                for row in self.parent]

    def __eq__(self, other):
        if not isinstance(other, PathMatrix):
            return NotImplemented
        return (self.n == other.n
                and bool(np.array_equal(self.parent, other.parent)))


def prepare_edges(edges, n: int) -> EdgeList:
    """Validate and weight-sort an edge list of (u, v, w) triples.

    Endpoints must lie in [0, n) and differ; weights must be pairwise
    distinct (ties would make "the" discovery order ambiguous).  Weights
    may be ints or floats.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(
            "vertex count must be a positive integer, got %r" % (n,))
    ea, eb, ws = [], [], []
    for k, edge in enumerate(edges):
        try:
            u, v, w = edge
        except (TypeError, ValueError):
            raise InvalidEdgeError(
                "edge %d is not a (u, v, w) triple: %r" % (k, edge))
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdgeError(
                "edge %d endpoints (%d, %d) outside [0, %d)" % (k, u, v, n))
        if u == v:
            raise InvalidEdgeError("edge %d is a self-loop at %d" % (k, u))
        ea.append(u)
        eb.append(v)
        ws.append(w)
    warr = np.asarray(ws, dtype=np.float64)
    if not np.all(np.isfinite(warr)):
        raise InvalidEdgeError("edge weights must be finite numbers")
    if len(set(warr.tolist())) != len(ws):
        raise DistinctWeightsError(
            "distinct weights required: duplicates present in edge list")
    order = np.argsort(warr, kind="stable")
    return EdgeList(
        n,
        np.asarray(ea, dtype=np.int64)[order],
        np.asarray(eb, dtype=np.int64)[order],
        warr[order])


class _State:
    """Mutable engine state shared by the incremental steps."""

    def __init__(self, n, p, r, seed, backend):
        if p is None:
            p = prime_for_vertices(n)
        validate_hash_prime(p, n)
        if r is None:
            import random
            r = random.Random(seed).randrange(p)
        self.n = n
        self.p = p
        self.r = int(r)
        self.nleaf = 1 << max(0, (n - 1).bit_length())
        self.big = p > INT64_SAFE_LIMIT
        if self.big:
            self.kernels = _kernels.get_backend("python")
            self.trees = [[0] * (2 * self.nleaf) for _ in range(n)]
            self.powr = [0] * n
        else:
            self.kernels = _kernels.get_backend(backend)
            self.trees = np.empty((n, 2 * self.nleaf), dtype=np.int64)
            self.trees.fill(0)
            self.powr = np.zeros(n, dtype=np.int64)
        self.kernels.powr_fill(self.powr, n, self.r, self.p)
        self.path = np.full((n, n), -1, dtype=np.int32)
        self.disc = np.full((n, n), -1, dtype=np.int32)
        self.kernels.apnp_init(self.trees, self.powr, self.p, self.path,
                               n, self.nleaf)
        self.out_u = np.zeros(max(n, 1), dtype=np.int64)
        self.out_v = np.zeros(max(n, 1), dtype=np.int64)
        self.out_par = np.zeros(max(n, 1), dtype=np.int64)
        self.stack = np.zeros(_STACK_SLOTS, dtype=np.int64)


def find_new_paths(state: _State, a: int, b: int) -> list[tuple[int, int, int]]:
    """Discoveries the edge (a, b) would enable, as (u, gained, parent)
    triples, computed against the current state without applying them."""
    c = state.kernels.apnp_find(
        state.trees, state.path, a, b, state.nleaf,
        state.out_u, state.out_v, state.out_par, state.stack)
    return [(int(state.out_u[i]), int(state.out_v[i]), int(state.out_par[i]))
            for i in range(c)]


def all_pairs_non_decreasing_paths(edges, n: int, *,
                                   p: int | None = None,
                                   r: int | None = None,
                                   seed: int | None = None,
                                   backend: str | None = None):
    """Run the full pass; returns (PathMatrix, elapsed_ms).

    `edges` may be raw (u, v, w) triples or an already-prepared
    EdgeList.  Randomness only affects what the hashes can miss; every
    reported pair is genuinely reachable.
    """
    el = edges if isinstance(edges, EdgeList) else prepare_edges(edges, n)
    if el.n != n:
        raise InvalidParameterError("edge list was prepared for n=%d" % el.n)
    t0 = time.perf_counter()
    st = _State(n, p, r, seed, backend)
    if st.big:
        ea = [int(x) for x in el.a]
        eb = [int(x) for x in el.b]
    else:
        ea, eb = el.a, el.b
    st.kernels.apnp_run(st.trees, st.powr, st.p, st.path, st.disc,
                        ea, eb, st.nleaf,
                        st.out_u, st.out_v, st.out_par, st.stack)
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    return PathMatrix(n, st.path, st.disc), elapsed_ms


def recover_path(matrix: PathMatrix, u: int, v: int):
    """Vertex sequence of an optimal non-decreasing path from u to v,
    or None when v is unreachable from u."""
    n = matrix.n
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidParameterError(
            "endpoints (%r, %r) outside [0, %d)" % (u, v, n))
    if matrix.parent[u, v] < 0:
        return None
    out = [v]
    cur = v
    while cur != u:
        cur = int(matrix.parent[u, cur])
        if cur < 0 or len(out) > n:
            raise InvalidParameterError(
                "parent matrix is corrupt: walk from %d back to %d cycles"
                % (v, u))
        out.append(cur)
    out.reverse()
    return out
