"""Brute-force reference implementations.

These exist to check the fast engines, so they deliberately share no code
with them: subset enumeration instead of hashing, dense boolean sweeps
instead of tree descent.  Each carries a hard guard on instance size and
refuses anything bigger.
"""
from __future__ import annotations

import numpy as np

from .errors import GuardExceededError, InvalidModulusError
from .preprocess import canonicalize, preprocess

BRUTE_MAX_ELEMENTS = 24
BELLMAN_GUARD = 1_000_000_000
APNP_BRUTE_MAX_VERTICES = 64


def brute_subset_sums(values, modulus: int) -> set[int]:
    """Attainable sums by enumerating all 2**n subsets.

    The doubling recurrence materializes every subset sum, so nothing
    about multiplicities or ordering is assumed.  Guarded at
    BRUTE_MAX_ELEMENTS elements.
    """
    if not isinstance(modulus, int) or modulus < 1:
        raise InvalidModulusError(
            "modulus must be a positive integer, got %r" % (modulus,))
    vals = [int(v) % modulus for v in values]
    if len(vals) > BRUTE_MAX_ELEMENTS:
        raise GuardExceededError(
            "%d elements exceeds the brute-force guard of %d"
            % (len(vals), BRUTE_MAX_ELEMENTS))
    sums = np.zeros(1, dtype=np.int64)
    for v in vals:
        sums = np.concatenate([sums, (sums + v) % modulus])
    return set(int(s) for s in np.unique(sums))


def bellman_naive(values, modulus: int):
    """Textbook dense iteration producing a witness table.

    Runs on the preprocessed multiset in the same ascending element
    order as the fast engines, so the resulting table matches theirs
    entry for entry, not just as a set.  Work is Theta(n*m), guarded.
    """
    from .solver import SumTable  # table type only; no engine code

    ms = preprocess(canonicalize(values, modulus))
    return SumTable(ms.modulus, dense_witness_sweep(ms.elements(),
                                                    ms.modulus))


def dense_witness_sweep(elems, modulus: int) -> np.ndarray:
    """The Bellman sweep alone: elements in, witness array out.

    Callers hand in an already-reduced element sequence; each element
    shifts the attainable mask by its own value and claims whatever
    residues that newly covers.
    """
    m = modulus
    if len(elems) * m > BELLMAN_GUARD:
        raise GuardExceededError(
            "n*m = %d exceeds the dense-iteration guard of %d"
            % (len(elems) * m, BELLMAN_GUARD))
    present = np.zeros(m, dtype=bool)
    witness = np.full(m, -1, dtype=np.int64)
    present[0] = True
    witness[0] = 0
    for x in elems:
        shifted = np.roll(present, int(x))
        fresh = shifted & ~present
        witness[fresh] = x
        present |= fresh
    return witness


def apnp_brute(edges, n: int):
    """All-pairs non-decreasing paths by per-edge dense reachability.

    Edges must arrive sorted by weight.  For each edge (a, b) the
    snapshot of who-reaches-whom is scanned once; every vertex that
    reaches exactly one endpoint gains the other, with the endpoint it
    already reaches recorded as the parent.  Guarded at
    APNP_BRUTE_MAX_VERTICES vertices.
    """
    from .apnp import PathMatrix  # result type only; no engine code

    if n > APNP_BRUTE_MAX_VERTICES:
        raise GuardExceededError(
            "%d vertices exceeds the brute-force guard of %d"
            % (n, APNP_BRUTE_MAX_VERTICES))
    reach = np.zeros((n, n), dtype=bool)
    parent = np.full((n, n), -1, dtype=np.int32)
    disc = np.full((n, n), -1, dtype=np.int32)
    for i in range(n):
        reach[i, i] = True
        parent[i, i] = i
    for e, (a, b) in enumerate(edges):
        to_b = reach[:, a] & ~reach[:, b]
        to_a = reach[:, b] & ~reach[:, a]
        parent[to_b, b] = a
        disc[to_b, b] = e
        parent[to_a, a] = b
        disc[to_a, a] = e
        reach[to_b, b] = True
        reach[to_a, a] = True
    return PathMatrix(n, parent, disc)
