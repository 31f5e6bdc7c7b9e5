"""Modular subset-sum solvers with witness recovery.

All engines run the same accumulation: start from {0}, fold in the
reduced elements in ascending order, and record for every sum the element
whose arrival created it.  They differ only in how the per-element set
difference is found:

* "rolling"   - randomized rolling-hash window descent, output-sensitive,
                may miss sums with probability bounded by the prime policy;
* "dynstring" - deterministic longest-common-prefix scan over a
                run-compressed bit string (plain variant behind a flag);
* "naive"     - the dense reference sweep, for cross-checking.

Identical element order makes the three witness tables comparable entry
for entry, not just as sets.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .dynstrings import CompressedBitLcp, PlainBitLcp
from .errors import InvalidParameterError, ModsumError
from .hashtree import HashPrefixTree
from .preprocess import ResidueMultiset, canonicalize, preprocess

ENGINES = ("rolling", "dynstring", "naive")

ABSENT = -1


class SumTable:
    """Witness table over Z_m.

    witness[s] is the element whose arrival first made s attainable,
    ABSENT (-1) when s never became attainable, and 0 at s = 0, which is
    attainable from the start via the empty subset.
    """

    __slots__ = ("m", "witness")

    def __init__(self, m: int, witness):
        self.m = m
        self.witness = np.asarray(witness, dtype=np.int64)
        if self.witness.shape != (m,):
            raise InvalidParameterError(
                "witness table must have exactly m entries")

    def present(self, s: int) -> bool:
        return bool(self.witness[s] != ABSENT)

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.witness != ABSENT))

    def attainable(self) -> np.ndarray:
        """All attainable residues, ascending."""
        return np.flatnonzero(self.witness != ABSENT).astype(np.int64)

    def witness_list(self) -> list:
        """Python-level view: element per sum, None where unattainable."""
        return [None if w == ABSENT else int(w) for w in self.witness]

    def __eq__(self, other):
        if not isinstance(other, SumTable):
            return NotImplemented
        return self.m == other.m and bool(
            np.array_equal(self.witness, other.witness))

    def __repr__(self):
        return "SumTable(m=%d, %d attainable)" % (self.m, self.count)


@dataclass
class SolveReport:
    """What one solve run did and how long it took."""

    engine: str
    modulus: int
    n_input: int
    n_reduced: int
    attainable_count: int
    seed: int | None
    prime: int | None
    backend: str | None
    elapsed_ms: float
    core_elapsed_ms: float
    verified: bool | None = None
    elements: np.ndarray | None = field(default=None, repr=False)
    new_counts: np.ndarray | None = field(default=None, repr=False)
    node_counts: np.ndarray | None = field(default=None, repr=False)


def solve(values, modulus: int, *, engine: str = "rolling",
          seed: int | None = None, p: int | None = None,
          backend: str | None = None, plain_strings: bool = False,
          verify: bool = False, instrument: bool = False):
    """Solve one instance; returns (SumTable, SolveReport).

    `seed` only affects the rolling engine, which draws its hash base
    from it; the other engines are deterministic.  `instrument=True`
    attaches per-element discovery and probe counts to the report.
    """
    if engine not in ENGINES:
        raise InvalidParameterError(
            "engine must be one of %s, got %r" % (", ".join(ENGINES), engine))
    t0 = time.perf_counter()
    values = [int(v) for v in values]
    ms = preprocess(canonicalize(values, modulus))
    m = ms.modulus
    elems = ms.elements()
    if engine == "rolling":
        table, report = _solve_rolling(ms, elems, seed, p, backend,
                                       instrument, t0)
    elif engine == "dynstring":
        table, report = _solve_dynstring(ms, elems, plain_strings,
                                         instrument, t0)
    else:
        t1 = time.perf_counter()
        witness = oracle.dense_witness_sweep(elems, m)
        t2 = time.perf_counter()
        table = SumTable(m, witness)
        report = SolveReport(
            engine="naive", modulus=m, n_input=len(values),
            n_reduced=len(elems), attainable_count=table.count,
            seed=None, prime=None, backend=None,
            elapsed_ms=(t2 - t0) * 1e3, core_elapsed_ms=(t2 - t1) * 1e3)
    report.n_input = len(values)
    if verify:
        report.verified = verify_solution(values, modulus, table)
    return table, report


def _solve_rolling(ms: ResidueMultiset, elems, seed, p, backend,
                   instrument, t0):
    m = ms.modulus
    seed_used = seed if seed is not None else random.Random().getrandbits(63)
    tree = HashPrefixTree(m, p=p, seed=seed_used, backend=backend)
    witness = np.full(m, ABSENT, dtype=np.int64)
    witness[0] = 0
    tree.set_bit(0)
    tree.set_bit(m)
    out, sa, sb = tree.scratch()
    counts = np.zeros(len(elems), dtype=np.int64)
    nodes = np.zeros(len(elems), dtype=np.int64)
    t1 = time.perf_counter()
    tree.kernels.solve_loop(tree.tree, tree.size, tree.powr, tree.p, m,
                            elems, witness, out, sa, sb, counts, nodes)
    t2 = time.perf_counter()
    table = SumTable(m, witness)
    report = SolveReport(
        engine="rolling", modulus=m, n_input=len(elems),
        n_reduced=len(elems), attainable_count=table.count,
        seed=seed_used, prime=tree.p, backend=tree.kernels.name,
        elapsed_ms=(t2 - t0) * 1e3, core_elapsed_ms=(t2 - t1) * 1e3)
    if instrument:
        report.elements = elems.copy()
        report.new_counts = counts
        report.node_counts = nodes
    return table, report


def _solve_dynstring(ms: ResidueMultiset, elems, plain_strings,
                     instrument, t0):
    m = ms.modulus
    state = (PlainBitLcp if plain_strings else CompressedBitLcp)(2 * m)
    witness = np.full(m, ABSENT, dtype=np.int64)
    witness[0] = 0
    state.add(0)
    state.add(m)
    counts = np.zeros(len(elems), dtype=np.int64)
    probes = np.zeros(len(elems), dtype=np.int64)
    t1 = time.perf_counter()
    for k, x in enumerate(elems):
        x = int(x)
        diffs = []
        nprobe = 1
        d = state.lcp(0, m - x)
        while d < m:
            diffs.append(d)
            nprobe += 1
            d = d + 1 + state.lcp(d + 1, m - x + d + 1)
        fresh = 0
        for s in diffs:
            if witness[s] == ABSENT:
                witness[s] = x
                state.add(s)
                state.add(s + m)
                fresh += 1
        counts[k] = fresh
        probes[k] = nprobe
    t2 = time.perf_counter()
    table = SumTable(m, witness)
    report = SolveReport(
        engine="dynstring", modulus=m, n_input=len(elems),
        n_reduced=len(elems), attainable_count=table.count,
        seed=None, prime=None, backend=None,
        elapsed_ms=(t2 - t0) * 1e3, core_elapsed_ms=(t2 - t1) * 1e3)
    if instrument:
        report.elements = elems.copy()
        report.new_counts = counts
        report.node_counts = probes
    return table, report


def recover_subset(table: SumTable, target: int):
    """A subset (ascending, with multiplicity) summing to target mod m,
    or None when target is unattainable.

    Walks target -> target - witness[target] -> ... back to 0; each hop
    peels off the element that created the current sum.
    """
    m = table.m
    if not (0 <= target < m):
        raise InvalidParameterError(
            "target %r outside [0, %d)" % (target, m))
    if table.witness[target] == ABSENT:
        return None
    out = []
    s = target
    while s != 0:
        w = int(table.witness[s])
        if w == ABSENT or len(out) > m:
            raise ModsumError(
                "witness table is corrupt: chain from %d does not reach 0"
                % (target,))
        out.append(w)
        s = (s - w) % m
    out.sort()
    return out


def validate_table(values, modulus: int, table: SumTable) -> bool:
    """Structural checks only: sentinel, witness membership, acyclic
    chains that all reach 0.  No statement about completeness."""
    ms = preprocess(canonicalize(values, modulus))
    if table.m != ms.modulus:
        return False
    if table.witness[0] != 0:
        return False
    support = set(ms.counts)
    m = table.m
    # status: 0 unknown, 1 chain reaches 0, 2 on current path
    status = np.zeros(m, dtype=np.int8)
    status[0] = 1
    for s0 in range(m):
        w0 = int(table.witness[s0])
        if w0 == ABSENT or status[s0] != 0:
            continue
        if s0 != 0 and w0 not in support:
            return False
        path = []
        s = s0
        while status[s] == 0:
            status[s] = 2
            path.append(s)
            w = int(table.witness[s])
            if w == ABSENT or (s != 0 and w not in support):
                return False
            s = (s - w) % m
            if status[s] == 2:
                return False  # cycle
        if status[s] != 1:
            return False
        for q in path:
            status[q] = 1
    return True


def verify_solution(values, modulus: int, table: SumTable) -> bool:
    """Check a table against an independent re-run.

    Structure is validated exactly; the attainable set is compared with
    a fresh rolling solve under a freshly drawn hash base (or the dense
    sweep when the instance is small enough to afford it).
    """
    if not validate_table(values, modulus, table):
        return False
    ms = preprocess(canonicalize(values, modulus))
    n = ms.cardinality
    if n * ms.modulus <= 4_000_000:
        other = oracle.bellman_naive(values, modulus)
    else:
        other, _ = solve(values, modulus, engine="rolling")
    return bool(np.array_equal(other.witness != ABSENT,
                               table.witness != ABSENT))
