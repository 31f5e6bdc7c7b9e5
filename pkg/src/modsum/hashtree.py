"""Prefix hashes of a mutable bit vector, for O(log m) window comparison.

The solver keeps the characteristic vector of its sum set doubled to
length 2m, so that "the set shifted by x" is an ordinary window of the
same vector.  A binary indexed tree over position contributions b_i * r**i
gives every prefix hash in O(log m), and two windows of equal length can
then be compared with four prefix reads: if the hashes differ the windows
really differ; if they agree the windows agree up to a polynomial-identity
collision, never the other way around.
"""
from __future__ import annotations

import random

import numpy as np

from . import _kernels
from ._primes import (INT64_SAFE_LIMIT, prime_for_modulus,
                      validate_hash_prime)
from .errors import InvalidModulusError, InvalidParameterError

_STACK_SLOTS = 160  # descent depth tops out near 2*log2(m) + 4


class HashPrefixTree:
    """Rolling-hash state over 2m bit positions.

    p defaults to the policy prime for m; r is drawn uniformly from
    [0, p) using `seed` when not given.  While p*p fits in a signed
    64-bit word the buffers are numpy arrays driven by the selected
    kernel backend; a larger p switches to Python-int buffers and the
    interpreted kernels, trading speed for an honest collision bound.
    """

    def __init__(self, m: int, p: int | None = None, r: int | None = None,
                 *, seed: int | None = None, backend: str | None = None):
        if not isinstance(m, int) or m < 1:
            raise InvalidModulusError(
                "modulus must be a positive integer, got %r" % (m,))
        if p is None:
            p = prime_for_modulus(m)
        else:
            p = int(p)
        validate_hash_prime(p, m)
        if r is None:
            r = random.Random(seed).randrange(p)
        elif not (0 <= r < p):
            raise InvalidParameterError("r=%r outside [0, %d)" % (r, p))
        self.m = m
        self.p = p
        self.r = int(r)
        self.size = 2 * m
        self.big = p > INT64_SAFE_LIMIT
        if self.big:
            self.kernels = _kernels.get_backend("python")
            self.tree = [0] * (self.size + 1)
            self.powr = [0] * (self.size + 1)
        else:
            self.kernels = _kernels.get_backend(backend)
            # empty+fill commits the pages now, keeping first-touch
            # faults out of the solve loop
            self.tree = np.empty(self.size + 1, dtype=np.int64)
            self.tree.fill(0)
            self.powr = np.empty(self.size + 1, dtype=np.int64)
        self.kernels.powr_fill(self.powr, self.size + 1, self.r, self.p)

    def prefix(self, t: int) -> int:
        """Hash of bit positions [0, t): sum of b_i * r**i mod p."""
        if not (0 <= t <= self.size):
            raise InvalidParameterError(
                "prefix end %r outside [0, %d]" % (t, self.size))
        return int(self.kernels.fenwick_prefix(self.tree, t, self.p))

    def set_bit(self, i: int) -> None:
        """Flip position i from 0 to 1.  Setting a set bit is an error."""
        if not (0 <= i < self.size):
            raise InvalidParameterError(
                "bit position %r outside [0, %d)" % (i, self.size))
        if __debug__:
            before = (self.prefix(i + 1) - self.prefix(i)) % self.p
            assert before == 0, "bit %d is already set" % (i,)
        self.kernels.fenwick_add(self.tree, self.size, i,
                                 self.powr[i], self.p)

    def window_hashes_equal(self, a: int, b: int, x: int) -> bool:
        """Compare window [a, b) of the x-shifted view with the plain view.

        False is authoritative: the windows genuinely differ.  True may
        (rarely) be a collision, so callers treat it as "no difference
        found", never as proof of equality.
        """
        if not (0 <= a <= b <= self.m):
            raise InvalidParameterError(
                "window [%r, %r) outside 0 <= a <= b <= %d" % (a, b, self.m))
        if not (0 <= x < self.m):
            raise InvalidParameterError(
                "shift %r outside [0, %d)" % (x, self.m))
        return bool(self.kernels.windows_equal(
            self.tree, self.size, self.powr, self.p, self.m, a, b, x))

    def scratch(self):
        """Preallocated descent buffers sized for this tree."""
        if self.big:
            return ([0] * self.m, [0] * _STACK_SLOTS, [0] * _STACK_SLOTS)
        out = np.zeros(max(self.m, 1), dtype=np.int64)
        sa = np.zeros(_STACK_SLOTS, dtype=np.int64)
        sb = np.zeros(_STACK_SLOTS, dtype=np.int64)
        return out, sa, sb
