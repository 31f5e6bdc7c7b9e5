"""Multiplicity reduction for modular subset-sum inputs.

Any multiset over Z_m can be thinned to one with at most two copies of
each residue without changing the set of attainable sums: three copies of
x contribute the same sums as one copy of x plus one copy of 2x mod m.
Applying that rewrite to exhaustion caps the instance size at min(n, 2m)
while every attainable sum survives, which is what makes the solvers'
output-sensitive bounds meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidModulusError, InvalidParameterError


@dataclass
class ResidueMultiset:
    """A multiset of residues, stored as residue -> multiplicity."""

    modulus: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise InvalidModulusError(
                "modulus must be a positive integer, got %r" % (self.modulus,))
        for r, c in self.counts.items():
            if not (0 <= r < self.modulus):
                raise InvalidParameterError(
                    "residue %r outside [0, %d)" % (r, self.modulus))
            if c < 1:
                raise InvalidParameterError(
                    "multiplicity of %r must be >= 1, got %r" % (r, c))

    @property
    def cardinality(self) -> int:
        return sum(self.counts.values())

    def copy(self) -> "ResidueMultiset":
        return ResidueMultiset(self.modulus, dict(self.counts))

    def elements(self) -> np.ndarray:
        """All elements, ascending, duplicates adjacent.

        This is the one iteration order every solver uses, so their
        witness tables agree element for element.
        """
        out = np.empty(self.cardinality, dtype=np.int64)
        k = 0
        for r in sorted(self.counts):
            c = self.counts[r]
            out[k:k + c] = r
            k += c
        return out


def canonicalize(values, modulus: int) -> ResidueMultiset:
    """Reduce raw integers mod `modulus` and tally them.

    Accepts any iterable of ints (negatives fold in the usual way).
    Zeros are kept: they never change the attainable set but a witness
    table is free to use them.
    """
    if not isinstance(modulus, int) or modulus < 1:
        raise InvalidModulusError(
            "modulus must be a positive integer, got %r" % (modulus,))
    counts: dict[int, int] = {}
    for v in values:
        r = int(v) % modulus
        counts[r] = counts.get(r, 0) + 1
    return ResidueMultiset(modulus, counts)


def preprocessing_check(ms: ResidueMultiset, x: int) -> None:
    """Rewrite multiplicities at x (in place) until mult(x) <= 2.

    Each rewrite replaces two copies of x by one copy of 2x mod m, and
    may push 2x mod m itself above the cap, so both residues are
    re-examined via an explicit work stack until neither qualifies.
    """
    if not (0 <= x < ms.modulus):
        raise InvalidParameterError(
            "residue %r outside [0, %d)" % (x, ms.modulus))
    m = ms.modulus
    counts = ms.counts
    stack = [x]
    while stack:
        y = stack.pop()
        while counts.get(y, 0) >= 3:
            counts[y] -= 2
            d = 2 * y % m
            counts[d] = counts.get(d, 0) + 1
            if d != y:
                stack.append(d)


def preprocess(ms: ResidueMultiset) -> ResidueMultiset:
    """Return a reduced copy: same attainable sums, every mult <= 2.

    Residues are visited in ascending order of the input's support;
    residues created along the way are handled by the per-residue check
    itself, so one sweep suffices.
    """
    out = ms.copy()
    for x in sorted(ms.counts):
        preprocessing_check(out, x)
    return out
