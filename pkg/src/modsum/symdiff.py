"""Locate fresh subset sums by divide-and-conquer over hash windows.

Shifting the sum set by an element x and comparing it window-by-window
against the unshifted set exposes exactly the positions where the two
differ.  Descending only into halves whose hashes disagree costs
O((k+1) log m) window checks for k reported differences, instead of a
full O(m) sweep.  Positions already present in the witness table are
differences on the stale side and are skipped; the rest are the new sums.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .hashtree import HashPrefixTree


@dataclass
class SymDiffResult:
    """New sums found in one window descent, plus the node count."""

    new_sums: list[int]
    nodes_visited: int


def find_new_sums(a: int, b: int, x: int, tree: HashPrefixTree,
                  table) -> SymDiffResult:
    """New sums of the x-shifted set within [a, b), in ascending order.

    `table` is the witness table whose absent entries mark candidate
    positions.  Misses are one-sided: a reported position is always a
    genuine new sum, while a hash collision can only hide one.
    """
    m = tree.m
    if not (0 <= a < b <= m):
        raise InvalidParameterError(
            "range [%r, %r) outside 0 <= a < b <= %d" % (a, b, m))
    if not (0 <= x < m):
        raise InvalidParameterError("element %r outside [0, %d)" % (x, m))
    out, sa, sb = tree.scratch()
    count, nodes = tree.kernels.find_new_sums(
        tree.tree, tree.size, tree.powr, tree.p, m, a, b, x,
        table.witness, out, sa, sb)
    return SymDiffResult([int(out[i]) for i in range(count)], int(nodes))
