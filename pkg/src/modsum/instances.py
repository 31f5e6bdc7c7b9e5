"""Instance file parsing and test-instance generation.

Instance files are whitespace-separated integers; graph files are lines
of `u v w` triples with `#` comments.  Parse errors carry the 1-based
line and column of the offending token.
"""
from __future__ import annotations

import re

import numpy as np

from .errors import InstanceParseError, InvalidParameterError

DISTRIBUTIONS = ("uniform", "single-residue", "arithmetic")

_TOKEN_RE = re.compile(r"\S+")


def _tokens(text):
    for ln, line in enumerate(text.split("\n"), start=1):
        body = line.split("#", 1)[0]
        for mt in _TOKEN_RE.finditer(body):
            yield ln, mt.start() + 1, mt.group()


def parse_instance(text: str) -> list[int]:
    """All integers in the text, in order."""
    out = []
    for ln, col, tok in _tokens(text):
        try:
            out.append(int(tok))
        except ValueError:
            raise InstanceParseError(
                "expected an integer, got %r" % (tok,), ln, col)
    return out


def parse_graph(text: str):
    """(u, v, w) triples, one per line; w may be a float."""
    rows: dict[int, list] = {}
    for ln, col, tok in _tokens(text):
        rows.setdefault(ln, []).append((col, tok))
    edges = []
    for ln in sorted(rows):
        toks = rows[ln]
        if len(toks) != 3:
            col = toks[3][0] if len(toks) > 3 else toks[0][0]
            raise InstanceParseError(
                "expected `u v w`, got %d tokens" % (len(toks),), ln, col)
        vals = []
        for idx, (col, tok) in enumerate(toks):
            try:
                vals.append(int(tok))
            except ValueError:
                if idx == 2:
                    try:
                        vals.append(float(tok))
                        continue
                    except ValueError:
                        pass
                raise InstanceParseError(
                    "expected a number, got %r" % (tok,), ln, col)
        edges.append((vals[0], vals[1], vals[2]))
    return edges


def _divisor_near(m: int, want: int) -> int:
    # largest divisor of m that is <= want
    for q in range(min(want, m), 0, -1):
        if m % q == 0:
            return q
    return 1


def generate(dist: str, modulus: int, count: int,
             seed: int | None = 0) -> list[int]:
    """Deterministic test instances.

    uniform: independent residues.  single-residue: many copies of one
    divisor-friendly residue, so the attainable set stays tiny compared
    to m.  arithmetic: an arithmetic progression with random start and
    stride.
    """
    if dist not in DISTRIBUTIONS:
        raise InvalidParameterError(
            "distribution must be one of %s, got %r"
            % (", ".join(DISTRIBUTIONS), dist))
    if modulus < 1:
        raise InvalidParameterError("modulus must be >= 1")
    if count < 0:
        raise InvalidParameterError("count must be >= 0")
    rng = np.random.default_rng(0 if seed is None else seed)
    if dist == "uniform":
        return [int(v) for v in rng.integers(0, modulus, size=count)]
    if dist == "single-residue":
        q = _divisor_near(modulus, 128)
        step = modulus // q
        return [step % modulus] * count
    start = int(rng.integers(0, modulus))
    stride = int(rng.integers(1, max(2, modulus)))
    return [(start + k * stride) % modulus for k in range(count)]
