"""Timing harness behind the `bench` CLI subcommand.

Rows come out as (engine, m, n, attainable, elapsed_ms, seed); with
backend comparison enabled, rolling rows are emitted once per available
kernel backend, tagged `rolling@<backend>`.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .instances import generate
from .solver import solve

CSV_HEADER = "engine,m,n,attainable,elapsed_ms,seed"


@dataclass
class BenchRow:
    engine: str
    m: int
    n: int
    attainable: int
    elapsed_ms: float
    seed: int

    def csv(self) -> str:
        return "%s,%d,%d,%d,%.3f,%d" % (
            self.engine, self.m, self.n, self.attainable,
            self.elapsed_ms, self.seed)


def _one(engine, values, m, seed, backend=None, tag=None):
    table, report = solve(values, m, engine=engine, seed=seed,
                          backend=backend)
    return BenchRow(tag or engine, m, len(values), report.attainable_count,
                    report.elapsed_ms, seed)


def run_bench(engines, moduli, count, dist="uniform", seed=0,
              values=None, compare_backends=False) -> list[BenchRow]:
    """One row per (engine, modulus) cell.

    With explicit `values` the same instance is reused for every cell
    (its residues reduce per modulus); otherwise each modulus draws a
    fresh instance from `dist` with a seed derived from `seed`.
    """
    if compare_backends:
        _kernels.get_backend("python")
        for name in _kernels.available_backends():
            _kernels.get_backend(name).warm()
    rows = []
    for idx, m in enumerate(moduli):
        cell_seed = seed + idx
        vals = values if values is not None else generate(
            dist, m, count, seed=cell_seed)
        for engine in engines:
            if engine == "rolling" and compare_backends:
                for name in _kernels.available_backends():
                    rows.append(_one("rolling", vals, m, cell_seed,
                                     backend=name,
                                     tag="rolling@%s" % name))
            else:
                rows.append(_one(engine, vals, m, cell_seed))
    return rows
