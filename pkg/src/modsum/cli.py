"""Command-line interface.

Subcommands: solve, recover, apnp, gen, bench.  Exit codes: 0 success,
1 unattainable target / unreachable pair, 2 malformed input file or
usage, 3 invalid modulus or instance parameters, 4 verification failure.
All output is line-oriented with LF endings; `--format json` switches
solve and apnp to a single JSON object on stdout.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .apnp import all_pairs_non_decreasing_paths, prepare_edges, recover_path
from .bench import CSV_HEADER, run_bench
from .errors import InstanceParseError, InvalidModulusError, ModsumError
from .instances import DISTRIBUTIONS, generate, parse_graph, parse_instance
from .solver import ENGINES, recover_subset, solve


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _check_modulus(m: int) -> None:
    if m < 1:
        raise InvalidModulusError("modulus must be >= 1, got %d" % (m,))


def _fmt_entry(w) -> str:
    return "-" if w is None else str(w)


def cmd_solve(args) -> int:
    _check_modulus(args.modulus)
    values = parse_instance(_read_text(args.file))
    table, report = solve(values, args.modulus, engine=args.algo,
                          seed=args.seed, plain_strings=args.plain_strings,
                          verify=args.verify)
    witness = table.witness_list()
    attainable = [int(s) for s in table.attainable()]
    if args.format == "json":
        payload = {
            "modulus": args.modulus,
            "algo": args.algo,
            "seed": report.seed,
            "attainable": attainable,
            "witness": witness,
            "elapsed_ms": round(report.elapsed_ms, 3),
            "verified": report.verified,
        }
        print(json.dumps(payload))
    else:
        for s in attainable:
            print(s)
    if args.verify and not report.verified:
        print("modsum: verification failed", file=sys.stderr)
        return 4
    return 0


def cmd_recover(args) -> int:
    _check_modulus(args.modulus)
    values = parse_instance(_read_text(args.file))
    table, _ = solve(values, args.modulus, engine=args.algo, seed=args.seed)
    subset = recover_subset(table, args.target)
    if subset is None:
        print("UNATTAINABLE")
        return 1
    print(" ".join(str(v) for v in subset))
    return 0


def cmd_apnp(args) -> int:
    edges = parse_graph(_read_text(args.file))
    el = prepare_edges(edges, args.vertices)
    matrix, elapsed_ms = all_pairs_non_decreasing_paths(
        el, args.vertices, seed=args.seed)
    if args.recover is not None:
        u, v = args.recover
        path = recover_path(matrix, u, v)
        if args.format == "json":
            print(json.dumps({"vertices": args.vertices,
                              "path": path}))
        elif path is None:
            print("UNREACHABLE")
        else:
            print(" ".join(str(q) for q in path))
        return 1 if path is None else 0
    parents = matrix.parent_lists()
    if args.format == "json":
        print(json.dumps({"vertices": args.vertices,
                          "parents": parents,
                          "elapsed_ms": round(elapsed_ms, 3)}))
    else:
        for row in parents:
            print(" ".join(_fmt_entry(q) for q in row))
    return 0


def cmd_gen(args) -> int:
    _check_modulus(args.modulus)
    for v in generate(args.dist, args.modulus, args.count, seed=args.seed):
        print(v)
    return 0


def cmd_bench(args) -> int:
    moduli = [int(tok) for tok in args.moduli.split(",") if tok]
    for m in moduli:
        _check_modulus(m)
    values = parse_instance(_read_text(args.file)) if args.file else None
    rows = run_bench(
        [tok for tok in args.engines.split(",") if tok], moduli,
        args.count, dist=args.dist, seed=args.seed, values=values,
        compare_backends=args.compare_backends)
    print(CSV_HEADER)
    for row in rows:
        print(row.csv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modsum",
        description="Output-sensitive modular subset sums and "
                    "non-decreasing paths")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="compute the witness table")
    sp.add_argument("file", help="instance file of integers, or - for stdin")
    sp.add_argument("--modulus", type=int, required=True)
    sp.add_argument("--algo", choices=ENGINES, default="rolling")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--verify", action="store_true",
                    help="cross-check against an independent run")
    sp.add_argument("--plain-strings", action="store_true",
                    help="dynstring only: per-position symbols instead of "
                         "run compression")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_solve)

    rp = sub.add_parser("recover", help="recover a subset for one target")
    rp.add_argument("file")
    rp.add_argument("--modulus", type=int, required=True)
    rp.add_argument("--target", type=int, required=True)
    rp.add_argument("--algo", choices=ENGINES, default="rolling")
    rp.add_argument("--seed", type=int, default=None)
    rp.set_defaults(func=cmd_recover)

    gp = sub.add_parser("apnp", help="all-pairs non-decreasing paths")
    gp.add_argument("file", help="graph file of `u v w` lines")
    gp.add_argument("--vertices", type=int, required=True)
    gp.add_argument("--seed", type=int, default=None)
    gp.add_argument("--recover", nargs=2, type=int, metavar=("U", "V"))
    gp.add_argument("--format", choices=("text", "json"), default="text")
    gp.set_defaults(func=cmd_apnp)

    np_ = sub.add_parser("gen", help="generate a test instance")
    np_.add_argument("--modulus", type=int, required=True)
    np_.add_argument("--count", type=int, required=True)
    np_.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    np_.add_argument("--seed", type=int, default=0)
    np_.set_defaults(func=cmd_gen)

    bp = sub.add_parser("bench", help="time engines over a modulus grid")
    bp.add_argument("file", nargs="?", default=None,
                    help="optional fixed instance reused for every cell")
    bp.add_argument("--engines", default="rolling")
    bp.add_argument("--moduli", required=True,
                    help="comma-separated modulus grid")
    bp.add_argument("--count", type=int, default=256)
    bp.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    bp.add_argument("--seed", type=int, default=0)
    bp.add_argument("--compare-backends", action="store_true",
                    help="run rolling once per available kernel backend")
    bp.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InstanceParseError as exc:
        print("modsum: %s" % (exc,), file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("modsum: %s" % (exc,), file=sys.stderr)
        return 2
    except ModsumError as exc:
        print("modsum: %s" % (exc,), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
