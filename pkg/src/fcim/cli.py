"""Command-line interface: mine, dac, verify, bench, gen.

Exit codes: 0 success, 1 verification mismatch (verify only), 2 usage or I/O
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .bench import bench_database, write_csv
from .database import FimiParseError, MinsupSpec, TransactionDatabase, parse_fimi
from .merge import run_dac
from .miner import mine_closed
from .oracle import MAX_ORACLE_ITEMS, compare, oracle_closed
from .patterns import PatternSet, to_json, to_text
from .synth import gen_synthetic

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _read_db(path: str) -> TransactionDatabase:
    return parse_fimi(Path(path).read_bytes())


def _write_out(text: str, out: Optional[str]) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _render_patterns(patterns: PatternSet, minsup_raw: str, fmt: str) -> str:
    if fmt == "json":
        return to_json(patterns)
    header = [
        f"transactions={patterns.context_size} minsup={minsup_raw} "
        f"minsup_abs={patterns.minsup_abs}"
    ]
    return to_text(patterns, header)


def _empty_result() -> PatternSet:
    return PatternSet((), 0, 1)


def _check_partitions(n_partitions: int, db: TransactionDatabase) -> None:
    if n_partitions < 1:
        raise ValueError(f"partitions must be >= 1, got {n_partitions}")
    if db.n_transactions and n_partitions > db.n_transactions:
        raise ValueError(
            f"partitions ({n_partitions}) exceed the transaction count ({db.n_transactions})"
        )


def cmd_mine(args: argparse.Namespace) -> int:
    spec = MinsupSpec.of(args.minsup)
    db = _read_db(args.input)
    if db.n_transactions == 0:
        patterns = _empty_result()
    else:
        patterns = mine_closed(db, spec.absolute(db.n_transactions))
    _write_out(_render_patterns(patterns, args.minsup, args.format), args.out)
    return EXIT_OK


def cmd_dac(args: argparse.Namespace) -> int:
    spec = MinsupSpec.of(args.minsup)
    if args.threads is not None and args.threads < 1:
        raise ValueError("threads must be >= 1")
    db = _read_db(args.input)
    _check_partitions(args.partitions, db)
    trace = (lambda line: print(line, file=sys.stderr)) if args.trace_merge else None
    patterns = run_dac(db, args.partitions, spec, threads=args.threads, trace=trace)
    _write_out(_render_patterns(patterns, args.minsup, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    spec = MinsupSpec.of(args.minsup)
    db = _read_db(args.input)
    _check_partitions(args.partitions, db)
    if db.n_transactions == 0:
        sequential = _empty_result()
        dac = _empty_result()
    else:
        sequential = mine_closed(db, spec.absolute(db.n_transactions))
        dac = run_dac(db, args.partitions, spec, threads=args.threads)

    reports = {"dac_vs_sequential": compare(dac, sequential)}
    if len(db.universe) <= MAX_ORACLE_ITEMS and db.n_transactions:
        oracle = oracle_closed(db, spec.absolute(db.n_transactions))
        reports["sequential_vs_oracle"] = compare(sequential, oracle)
        reports["dac_vs_oracle"] = compare(dac, oracle)

    match = all(report.is_match for report in reports.values())
    if args.format == "json":
        payload = {name: report.to_json_dict() for name, report in reports.items()}
        payload["match"] = match
        _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        chunks = [f"[{name}]\n{report.to_text()}" for name, report in reports.items()]
        chunks.append(f"verify: {'MATCH' if match else 'MISMATCH'}\n")
        _write_out("".join(chunks), args.out)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_bench(args: argparse.Namespace) -> int:
    grid = [value.strip() for value in args.minsup.split(",") if value.strip()]
    if not grid:
        raise ValueError("empty minsup grid")
    for value in grid:
        MinsupSpec.of(value)
    if args.threads is not None and args.threads < 1:
        raise ValueError("threads must be >= 1")
    records = []
    for path in args.inputs:
        db = _read_db(path)
        _check_partitions(args.partitions, db)
        records.extend(bench_database(Path(path).name, db, grid, args.partitions, args.threads))
    _write_out(write_csv(records), args.out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    text = gen_synthetic(args.transactions, args.items, args.density, args.seed)
    _write_out(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcim",
        description="Frequent closed itemset mining with minimal generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("-i", "--input", required=True, help="FIMI dataset path")
        p.add_argument("-s", "--minsup", required=True, help="relative minsup in (0, 1]")
        p.add_argument("-o", "--out", default="-", help="output path ('-' for stdout)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_mine = sub.add_parser("mine", help="mine the whole context sequentially")
    io_args(p_mine)
    p_mine.set_defaults(func=cmd_mine)

    p_dac = sub.add_parser("dac", help="mine via partitioning and merge")
    io_args(p_dac)
    p_dac.add_argument("-p", "--partitions", type=int, required=True)
    p_dac.add_argument("--threads", type=int, default=None)
    p_dac.add_argument("--trace-merge", action="store_true", help="log merge decisions to stderr")
    p_dac.set_defaults(func=cmd_dac)

    p_verify = sub.add_parser("verify", help="diff partitioned vs sequential (and oracle)")
    io_args(p_verify)
    p_verify.add_argument("-p", "--partitions", type=int, default=2)
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="timing/recall table as CSV")
    p_bench.add_argument("inputs", nargs="+", help="FIMI dataset paths")
    p_bench.add_argument("-s", "--minsup", required=True, help="comma-separated grid, e.g. 0.2,0.4")
    p_bench.add_argument("-p", "--partitions", type=int, default=2)
    p_bench.add_argument("--threads", type=int, default=None)
    p_bench.add_argument("-o", "--out", default="-")
    p_bench.set_defaults(func=cmd_bench)

    p_gen = sub.add_parser("gen", help="generate a synthetic FIMI dataset")
    p_gen.add_argument("-o", "--out", default="-")
    p_gen.add_argument("--transactions", type=int, required=True)
    p_gen.add_argument("--items", type=int, required=True)
    p_gen.add_argument("--density", type=float, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FimiParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
