"""Timing and recall comparison between the sequential and partitioned miners."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .database import MinsupSpec, TransactionDatabase
from .merge import run_dac
from .miner import mine_closed

CSV_HEADER = ["dataset", "minsup", "mode", "partitions", "wall_ms", "n_closed", "recall"]


@dataclass(frozen=True)
class BenchRecord:
    dataset: str
    minsup: str
    mode: str  # "sequential" or "dac"
    partitions: int
    wall_ms: float
    n_closed: int
    recall: Optional[float]  # dac rows only: closed-set recall vs sequential


def bench_database(
    name: str,
    db: TransactionDatabase,
    minsup_values: Sequence[str],
    partitions: int,
    threads: Optional[int] = None,
) -> list[BenchRecord]:
    """Two rows per threshold; wall time covers mining and merging, not parsing."""
    if db.n_transactions == 0:
        raise ValueError(f"cannot bench empty database {name!r}")
    records = []
    for raw in minsup_values:
        spec = MinsupSpec.of(raw)
        started = time.perf_counter()
        sequential = mine_closed(db, spec.absolute(db.n_transactions))
        sequential_ms = (time.perf_counter() - started) * 1000.0

        started = time.perf_counter()
        dac = run_dac(db, partitions, spec, threads=threads)
        dac_ms = (time.perf_counter() - started) * 1000.0

        sequential_closed = {p.closed for p in sequential.patterns}
        dac_closed = {p.closed for p in dac.patterns}
        recall = (
            1.0
            if not sequential_closed
            else len(dac_closed & sequential_closed) / len(sequential_closed)
        )
        records.append(
            BenchRecord(name, raw, "sequential", 1, sequential_ms, len(sequential.patterns), None)
        )
        records.append(BenchRecord(name, raw, "dac", partitions, dac_ms, len(dac.patterns), recall))
    return records


def write_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            [
                r.dataset,
                r.minsup,
                r.mode,
                r.partitions,
                f"{r.wall_ms:.3f}",
                r.n_closed,
                "" if r.recall is None else f"{r.recall:.4f}",
            ]
        )
    return buf.getvalue()
