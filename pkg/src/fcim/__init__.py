"""Frequent closed itemset mining with minimal generators.

A sequential levelwise miner, a partition-and-merge miner with exact bitset
support counting, a brute-force oracle for small contexts, and a CLI for
mining, verification, and benchmarking.
"""

from .database import (
    FimiParseError,
    Itemset,
    MinsupSpec,
    Partition,
    TransactionDatabase,
    absolute_minsup,
    as_itemset,
    parse_fimi,
    partition_db,
    serialize_fimi,
)
from .merge import MergeEntry, MergeResult, find_generators, prune_closure, run_dac, ufcigs_merge
from .miner import GeneratorCandidate, gen_closure, gen_generator, mine_closed, mine_closed_masked
from .oracle import DiffReport, compare, oracle_closed, scan_support
from .patterns import ClosedPattern, PatternSet, format_itemset, parse_text, to_json, to_text
from .synth import gen_synthetic
from .tidindex import TidIndex, build_index, dump_tids

__version__ = "0.1.0"

__all__ = [
    "ClosedPattern",
    "DiffReport",
    "FimiParseError",
    "GeneratorCandidate",
    "Itemset",
    "MergeEntry",
    "MergeResult",
    "MinsupSpec",
    "Partition",
    "PatternSet",
    "TidIndex",
    "TransactionDatabase",
    "absolute_minsup",
    "as_itemset",
    "build_index",
    "compare",
    "dump_tids",
    "find_generators",
    "format_itemset",
    "gen_closure",
    "gen_generator",
    "gen_synthetic",
    "mine_closed",
    "mine_closed_masked",
    "oracle_closed",
    "parse_fimi",
    "parse_text",
    "partition_db",
    "prune_closure",
    "run_dac",
    "scan_support",
    "serialize_fimi",
    "to_json",
    "to_text",
    "ufcigs_merge",
]
