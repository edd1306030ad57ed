"""Brute-force reference implementation for small contexts, plus result diffing."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .database import Itemset, TransactionDatabase
from .patterns import ClosedPattern, PatternSet, canonical_patterns, format_itemset

# Hard safety limit for the exponential enumeration; not configurable.
MAX_ORACLE_ITEMS = 24


def scan_support(db: TransactionDatabase, items: Itemset) -> int:
    """Support by direct transaction scan; the independent cross-check."""
    wanted = set(items)
    return sum(1 for _, row in db.transactions if wanted.issubset(row))


def oracle_closed(db: TransactionDatabase, minsup_abs: int) -> PatternSet:
    """Closed itemsets with minimal generators by full powerset enumeration.

    Every itemset's support comes from a superset-sum over the 2^|universe|
    table; an itemset is closed when no one-item extension keeps its support,
    and a subset is a minimal generator when it has the closed set's support
    while all of its immediate subsets exceed it.
    """
    if minsup_abs < 1:
        raise ValueError("minsup_abs must be >= 1")
    items = sorted(db.universe)
    width = len(items)
    if width > MAX_ORACLE_ITEMS:
        raise ValueError(f"universe of {width} items exceeds the oracle limit of {MAX_ORACLE_ITEMS}")
    size = 1 << width
    position = {item: i for i, item in enumerate(items)}

    counts = [0] * size
    for _, row in db.transactions:
        row_mask = 0
        for item in row:
            row_mask |= 1 << position[item]
        counts[row_mask] += 1
    for i in range(width):
        bit = 1 << i
        for s in range(size):
            if not s & bit:
                counts[s] += counts[s | bit]

    def to_items(mask: int) -> Itemset:
        return tuple(items[i] for i in range(width) if mask & (1 << i))

    patterns = []
    for s in range(size):
        support = counts[s]
        if support < minsup_abs:
            continue
        if any(counts[s | (1 << i)] == support for i in range(width) if not s & (1 << i)):
            continue
        gens = []
        sub = s
        while True:
            if counts[sub] == support and all(
                counts[sub ^ (1 << i)] > support for i in range(width) if sub & (1 << i)
            ):
                gens.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & s
        patterns.append(ClosedPattern(to_items(s), support, tuple(sorted(to_items(g) for g in gens))))
    return PatternSet(canonical_patterns(patterns), db.n_transactions, minsup_abs)


@dataclass(frozen=True)
class DiffReport:
    """Field-by-field difference between two pattern sets over one context."""

    missing_closed: tuple[tuple[Itemset, int], ...]
    spurious: tuple[tuple[Itemset, int], ...]
    support_mismatches: tuple[tuple[Itemset, int, int], ...]  # (itemset, got, expected)
    generator_mismatches: tuple[tuple[Itemset, tuple[Itemset, ...], tuple[Itemset, ...]], ...]
    recall: float
    precision: float

    @property
    def is_match(self) -> bool:
        return (
            not self.missing_closed
            and not self.spurious
            and not self.support_mismatches
            and not self.generator_mismatches
            and self.recall == 1.0
            and self.precision == 1.0
        )

    def to_json_dict(self) -> dict:
        return {
            "missing_closed": [{"itemset": list(i), "support": s} for i, s in self.missing_closed],
            "spurious": [{"itemset": list(i), "support": s} for i, s in self.spurious],
            "support_mismatches": [
                {"itemset": list(i), "got": g, "expected": e} for i, g, e in self.support_mismatches
            ],
            "generator_mismatches": [
                {
                    "closed": list(c),
                    "got": [list(g) for g in got],
                    "expected": [list(g) for g in exp],
                }
                for c, got, exp in self.generator_mismatches
            ],
            "recall": self.recall,
            "precision": self.precision,
            "match": self.is_match,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"recall={self.recall:.4f} precision={self.precision:.4f} "
            f"-> {'MATCH' if self.is_match else 'MISMATCH'}"
        ]
        for items, support in self.missing_closed:
            lines.append(f"  missing: {format_itemset(items)} (supp={support})")
        for items, support in self.spurious:
            lines.append(f"  spurious: {format_itemset(items)} (supp={support})")
        for items, got, expected in self.support_mismatches:
            lines.append(f"  support: {format_itemset(items)} got={got} expected={expected}")
        for closed, got, expected in self.generator_mismatches:
            got_s = "|".join(format_itemset(g) for g in got)
            exp_s = "|".join(format_itemset(g) for g in expected)
            lines.append(f"  generators: {format_itemset(closed)} got={got_s} expected={exp_s}")
        return "\n".join(lines) + "\n"


def compare(got: PatternSet, expected: PatternSet) -> DiffReport:
    """Diff two pattern sets mined over the same context and threshold."""
    got_map = {p.closed: p for p in got.patterns}
    expected_map = {p.closed: p for p in expected.patterns}

    def ordered(mapping):
        return sorted(mapping, key=lambda c: (-mapping[c].support, c))

    missing = tuple(
        (c, expected_map[c].support) for c in ordered(expected_map) if c not in got_map
    )
    spurious = tuple((c, got_map[c].support) for c in ordered(got_map) if c not in expected_map)
    common = [c for c in ordered(expected_map) if c in got_map]
    support_mismatches = tuple(
        (c, got_map[c].support, expected_map[c].support)
        for c in common
        if got_map[c].support != expected_map[c].support
    )
    generator_mismatches = tuple(
        (c, got_map[c].generators, expected_map[c].generators)
        for c in common
        if got_map[c].generators != expected_map[c].generators
    )
    recall = 1.0 if not expected_map else len(common) / len(expected_map)
    precision = 1.0 if not got_map else len(common) / len(got_map)
    return DiffReport(missing, spurious, support_mismatches, generator_mismatches, recall, precision)
