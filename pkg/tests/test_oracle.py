from __future__ import annotations

import json
import random
from itertools import combinations

import pytest

from fcim import (
    TransactionDatabase,
    build_index,
    compare,
    mine_closed,
    oracle_closed,
    scan_support,
)
from util import EXPECTED_PATTERNS_12, random_db


def as_tuples(pattern_set):
    return tuple((p.closed, p.support, p.generators) for p in pattern_set.patterns)


def test_reference_context(sample12):
    assert as_tuples(oracle_closed(sample12, 8)) == EXPECTED_PATTERNS_12


def test_single_transaction():
    db = TransactionDatabase.from_rows([(7,)])
    assert as_tuples(oracle_closed(db, 1)) == (((7,), 1, ((),)),)


def test_context6(context6):
    assert as_tuples(oracle_closed(context6, 2)) == (
        ((), 6, ((),)),
        ((2, 5), 5, ((2,), (5,))),
        ((3,), 5, ((3,),)),
        ((2, 3, 5), 4, ((2, 3), (3, 5))),
        ((1, 3), 3, ((1,),)),
        ((1, 2, 3, 5), 2, ((1, 2), (1, 5))),
    )


def test_universe_guard():
    db = TransactionDatabase.from_rows([range(1, 26)])
    with pytest.raises(ValueError, match="25 items"):
        oracle_closed(db, 1)


def test_scan_support(sample12):
    assert scan_support(sample12, (15,)) == 10
    assert scan_support(sample12, (11, 19)) == 6
    assert scan_support(sample12, ()) == 12
    assert scan_support(sample12, (99,)) == 0


def test_oracle_patterns_satisfy_closure_invariants():
    rng = random.Random(9)
    for _ in range(20):
        db = random_db(rng, rng.randint(2, 7), rng.randint(2, 12), rng.uniform(0.3, 0.7))
        minsup_abs = rng.randint(1, max(1, db.n_transactions // 2))
        index = build_index(db)
        for pattern in oracle_closed(db, minsup_abs).patterns:
            assert index.closure(pattern.closed) == pattern.closed
            assert pattern.support >= minsup_abs
            assert pattern.generators
            for g in pattern.generators:
                assert set(g) <= set(pattern.closed)
                assert index.closure(g) == pattern.closed
                assert index.support(g) == pattern.support


def test_border_sanity_on_small_instances():
    rng = random.Random(10)
    for _ in range(15):
        n_items = rng.randint(2, 6)
        db = random_db(rng, n_items, rng.randint(3, 10), 0.5)
        minsup_abs = rng.randint(1, db.n_transactions)
        closed = {p.closed for p in oracle_closed(db, minsup_abs).patterns}
        universe = sorted(db.universe)
        frequent = {
            subset
            for size in range(len(universe) + 1)
            for subset in combinations(universe, size)
            if scan_support(db, subset) >= minsup_abs
        }
        maximal = {
            f
            for f in frequent
            if not any(f != g and set(f) <= set(g) for g in frequent)
        }
        # the positive border is closed and reported
        for m in maximal:
            assert m in closed
        # every minimal infrequent itemset has only frequent proper subsets
        for size in range(len(universe) + 1):
            for subset in combinations(universe, size):
                if subset in frequent:
                    continue
                proper = [
                    sub
                    for k in range(len(subset))
                    for sub in combinations(subset, k)
                ]
                if all(s in frequent for s in proper):
                    for s in proper:
                        assert scan_support(db, s) >= minsup_abs


def test_compare_identical_sets(sample12):
    report = compare(oracle_closed(sample12, 8), oracle_closed(sample12, 8))
    assert report.is_match
    assert report.recall == 1.0 and report.precision == 1.0
    assert not report.missing_closed and not report.spurious


def test_compare_missing_closed(sample12):
    full = oracle_closed(sample12, 8)
    trimmed = type(full)(full.patterns[1:], full.context_size, full.minsup_abs)
    report = compare(trimmed, full)
    assert not report.is_match
    assert report.recall == pytest.approx(4 / 5)
    assert report.precision == 1.0
    assert report.missing_closed == (((1, 3, 5, 7, 9, 13, 17), 12),)
    reverse = compare(full, trimmed)
    assert reverse.spurious == (((1, 3, 5, 7, 9, 13, 17), 12),)
    assert reverse.precision == pytest.approx(4 / 5)


def test_compare_support_and_generator_mismatches(sample12):
    full = oracle_closed(sample12, 8)
    pattern = full.patterns[0]
    altered = (type(pattern)(pattern.closed, pattern.support - 1, ((9,),)),) + full.patterns[1:]
    report = compare(type(full)(altered, full.context_size, full.minsup_abs), full)
    assert report.support_mismatches == ((pattern.closed, pattern.support - 1, pattern.support),)
    assert report.generator_mismatches == ((pattern.closed, ((9,),), pattern.generators),)
    assert report.recall == 1.0  # itemsets all present, contents differ
    assert not report.is_match


def test_compare_empty_expected():
    db = TransactionDatabase.from_rows([(1,)])
    empty = oracle_closed(db, 2)
    assert empty.patterns == ()
    report = compare(empty, empty)
    assert report.is_match and report.recall == 1.0 and report.precision == 1.0


def test_report_serialization(sample12):
    full = oracle_closed(sample12, 8)
    trimmed = type(full)(full.patterns[1:], full.context_size, full.minsup_abs)
    report = compare(trimmed, full)
    payload = json.loads(report.to_json())
    assert payload["recall"] == pytest.approx(0.8)
    assert payload["missing_closed"] == [{"itemset": [1, 3, 5, 7, 9, 13, 17], "support": 12}]
    assert payload["match"] is False
    text = report.to_text()
    assert "MISMATCH" in text
    assert "missing: 1 3 5 7 9 13 17 (supp=12)" in text


def test_oracle_agrees_with_miner_spotcheck(context6):
    assert oracle_closed(context6, 3) == mine_closed(context6, 3)
