"""Shared test data: the 12-transaction reference context and random generators."""

from __future__ import annotations

import random

from fcim import MinsupSpec, TransactionDatabase

# Reference context: 13 items over 12 transactions, defined by per-item tid
# lists and transposed into rows.  At minsup 0.6 (absolute 8) it has exactly
# the five closed patterns in EXPECTED_PATTERNS_12.
ITEM_TIDS = {
    1: list(range(1, 13)),
    3: list(range(1, 13)),
    5: list(range(1, 13)),
    7: list(range(1, 13)),
    9: list(range(1, 13)),
    11: [1, 3, 4, 5, 6, 7, 9, 10, 12],
    12: [2, 8, 11],
    13: list(range(1, 13)),
    15: [1, 2, 3, 4, 5, 6, 7, 8, 9, 12],
    16: [9, 10],
    17: list(range(1, 13)),
    19: [1, 2, 3, 5, 6, 8, 9, 10, 11],
    20: [4, 7, 12],
}

EXPECTED_PATTERNS_12 = (
    ((1, 3, 5, 7, 9, 13, 17), 12, ((),)),
    ((1, 3, 5, 7, 9, 13, 15, 17), 10, ((15,),)),
    ((1, 3, 5, 7, 9, 11, 13, 17), 9, ((11,),)),
    ((1, 3, 5, 7, 9, 13, 17, 19), 9, ((19,),)),
    ((1, 3, 5, 7, 9, 11, 13, 15, 17), 8, ((11, 15),)),
)

# 6-transaction context over items 1..5 (think A..E): rows ACD, BCE, ABCE,
# BE, ABCE, BCE.  Classic closure-structure exercise for the levelwise walk.
CONTEXT6_ROWS = (
    (1, 3, 4),
    (2, 3, 5),
    (1, 2, 3, 5),
    (2, 5),
    (1, 2, 3, 5),
    (2, 3, 5),
)


def sample12_rows() -> list[list[int]]:
    return [
        sorted(item for item, tids in ITEM_TIDS.items() if tid in tids)
        for tid in range(1, 13)
    ]


def sample12_db() -> TransactionDatabase:
    return TransactionDatabase.from_rows(sample12_rows())


def sample12_fimi_text() -> str:
    return "\n".join(" ".join(map(str, row)) for row in sample12_rows()) + "\n"


def context6_db() -> TransactionDatabase:
    return TransactionDatabase.from_rows(CONTEXT6_ROWS)


def random_db(rng: random.Random, n_items: int, n_trans: int, density: float) -> TransactionDatabase:
    """Bernoulli rows, redrawn while empty."""
    rows = []
    for _ in range(n_trans):
        row: list[int] = []
        while not row:
            row = [i for i in range(1, n_items + 1) if rng.random() < density]
        rows.append(row)
    return TransactionDatabase.from_rows(rows)


CORPUS_SEED = 0
CORPUS_SIZE = 220


def build_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE):
    """The random corpus shared by the acceptance suite.

    Alternates sparse (density 0.10-0.30) and dense (0.40-0.80) instances over
    4-10 items and 16-20 transactions with a random relative minsup in
    [0.3, 0.9].  Returns (db, minsup_spec, density, is_sparse) tuples.
    """
    rng = random.Random(seed)
    corpus = []
    for i in range(size):
        is_sparse = i % 2 == 0
        density = rng.uniform(0.10, 0.30) if is_sparse else rng.uniform(0.40, 0.80)
        n_items = rng.randint(4, 10)
        n_trans = rng.randint(16, 20)
        minsup = round(rng.uniform(0.3, 0.9), 2)
        db = random_db(rng, n_items, n_trans, density)
        corpus.append((db, MinsupSpec.of(str(minsup)), density, is_sparse))
    return corpus
