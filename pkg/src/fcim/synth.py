"""Reproducible synthetic FIMI datasets."""

from __future__ import annotations

import random


def gen_synthetic(n_trans: int, n_items: int, density: float, seed: int) -> str:
    """Bernoulli transactions: each of items 1..n_items joins a row with
    probability ``density``.  Empty draws are redrawn so every transaction
    carries at least one item.  Output is fully determined by the seed.
    """
    if n_trans < 1:
        raise ValueError("n_trans must be >= 1")
    if n_items < 1:
        raise ValueError("n_items must be >= 1")
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    rng = random.Random(seed)
    lines = []
    for _ in range(n_trans):
        row: list[int] = []
        while not row:
            row = [item for item in range(1, n_items + 1) if rng.random() < density]
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"
