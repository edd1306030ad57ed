"""Transaction databases: FIMI parsing, itemset algebra, thresholds, partitioning."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

# Canonical itemset form: strictly ascending tuple of item ids, no duplicates.
# The empty tuple is a valid itemset.
Itemset = tuple[int, ...]


def as_itemset(values: Iterable[int]) -> Itemset:
    """Canonicalize an iterable of item ids into an Itemset."""
    out = tuple(sorted({int(v) for v in values}))
    if out and out[0] < 0:
        raise ValueError("item ids must be non-negative")
    return out


class FimiParseError(ValueError):
    """Malformed FIMI input. ``line_number`` is 1-based over physical lines."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class TransactionDatabase:
    """Ordered (tid, items) pairs over the universe of items that appear.

    Immutable after construction; safe to share across worker threads.
    """

    transactions: tuple[tuple[int, Itemset], ...]
    universe: frozenset[int]

    def __post_init__(self) -> None:
        prev_tid = 0
        seen: set[int] = set()
        for tid, items in self.transactions:
            if tid <= prev_tid:
                raise ValueError(f"tids must be strictly increasing, got {tid} after {prev_tid}")
            prev_tid = tid
            if any(items[i] >= items[i + 1] for i in range(len(items) - 1)):
                raise ValueError(f"transaction {tid} items are not strictly ascending")
            seen.update(items)
        if seen != set(self.universe):
            raise ValueError("universe must be exactly the set of items that appear")

    @property
    def n_transactions(self) -> int:
        return len(self.transactions)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], first_tid: int = 1) -> "TransactionDatabase":
        """Build a database from item rows, assigning consecutive tids."""
        pairs = []
        universe: set[int] = set()
        for offset, row in enumerate(rows):
            items = as_itemset(row)
            pairs.append((first_tid + offset, items))
            universe.update(items)
        return cls(tuple(pairs), frozenset(universe))


def parse_fimi(data: Union[str, bytes]) -> TransactionDatabase:
    """Parse FIMI text: one transaction per line, whitespace-separated integers.

    Line k of the non-empty lines becomes the transaction with tid k.  Empty
    lines are skipped and duplicate items within a line collapse.  Empty input
    is a legal empty database.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    pairs = []
    universe: set[int] = set()
    tid = 0
    for lineno, line in enumerate(data.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        items = set()
        for token in tokens:
            if not (token.isascii() and token.isdigit()):
                raise FimiParseError(f"invalid item token {token!r}", lineno)
            items.add(int(token))
        tid += 1
        row = tuple(sorted(items))
        pairs.append((tid, row))
        universe.update(row)
    return TransactionDatabase(tuple(pairs), frozenset(universe))


def serialize_fimi(db: TransactionDatabase) -> str:
    """Canonical FIMI text: items ascending, single spaces, one LF per line."""
    lines = [" ".join(map(str, items)) for _, items in db.transactions]
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class MinsupSpec:
    """Relative minimum-support threshold in (0, 1].

    Stored as an exact fraction so absolute thresholds never pick up binary
    float artifacts (0.07 of 100 transactions is 7, not 8).
    """

    relative: Fraction

    @classmethod
    def of(cls, value: Union[str, float, int, Fraction, "MinsupSpec"]) -> "MinsupSpec":
        if isinstance(value, MinsupSpec):
            return value
        if isinstance(value, float):
            value = repr(value)  # shortest decimal form, parsed exactly below
        relative = Fraction(value)
        if not 0 < relative <= 1:
            raise ValueError(f"minsup must be in (0, 1], got {value}")
        return cls(relative)

    def absolute(self, n_transactions: int) -> int:
        """Absolute count threshold for a context of ``n_transactions``."""
        if n_transactions < 1:
            raise ValueError("context must contain at least one transaction")
        return math.ceil(self.relative * n_transactions)


def absolute_minsup(minsup: Union[str, float, Fraction, MinsupSpec], n_transactions: int) -> int:
    """ceiling(relative * n); always at least 1."""
    return MinsupSpec.of(minsup).absolute(n_transactions)


@dataclass(frozen=True)
class Partition:
    """One contiguous block of a database, keeping the original tids."""

    index: int
    tid_range: tuple[int, int]
    database_view: TransactionDatabase


def partition_db(db: TransactionDatabase, n: int) -> list[Partition]:
    """Split into n contiguous blocks in tid order.

    Blocks are as equal as possible: the first (n_transactions mod n) blocks
    take one extra transaction, so sizes differ by at most 1.
    """
    if n < 1 or n > db.n_transactions:
        raise ValueError(f"partition count must be in [1, {db.n_transactions}], got {n}")
    base, extra = divmod(db.n_transactions, n)
    parts = []
    start = 0
    for index in range(n):
        size = base + (1 if index < extra else 0)
        chunk = db.transactions[start : start + size]
        view = TransactionDatabase(chunk, frozenset(i for _, row in chunk for i in row))
        parts.append(Partition(index, (chunk[0][0], chunk[-1][0]), view))
        start += size
    return parts
