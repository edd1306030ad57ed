"""Per-item TID bitsets: support and closure by mask intersection.

Bit i of every mask refers to the indexed database's i-th transaction in
listing order, so masks belonging to one index must not be mixed with
another index's masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping, Optional

from .database import Itemset, TransactionDatabase


@dataclass(frozen=True, eq=False)
class TidIndex:
    """Immutable item -> transaction-bitset map; concurrent reads are safe."""

    n_transactions: int
    per_item: Mapping[int, int]
    tids: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n_transactions) - 1

    def extent(self, items: Itemset, mask: Optional[int] = None) -> int:
        """Bitset of masked transactions containing every item of ``items``."""
        ext = self.full_mask if mask is None else mask
        for item in items:
            tids = self.per_item.get(item)
            if tids is None:
                return 0
            ext &= tids
            if not ext:
                return 0
        return ext

    def support(self, items: Itemset, mask: Optional[int] = None) -> int:
        """Number of masked transactions containing ``items``.

        The empty itemset is contained in every transaction, so its support is
        the popcount of the mask.  Items outside the universe yield 0.
        """
        return self.extent(items, mask).bit_count()

    def closure(self, items: Itemset, mask: Optional[int] = None) -> Optional[Itemset]:
        """All items shared by every masked transaction containing ``items``.

        Returns None when no masked transaction contains ``items``; the
        closure is undefined there and callers must treat the itemset as
        unsupported.
        """
        ext = self.extent(items, mask)
        if not ext:
            return None
        return tuple(sorted(i for i, tids in self.per_item.items() if tids & ext == ext))


def build_index(db: TransactionDatabase) -> TidIndex:
    """Build the index in one pass over the database."""
    per_item: dict[int, int] = {}
    for position, (_tid, row) in enumerate(db.transactions):
        bit = 1 << position
        for item in row:
            per_item[item] = per_item.get(item, 0) | bit
    return TidIndex(
        db.n_transactions,
        MappingProxyType(per_item),
        tuple(tid for tid, _ in db.transactions),
    )


def iter_bits(value: int) -> Iterator[int]:
    """Positions of set bits, ascending."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def dump_tids(index: TidIndex) -> str:
    """Debug dump, one line per item: ``ITEM<TAB>tid tid tid ...``."""
    lines = []
    for item in sorted(index.per_item):
        tids = " ".join(str(index.tids[pos]) for pos in iter_bits(index.per_item[item]))
        lines.append(f"{item}\t{tids}")
    return "\n".join(lines) + ("\n" if lines else "")
