"""Merging of partial mining results from disjoint partitions.

The merge walks the closed itemsets and then the generators of both sides.
An itemset listed on both sides gets the sum of its two local supports
(exact, because the partitions are tid-disjoint); anything else is recounted
on the shared TID index and kept only if it reaches the node's absolute
threshold.  A closure-repair pass then removes entries that have an
equal-support proper superset, and the surviving closed candidates get
generators reassigned from the pruned pool.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .database import Itemset, MinsupSpec, TransactionDatabase, partition_db
from .miner import mine_closed, mine_closed_masked
from .patterns import ClosedPattern, PatternSet, canonical_patterns, format_itemset
from .tidindex import TidIndex, build_index

TraceFn = Callable[[str], None]


@dataclass(frozen=True)
class MergeEntry:
    """One merged itemset with its exact support over the merge mask.

    ``origin`` records where the itemset was listed locally (subset of
    {"closed-a", "closed-b", "gen-a", "gen-b"}); ``local_generators`` carries
    the generator lists of its origin patterns for later reassignment.
    """

    items: Itemset
    support: int
    origin: frozenset[str]
    support_source: str  # "summed" or "bitset"
    local_generators: tuple[Itemset, ...]


@dataclass(frozen=True)
class MergeResult:
    entries: tuple[MergeEntry, ...]
    mask: int
    minsup_abs: int


def ufcigs_merge(
    a: PatternSet,
    b: PatternSet,
    index: TidIndex,
    mask: int,
    minsup_abs: int,
    trace: Optional[TraceFn] = None,
) -> MergeResult:
    """Merge two partial results mined over disjoint tid ranges covering ``mask``.

    Closed itemsets of each side, then generators of each side, are settled
    exactly once: summed supports when the other side also lists the itemset,
    a bitset recount thresholded against ``minsup_abs`` otherwise.  Summed
    supports always reach the node threshold because both local thresholds
    round up.  Merging a result with itself violates the disjointness
    precondition and is rejected by the mask check.
    """
    if a.context_size + b.context_size != mask.bit_count():
        raise ValueError("mask does not cover exactly the two merged partitions")

    closed_a = {p.closed: p for p in a.patterns}
    closed_b = {p.closed: p for p in b.patterns}
    gen_a = {g: p for p in a.patterns for g in p.generators}
    gen_b = {g: p for p in b.patterns for g in p.generators}

    emitted: dict[Itemset, MergeEntry] = {}
    decided: set[Itemset] = set()

    def origin_of(items: Itemset) -> frozenset[str]:
        flags = set()
        if items in closed_a:
            flags.add("closed-a")
        if items in closed_b:
            flags.add("closed-b")
        if items in gen_a:
            flags.add("gen-a")
        if items in gen_b:
            flags.add("gen-b")
        return frozenset(flags)

    def carried_generators(items: Itemset) -> tuple[Itemset, ...]:
        gens: set[Itemset] = set()
        if items in closed_a:
            gens.update(closed_a[items].generators)
        if items in closed_b:
            gens.update(closed_b[items].generators)
        if items in gen_a or items in gen_b:
            gens.add(items)
        return tuple(sorted(gens))

    def settle(items, own_support, other_closed, other_gens):
        if items in decided:
            return
        decided.add(items)
        if items in other_closed or items in other_gens:
            other = (other_closed.get(items) or other_gens[items]).support
            total = own_support + other
            if trace:
                trace(f"{format_itemset(items)} ; decision=summed ; supp={own_support}+{other}→{total}")
            emitted[items] = MergeEntry(items, total, origin_of(items), "summed", carried_generators(items))
        else:
            support = index.support(items, mask)
            if support >= minsup_abs:
                if trace:
                    trace(f"{format_itemset(items)} ; decision=bitset-accept ; supp={support}")
                emitted[items] = MergeEntry(items, support, origin_of(items), "bitset", carried_generators(items))
            elif trace:
                trace(f"{format_itemset(items)} ; decision=bitset-reject ; supp={support}")

    for pattern in a.patterns:  # closed itemsets of A
        settle(pattern.closed, pattern.support, closed_b, gen_b)
    for pattern in b.patterns:  # closed itemsets of B
        settle(pattern.closed, pattern.support, closed_a, gen_a)
    for pattern in a.patterns:  # generators of A not handled as closed anywhere
        for g in pattern.generators:
            if g in closed_a or g in closed_b:
                continue
            settle(g, pattern.support, closed_b, gen_b)
    for pattern in b.patterns:  # generators of B, symmetric
        for g in pattern.generators:
            if g in closed_a or g in closed_b:
                continue
            settle(g, pattern.support, closed_a, gen_a)

    entries = tuple(sorted(emitted.values(), key=lambda e: (-e.support, e.items)))
    return MergeResult(entries, mask, minsup_abs)


def prune_closure(result: MergeResult) -> tuple[list[MergeEntry], list[MergeEntry]]:
    """Split entries into (kept, removed).

    An entry is removed exactly when some other entry is a proper superset
    with equal support; removed entries keep their supports because they feed
    the generator reassignment.
    """
    by_support: dict[int, list[MergeEntry]] = {}
    for entry in result.entries:
        by_support.setdefault(entry.support, []).append(entry)
    kept, removed = [], []
    for entry in result.entries:
        mine = set(entry.items)
        if any(mine < set(peer.items) for peer in by_support[entry.support]):
            removed.append(entry)
        else:
            kept.append(entry)
    return kept, removed


def _minimal(itemsets: Sequence[Itemset]) -> list[Itemset]:
    """Inclusion-minimal elements, deduplicated, lexicographically sorted."""
    unique = sorted(set(itemsets), key=lambda x: (len(x), x))
    out: list[Itemset] = []
    for cand in unique:
        cand_set = set(cand)
        if not any(set(prev) < cand_set for prev in out):
            out.append(cand)
    return sorted(out)


def _union_hits(
    seeds: list[Itemset],
    target: int,
    limit: Itemset,
    index: TidIndex,
    mask: int,
) -> list[Itemset]:
    """Unions of pool elements whose support hits ``target``, found levelwise.

    Only unions with support above the target are extended: growing a union
    can never raise its support back up, so lower branches are dead.
    """
    seen = set(seeds)
    frontier = seeds
    while frontier:
        hits = []
        next_frontier = []
        for union in frontier:
            union_set = set(union)
            for seed in seeds:
                grown = tuple(sorted(union_set | set(seed)))
                if grown == union or grown in seen or grown == limit:
                    continue
                seen.add(grown)
                support = index.support(grown, mask)
                if support == target:
                    hits.append(grown)
                elif support > target:
                    next_frontier.append(grown)
        if hits:
            return hits
        frontier = next_frontier
    return []


def find_generators(
    kept: list[MergeEntry],
    removed: list[MergeEntry],
    index: TidIndex,
    mask: int,
    minsup_abs: int,
) -> PatternSet:
    """Assign generators to the surviving closed candidates.

    The candidate pool is every removed entry plus the local generators
    carried on kept and removed entries, with supports re-counted over the
    mask.  For a candidate C the generators are the inclusion-minimal pool
    subsets of C having C's support; when no single pool element fits, unions
    of pool elements are tried level by level.  A candidate with no generator
    in reach is its own generator.
    """
    pool: dict[Itemset, int] = {}
    for entry in list(kept) + list(removed):
        for g in entry.local_generators:
            if g not in pool:
                pool[g] = index.support(g, mask)
    for entry in removed:
        if entry.items not in pool:
            pool[entry.items] = index.support(entry.items, mask)

    patterns = []
    for entry in kept:
        target = entry.support
        closed_set = set(entry.items)
        subsets = [g for g in sorted(pool) if set(g) < closed_set]
        hits = [g for g in subsets if pool[g] == target]
        if not hits:
            seeds = [g for g in subsets if pool[g] > target]
            hits = _union_hits(seeds, target, entry.items, index, mask)
        gens = _minimal(hits) if hits else [entry.items]
        patterns.append(ClosedPattern(entry.items, target, tuple(gens)))
    return PatternSet(canonical_patterns(patterns), mask.bit_count(), minsup_abs)


def _wrap_for_next_merge(result: MergeResult, index: TidIndex) -> PatternSet:
    """Re-wrap a merge result so it can feed the next merge level.

    Every entry acts as a closed itemset.  Carried generators survive only
    when their support over this node's mask equals the entry's support,
    which keeps summed supports at the parent exact; an entry with no
    surviving carried generator stands in for itself.
    """
    patterns = []
    for entry in result.entries:
        gens = [
            g
            for g in entry.local_generators
            if g != entry.items and index.support(g, result.mask) == entry.support
        ]
        gens = _minimal(gens) if gens else [entry.items]
        patterns.append(ClosedPattern(entry.items, entry.support, tuple(gens)))
    return PatternSet(canonical_patterns(patterns), result.mask.bit_count(), result.minsup_abs)


def run_dac(
    db: TransactionDatabase,
    n_partitions: int,
    minsup: Union[str, float, MinsupSpec],
    threads: Optional[int] = None,
    trace: Optional[TraceFn] = None,
) -> PatternSet:
    """Partitioned mining: split, mine each block, fold the partial results.

    Each partition is mined at its own rounded-up threshold over a shared
    full-context index; results are merged pairwise up a balanced binary tree
    whose node thresholds follow the node's transaction count.  Closure
    repair and generator reassignment run once, at the root.  With one
    partition this is exactly the sequential miner, and an empty database
    yields an empty result.
    """
    minsup = MinsupSpec.of(minsup)
    if db.n_transactions == 0:
        return PatternSet((), 0, 1)
    if n_partitions == 1:
        return mine_closed(db, minsup.absolute(db.n_transactions))
    parts = partition_db(db, n_partitions)
    index = build_index(db)

    masks = []
    offset = 0
    for part in parts:
        size = part.database_view.n_transactions
        masks.append(((1 << size) - 1) << offset)
        offset += size
    thresholds = [minsup.absolute(mask.bit_count()) for mask in masks]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        leaves = list(
            pool.map(lambda args: mine_closed_masked(index, args[0], args[1]), zip(masks, thresholds))
        )

    nodes: list[tuple[PatternSet, int]] = list(zip(leaves, masks))
    while True:
        merged = []
        for i in range(0, len(nodes) - 1, 2):
            (left, left_mask), (right, right_mask) = nodes[i], nodes[i + 1]
            node_mask = left_mask | right_mask
            node_abs = minsup.absolute(node_mask.bit_count())
            merged.append(ufcigs_merge(left, right, index, node_mask, node_abs, trace))
        leftover = [nodes[-1]] if len(nodes) % 2 else []
        if len(merged) == 1 and not leftover:
            final = merged[0]
            break
        nodes = [(_wrap_for_next_merge(res, index), res.mask) for res in merged] + leftover

    kept, removed = prune_closure(final)
    return find_generators(kept, removed, index, final.mask, final.minsup_abs)
