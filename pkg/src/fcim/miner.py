"""Sequential levelwise miner for frequent closed itemsets and their
minimal generators.

The search walks generators level by level: candidates are built by an
apriori-style join, counted on the TID index, kept only while their support
stays below the minimum support of their immediate subsets (otherwise they
cannot be minimal), and mapped to closed itemsets through the closure
operator.  The empty itemset seeds level 0 and is always a generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .database import Itemset, TransactionDatabase
from .patterns import ClosedPattern, PatternSet, canonical_patterns
from .tidindex import TidIndex, build_index


@dataclass
class GeneratorCandidate:
    """A candidate generator at one level of the search.

    ``est_support`` is the minimum support over the candidate's immediate
    subsets; anti-monotonicity gives ``support <= est_support``, and the
    candidate stays a generator only while the inequality is strict.
    """

    items: Itemset
    support: Optional[int] = None
    est_support: int = 0
    closure: Optional[Itemset] = None


def gen_closure(
    level: list[GeneratorCandidate],
    index: TidIndex,
    mask: int,
    minsup_abs: int,
) -> list[GeneratorCandidate]:
    """Count candidates, drop infrequent and non-minimal ones, attach closures."""
    survivors = []
    for cand in level:
        support = cand.support
        if support is None:
            support = index.support(cand.items, mask)
        if support < minsup_abs or support == cand.est_support:
            continue
        cand.support = support
        cand.closure = index.closure(cand.items, mask)
        survivors.append(cand)
    return survivors


def gen_generator(frequent_k: list[GeneratorCandidate]) -> list[GeneratorCandidate]:
    """Join k-generators sharing a (k-1)-prefix into (k+1)-candidates.

    A candidate is dropped when one of its k-subsets was not retained, or when
    it is contained in the closure of one of them (its support then provably
    ties that subset's, so it cannot be a minimal generator).
    """
    retained = {c.items: c for c in frequent_k}
    closure_sets = {c.items: set(c.closure) for c in frequent_k}
    ordered = sorted(retained)
    out = []
    for i, left in enumerate(ordered):
        for j in range(i + 1, len(ordered)):
            right = ordered[j]
            if left[:-1] != right[:-1]:
                break
            items = left + (right[-1],)
            subsets = list(combinations(items, len(left)))
            if any(s not in retained for s in subsets):
                continue
            if any(set(items) <= closure_sets[s] for s in subsets):
                continue
            est = min(retained[s].support for s in subsets)
            out.append(GeneratorCandidate(items, None, est))
    return out


def mine_closed_masked(index: TidIndex, mask: int, minsup_abs: int) -> PatternSet:
    """Mine the transactions selected by ``mask`` over a shared index.

    Supports and closures are computed within the mask only, so this is what
    per-partition mining uses; with the full mask it is the plain sequential
    miner.
    """
    if minsup_abs < 1:
        raise ValueError("minsup_abs must be >= 1")
    context_size = mask.bit_count()
    supports: dict[Itemset, int] = {}
    generators: dict[Itemset, list[Itemset]] = {}
    if context_size >= minsup_abs:
        closure0 = index.closure((), mask)
        supports[closure0] = context_size
        generators[closure0] = [()]
        level = []
        for item in sorted(index.per_item):
            support = (index.per_item[item] & mask).bit_count()
            if minsup_abs <= support < context_size:
                cand = GeneratorCandidate((item,), support, context_size)
                cand.closure = index.closure(cand.items, mask)
                level.append(cand)
        while level:
            for cand in level:
                known = supports.setdefault(cand.closure, cand.support)
                assert known == cand.support
                generators.setdefault(cand.closure, []).append(cand.items)
            level = gen_closure(gen_generator(level), index, mask, minsup_abs)
    patterns = [
        ClosedPattern(closed, supports[closed], tuple(sorted(generators[closed])))
        for closed in supports
    ]
    return PatternSet(canonical_patterns(patterns), context_size, minsup_abs)


def mine_closed(db: TransactionDatabase, minsup_abs: int) -> PatternSet:
    """All frequent closed itemsets of ``db`` with their minimal generators."""
    index = build_index(db)
    return mine_closed_masked(index, index.full_mask, minsup_abs)
