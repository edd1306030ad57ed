"""Closed-pattern containers and the pattern file formats."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .database import Itemset


def format_itemset(items: Itemset) -> str:
    """Space-separated ascending items; the empty itemset prints as ``{}``."""
    return " ".join(map(str, items)) if items else "{}"


def parse_itemset(token: str) -> Itemset:
    token = token.strip()
    if token == "{}":
        return ()
    return tuple(int(t) for t in token.split())


@dataclass(frozen=True)
class ClosedPattern:
    """A closed itemset, its absolute support, and its minimal generators.

    Every generator has the same support as the closed itemset and no
    generator is a proper subset of another one.
    """

    closed: Itemset
    support: int
    generators: tuple[Itemset, ...]


@dataclass(frozen=True)
class PatternSet:
    """Deterministically ordered mining result for one context."""

    patterns: tuple[ClosedPattern, ...]
    context_size: int
    minsup_abs: int


def canonical_patterns(patterns: Iterable[ClosedPattern]) -> tuple[ClosedPattern, ...]:
    """Descending support, then ascending lexicographic closed itemset."""
    return tuple(sorted(patterns, key=lambda p: (-p.support, p.closed)))


def pattern_line(pattern: ClosedPattern) -> str:
    gens = "|".join(format_itemset(g) for g in pattern.generators)
    return f"{format_itemset(pattern.closed)} ; supp={pattern.support} ; gens={gens}"


def to_text(pattern_set: PatternSet, header: Sequence[str] = ()) -> str:
    """Pattern file text: ``#``-prefixed header lines, then one pattern per line."""
    lines = [f"# {entry}" for entry in header]
    lines.extend(pattern_line(p) for p in pattern_set.patterns)
    return "\n".join(lines) + ("\n" if lines else "")


def to_json(pattern_set: PatternSet) -> str:
    """JSON alternative: an array of {closed, support, generators} objects."""
    rows = [
        {
            "closed": list(p.closed),
            "support": p.support,
            "generators": [list(g) for g in p.generators],
        }
        for p in pattern_set.patterns
    ]
    return json.dumps(rows, indent=2) + "\n"


def parse_text(text: str) -> list[ClosedPattern]:
    """Parse pattern-file lines back; header/comment lines are skipped."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        closed_part, supp_part, gens_part = (seg.strip() for seg in line.split(";"))
        if not supp_part.startswith("supp=") or not gens_part.startswith("gens="):
            raise ValueError(f"malformed pattern line: {line!r}")
        closed = parse_itemset(closed_part)
        support = int(supp_part[len("supp=") :])
        generators = tuple(parse_itemset(g) for g in gens_part[len("gens=") :].split("|"))
        out.append(ClosedPattern(closed, support, generators))
    return out
