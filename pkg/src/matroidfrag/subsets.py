"""Deterministic subset enumeration shared by the certification code.

Everything that searches for counterexamples walks subsets in the same
order: by size, then lexicographically on the sorted label tuple.  The
first failure found under this order is the minimal witness reported to
the caller.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def subsets_by_size(labels: Iterable[str], *, min_size: int = 0) -> Iterator[frozenset[str]]:
    items = sorted(labels)
    for r in range(min_size, len(items) + 1):
        for combo in combinations(items, r):
            yield frozenset(combo)


def partitions_of(labels: Iterable[str]) -> Iterator[tuple[frozenset[str], frozenset[str]]]:
    """All ordered two-colourings (C, D) of the labels, C enumerated
    by size then lexicographically."""
    whole = frozenset(labels)
    for c in subsets_by_size(whole):
        yield c, whole - c
