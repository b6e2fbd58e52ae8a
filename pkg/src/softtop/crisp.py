"""Ordinary (crisp) topologies on small finite sets.

Deliberately written with plain ``frozenset`` algebra and no bit tricks: it is
the independent side of the product-space cross-check for soft topologies.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Collection, Hashable, Iterable


def powerset(points: Iterable[Hashable]) -> list[frozenset]:
    pts = list(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(pts, r) for r in range(len(pts) + 1))]


def is_topology(points: Collection[Hashable], family: Iterable[Collection[Hashable]]) -> bool:
    """Contains the empty set and ``points``; closed under finite unions and intersections."""
    whole = frozenset(points)
    fam = {frozenset(s) for s in family}
    if any(not s <= whole for s in fam):
        return False
    if frozenset() not in fam or whole not in fam:
        return False
    return all(a | b in fam and a & b in fam for a, b in combinations(fam, 2))


def topologies(points: Collection[Hashable]) -> list[frozenset[frozenset]]:
    """All topologies on ``points`` by enumerating every family of proper subsets."""
    whole = frozenset(points)
    middle = [s for s in powerset(points) if s and s != whole]
    found = []
    for r in range(len(middle) + 1):
        for chosen in combinations(middle, r):
            fam = {frozenset(), whole, *chosen}
            if is_topology(whole, fam):
                found.append(frozenset(fam))
    return found


def count_topologies(k: int) -> int:
    return len(topologies(range(k)))
