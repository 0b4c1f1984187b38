"""Covering a set of state tuples by few Cartesian products."""

from collections import defaultdict
from itertools import product
from typing import FrozenSet, Hashable, Iterable, List, Tuple

from utils.ordering import order_key

Component = Tuple[FrozenSet[Hashable], ...]


def component_key(c: Component) -> tuple:
    return tuple(order_key(s) for s in c)


def cartesian_decompose(tuples: Iterable[Tuple[Hashable, ...]]) -> List[Component]:
    """
    Products of state sets whose union is exactly ``tuples``.

    Greedy: for each column, merge the products that agree on every other
    column; repeat until nothing merges. Never returns more products than
    input tuples.
    """
    current = {tuple(frozenset([q]) for q in t) for t in tuples}
    if not current:
        return []
    width = len(next(iter(current)))
    changed = True
    while changed:
        changed = False
        for j in range(width):
            buckets = defaultdict(set)
            for comp in current:
                buckets[comp[:j] + comp[j + 1:]].add(comp[j])
            merged = set()
            for rest, columns in buckets.items():
                if len(columns) > 1:
                    changed = True
                union = frozenset().union(*columns)
                merged.add(rest[:j] + (union,) + rest[j:])
            current = merged
    return sorted(current, key=component_key)


def expand(components: Iterable[Component]) -> set:
    """Every tuple covered by the products."""
    result = set()
    for comp in components:
        result.update(product(*comp))
    return result
