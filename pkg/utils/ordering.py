"""Canonical ordering of automaton states.

States are arbitrary hashable values (strings from files, frozensets from
subset constructions, tuples and small records from products). Python's own
ordering does not cover mixes of these, and set iteration order depends on the
hash seed, so every place that needs a reproducible order sorts with
``order_key``.
"""

from typing import Any, Iterable, List


def order_key(value: Any) -> tuple:
    if isinstance(value, str):
        return (0, value)
    if isinstance(value, bool):
        return (1, int(value))
    if isinstance(value, int):
        return (1, value)
    if isinstance(value, (frozenset, set)):
        return (2, len(value), tuple(sorted(order_key(v) for v in value)))
    if isinstance(value, tuple):
        return (3, tuple(order_key(v) for v in value))
    custom = getattr(value, "order_key", None)
    if callable(custom):
        return (4, type(value).__name__, custom())
    return (5, repr(value))


def sorted_states(values: Iterable[Any]) -> List[Any]:
    return sorted(values, key=order_key)
