"""
Traversal bounds of alternating automata.

Bounds range over {1, 2, ...} ∪ {∞}; ∞ is ``math.inf``.
"""

import logging
import math
from typing import Callable, Dict, Hashable, Iterable, Mapping, Optional, Tuple

from utils.errors import AutomatonError
from utils.ordering import sorted_states

from .ata import Ata
from .formula import Formula, has_negation

logger = logging.getLogger(__name__)

INFINITY = math.inf

Bound = float


def solve_bounds(
    variables: Iterable[Hashable],
    rhs: Callable[[Hashable, Mapping[Hashable, Bound]], Bound],
) -> Dict[Hashable, Bound]:
    """
    Least solution of ``v >= max(1, rhs(v, values))`` for monotone right-hand sides.

    Jacobi rounds from 1 everywhere. If |vars| rounds do not settle, variables
    that still grow during |vars| further rounds are set to ∞ and the
    iteration is resumed until it settles.
    """
    names = sorted_states(set(variables))
    values: Dict[Hashable, Bound] = {v: 1 for v in names}

    def round_() -> set:
        new = {v: max(1, rhs(v, values)) for v in names}
        grown = {v for v in names if new[v] > values[v]}
        values.update(new)
        return grown

    n = max(1, len(names))
    for _ in range(n):
        if not round_():
            return values

    pumping = set()
    for _ in range(n):
        pumping |= round_()
    if pumping:
        logger.debug(f"Unbounded variables: {len(pumping)}")
    for v in pumping:
        values[v] = INFINITY
    for _ in range(n + 1):
        if not round_():
            break
    return values


def child_bound(f: Formula, index: int, bounds: Mapping[Hashable, Bound], memo: Dict[Formula, Bound]) -> Bound:
    """Traversal number of child ``index`` under formula ``f``."""
    found = memo.get(f)
    if found is not None:
        return found
    kind = f.kind
    if kind in ("top", "bottom"):
        result = 0
    elif kind in ("atom", "neg"):
        result = bounds[f.args[1]] if f.args[0] == index else 0
    elif kind == "and":
        result = child_bound(f.args[0], index, bounds, memo) + child_bound(f.args[1], index, bounds, memo)
    else:
        result = max(child_bound(f.args[0], index, bounds, memo), child_bound(f.args[1], index, bounds, memo))
    memo[f] = result
    return result


def traversal_bounds(a: Ata, states: Optional[Iterable[Hashable]] = None) -> Dict[Hashable, Bound]:
    """
    Maximal traversal number of every reachable state.

    Args:
        a: Negation-free ata
        states: Universe to solve over (default: reachable from a.initial)

    Returns:
        Map state -> bound (int or math.inf)
    """
    universe = list(a.materialize_all() if states is None else states)
    for x in universe:
        for symbol, _ in a.alphabet.symbols:
            if has_negation(a.phi(x, symbol)):
                raise AutomatonError(f"Φ({x}, {symbol}) has a negated atom; push_negation first")

    def rhs(x, values):
        best = 0
        for symbol, arity in a.alphabet.symbols:
            f = a.phi(x, symbol)
            for i in range(1, arity + 1):
                best = max(best, child_bound(f, i, values, {}))
        return best

    return solve_bounds(universe, rhs)


def traversal_bound(a: Ata, bounds: Optional[Mapping[Hashable, Bound]] = None) -> Bound:
    """Largest bound over the initial states (1 when there are none)."""
    bounds = traversal_bounds(a) if bounds is None else bounds
    return max((bounds[x] for x in a.initial), default=1)


def is_bounded_traversing(a: Ata, b: Bound, bounds: Optional[Mapping[Hashable, Bound]] = None) -> bool:
    return traversal_bound(a, bounds) <= b


def pair_weight(states: Iterable[Hashable], bounds: Mapping[Hashable, Bound]) -> Bound:
    """Summed traversal bound of a set of states."""
    return sum(bounds.get(x, 1) for x in states)
