"""
Cheap emptiness approximation run before the top-down check.

A state is trivially empty when each of its transition formulas is, and
trivially full when each is trivially co-empty. Both sets are computed as
greatest fixpoints; formulas are then rewritten with ⊥ and ⊤ in their place
and simplified again by the smart constructors.
"""

import logging
from typing import Dict, FrozenSet, Hashable, Set, Tuple

from alternating.ata import Ata
from alternating.formula import BOTTOM, TOP, Formula, conj, disj
from utils.ordering import sorted_states

logger = logging.getLogger(__name__)


def _trivially_empty(f: Formula, empty: Set[Hashable], full: Set[Hashable]) -> bool:
    kind = f.kind
    if kind == "top":
        return False
    if kind == "bottom":
        return True
    if kind == "and":
        return any(_trivially_empty(g, empty, full) for g in f.args)
    if kind == "or":
        return all(_trivially_empty(g, empty, full) for g in f.args)
    _, state = f.args
    return state in empty if kind == "atom" else state in full


def _trivially_full(f: Formula, empty: Set[Hashable], full: Set[Hashable]) -> bool:
    kind = f.kind
    if kind == "top":
        return True
    if kind == "bottom":
        return False
    if kind == "and":
        return all(_trivially_full(g, empty, full) for g in f.args)
    if kind == "or":
        return any(_trivially_full(g, empty, full) for g in f.args)
    _, state = f.args
    return state in full if kind == "atom" else state in empty


def trivial_states(a: Ata, states) -> Tuple[FrozenSet[Hashable], FrozenSet[Hashable]]:
    """
    Greatest sets (E, F) with X ∈ E iff every Φ(X, ·) is trivially empty
    and X ∈ F iff every Φ(X, ·) is trivially full, relative to (E, F).
    """
    symbols = [s for s, _ in a.alphabet.symbols]
    empty = set(states)
    full = set(states)
    changed = True
    while changed:
        changed = False
        for x in sorted_states(states):
            if x in empty and not all(_trivially_empty(a.phi(x, s), empty, full) for s in symbols):
                empty.discard(x)
                changed = True
            if x in full and not all(_trivially_full(a.phi(x, s), empty, full) for s in symbols):
                full.discard(x)
                changed = True
    return frozenset(empty), frozenset(full)


def _simplify(f: Formula, empty, full, memo: Dict[Formula, Formula]) -> Formula:
    found = memo.get(f)
    if found is not None:
        return found
    if _trivially_empty(f, empty, full):
        result = BOTTOM
    elif _trivially_full(f, empty, full):
        result = TOP
    elif f.kind == "and":
        result = conj(*(_simplify(g, empty, full, memo) for g in f.args))
    elif f.kind == "or":
        result = disj(*(_simplify(g, empty, full, memo) for g in f.args))
    else:
        result = f
    memo[f] = result
    return result


def preprocess(a: Ata) -> Ata:
    """
    Equivalent ata with trivially empty subformulas replaced by ⊥ and
    trivially co-empty ones by ⊤.

    Every state reachable from the initial states keeps its language.
    """
    universe = a.materialize_all()
    empty, full = trivial_states(a, universe)
    memo: Dict[Formula, Formula] = {}
    table = {
        (x, symbol): _simplify(a.phi(x, symbol), empty, full, memo)
        for x in universe
        for symbol, _ in a.alphabet.symbols
    }
    logger.debug(
        f"Preprocess: {len(empty)} trivially empty, {len(full)} trivially full "
        f"of {len(universe)} states"
    )
    return Ata.from_table(a.alphabet, a.initial, table, universe)
