"""Intersection, negation elimination and determinization of alternating automata."""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Hashable, Iterable, Optional, Tuple

from automata.bta import Dbta, Rule
from config import CAPS
from utils.errors import AlphabetError, AutomatonError, CapExceeded
from utils.ordering import order_key, sorted_states

from .ata import Ata
from .formula import Formula, atom, conj, dual, has_negation, map_states, rewrite_atoms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tagged:
    """State ``state`` of operand ``side`` (0 = left, 1 = right) of an intersection."""
    side: int
    state: Hashable

    def order_key(self) -> tuple:
        return (self.side, order_key(self.state))

    def __str__(self) -> str:
        return f"{'LR'[self.side]}:{self.state}"


@dataclass(frozen=True)
class Product:
    """Initial state of an intersection: both components at once."""
    left: Hashable
    right: Hashable

    def order_key(self) -> tuple:
        return (order_key(self.left), order_key(self.right))

    def __str__(self) -> str:
        return f"<{self.left}&{self.right}>"


@dataclass(frozen=True)
class Negated:
    """Dual state accepting exactly the trees ``state`` rejects."""
    state: Hashable

    def order_key(self) -> tuple:
        return order_key(self.state)

    def __str__(self) -> str:
        return f"!{self.state}"


def negate(state: Hashable) -> Hashable:
    if isinstance(state, Negated):
        return state.state
    return Negated(state)


def intersect(a: Ata, b: Ata) -> Ata:
    """
    Ata for L(a) ∩ L(b).

    States are the tagged states of both operands plus one product state per
    pair of initial states; the product conjoins the two transitions.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetError("cannot intersect automata over different alphabets")
    operands = (a, b)

    def tag(side):
        return lambda x: Tagged(side, x)

    def transition(state, symbol) -> Formula:
        if isinstance(state, Product):
            return conj(
                transition(Tagged(0, state.left), symbol),
                transition(Tagged(1, state.right), symbol),
            )
        return map_states(operands[state.side].phi(state.state, symbol), tag(state.side))

    initial = [Product(x, y) for x in a.initial for y in b.initial]
    return Ata(a.alphabet, initial, transition)


def push_negation(a: Ata) -> Ata:
    """
    Equivalent ata without negated atoms.

    Adds a dual state ``Negated(X)`` for each state X, with transitions the
    De Morgan dual of X's; ``~d i X`` becomes ``d i Negated(X)``.
    """

    def positive(f: Formula) -> Formula:
        return rewrite_atoms(f, lambda i, x, pos: atom(i, x if pos else negate(x)))

    def transition(state, symbol) -> Formula:
        if isinstance(state, Negated):
            return positive(dual(a.phi(state.state, symbol)))
        return positive(a.phi(state, symbol))

    return Ata(a.alphabet, a.initial, transition)


def determinize_ata(a: Ata, states: Optional[Iterable[Hashable]] = None) -> Tuple[Dbta, Dict[FrozenSet, FrozenSet]]:
    """
    Powerset construction from a negation-free ata to an equivalent dbta.

    A subset r is reached at ``symbol(r1..rn)`` when it holds exactly the
    states X whose Φ(X, symbol) is true under ``d i Y`` := Y ∈ r_i. r is final
    when it meets the initial states.

    Args:
        a: Negation-free ata
        states: State universe (default: everything reachable from a.initial)

    Returns:
        (dbta over frozensets of ata states, identity map on those states)

    Raises:
        AutomatonError: when a formula contains a negated atom
        CapExceeded: past CAPS['MAX_DETERMINIZED_STATES'] subsets
    """
    universe = sorted_states(a.materialize_all() if states is None else states)
    for x in universe:
        for symbol, _ in a.alphabet.symbols:
            if has_negation(a.phi(x, symbol)):
                raise AutomatonError(f"Φ({x}, {symbol}) has a negated atom; push_negation first")

    limit = CAPS['MAX_DETERMINIZED_STATES']
    known = set()
    table: Dict[Tuple[str, Tuple[FrozenSet, ...]], FrozenSet] = {}
    changed = True
    while changed:
        changed = False
        ordered = sorted_states(known)
        for symbol, arity in a.alphabet.symbols:
            for children in product(ordered, repeat=arity):
                key = (symbol, children)
                if key in table:
                    continue
                holds = lambda i, y, children=children: y in children[i - 1]
                target = frozenset(x for x in universe if a.phi(x, symbol).evaluate(holds))
                table[key] = target
                if target not in known:
                    known.add(target)
                    changed = True
                    if len(known) > limit:
                        raise CapExceeded("MAX_DETERMINIZED_STATES", limit)

    initial = set(a.initial)
    final = [r for r in known if r & initial]
    rules = [Rule(target, symbol, children) for (symbol, children), target in table.items()]
    logger.info(f"Determinized ata with {len(universe)} states into {len(known)} subsets")
    return Dbta(a.alphabet, known, final, rules), {r: r for r in known}
