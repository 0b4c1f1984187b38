"""
Alternating tree automata with lazily computed transitions.
"""

import logging
from collections import deque
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Mapping, Optional, Set, Tuple

from trees import RankedAlphabet, Tree
from utils.errors import AutomatonError
from utils.ordering import sorted_states

from .formula import BOTTOM, Formula, format_formula

logger = logging.getLogger(__name__)

State = Hashable
Transition = Callable[[State, str], Formula]


class Ata:
    """
    Alternating tree automaton (alphabet, initial states, Φ).

    Φ is a function computed on demand and memoized; the state set is
    whatever has been reached so far. Two automata made with ``with_initial``
    share the memo table.
    """

    def __init__(
        self,
        alphabet: RankedAlphabet,
        initial: Iterable[State],
        transition: Transition,
        states: Iterable[State] = (),
        _memo: Optional[Dict[Tuple[State, str], Formula]] = None,
    ):
        self.alphabet = alphabet
        self.initial: Tuple[State, ...] = tuple(sorted_states(set(initial)))
        self.transition = transition
        self._memo: Dict[Tuple[State, str], Formula] = {} if _memo is None else _memo
        self._declared: Set[State] = set(states) | set(self.initial)

    @classmethod
    def from_table(
        cls,
        alphabet: RankedAlphabet,
        initial: Iterable[State],
        table: Mapping[Tuple[State, str], Formula],
        states: Iterable[State] = (),
    ) -> "Ata":
        """Explicit transition table; missing entries are ⊥."""
        table = dict(table)
        declared = set(states) | {x for x, _ in table}

        def transition(state, symbol):
            return table.get((state, symbol), BOTTOM)

        return cls(alphabet, initial, transition, declared)

    def phi(self, state: State, symbol: str) -> Formula:
        key = (state, symbol)
        found = self._memo.get(key)
        if found is not None:
            return found
        arity = self.alphabet.arity(symbol)
        formula = self.transition(state, symbol)
        if formula.max_index > arity:
            raise AutomatonError(
                f"Φ({state}, {symbol}) uses child {formula.max_index} but {symbol} has arity {arity}"
            )
        self._memo[key] = formula
        return formula

    def with_initial(self, initial: Iterable[State]) -> "Ata":
        return Ata(self.alphabet, initial, self.transition, self._declared, self._memo)

    @property
    def materialized(self) -> FrozenSet[State]:
        """States whose transitions have been requested, plus the initial ones."""
        return frozenset({x for x, _ in self._memo} | set(self.initial))

    @property
    def states(self) -> FrozenSet[State]:
        """Every state seen so far: declared, initial, materialized or mentioned in a formula."""
        seen = set(self._declared) | {x for x, _ in self._memo}
        for f in self._memo.values():
            seen |= f.states()
        return frozenset(seen)

    def materialize_all(self, roots: Optional[Iterable[State]] = None) -> FrozenSet[State]:
        """
        Compute Φ for every state reachable from ``roots`` (default: initial).

        Returns:
            The reachable states
        """
        start = list(self.initial if roots is None else roots)
        seen = set(start)
        queue = deque(start)
        while queue:
            state = queue.popleft()
            for symbol, _ in self.alphabet.symbols:
                for nxt in self.phi(state, symbol).states():
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
        logger.debug(f"Materialized {len(seen)} ata states")
        return frozenset(seen)

    def table(self, states: Optional[Iterable[State]] = None) -> Dict[Tuple[State, str], Formula]:
        """Explicit transition table over ``states`` (default: everything reachable)."""
        universe = self.materialize_all() if states is None else states
        return {
            (x, symbol): self.phi(x, symbol)
            for x in universe
            for symbol, _ in self.alphabet.symbols
        }

    def __repr__(self) -> str:
        return f"Ata(initial={len(self.initial)}, materialized={len(self.materialized)})"


def ata_accepts(a: Ata, x: State, t: Tree, memo: Optional[Dict[Tuple[State, Tree], bool]] = None) -> bool:
    """
    Whether ``t`` is in the language of state ``x``.

    Args:
        a: The automaton
        x: State to test
        t: Input tree
        memo: Optional cache shared across calls on the same automaton
    """
    memo = {} if memo is None else memo
    key = (x, t)
    found = memo.get(key)
    if found is not None:
        return found
    children = t.children

    def holds(i: int, y: State) -> bool:
        return ata_accepts(a, y, children[i - 1], memo)

    result = a.phi(x, t.symbol).evaluate(holds)
    memo[key] = result
    return result


def ata_member(a: Ata, t: Tree, memo=None) -> bool:
    """``t`` is in L(a): accepted by some initial state."""
    memo = {} if memo is None else memo
    return any(ata_accepts(a, x, t, memo) for x in a.initial)


def format_ata(a: Ata, states: Optional[Iterable[State]] = None, show_state=str) -> str:
    """Text form of the (materialized) automaton."""
    universe = sorted_states(a.materialize_all() if states is None else states)
    lines = [
        "alphabet: " + ", ".join(f"{n}/{k}" for n, k in a.alphabet.symbols),
        "initial: " + ", ".join(show_state(x) for x in a.initial),
    ]
    for x in universe:
        for symbol, arity in a.alphabet.symbols:
            f = a.phi(x, symbol)
            if f is BOTTOM:
                continue
            lines.append(f"state {show_state(x)}: {symbol}({arity}) -> {format_formula(f, show_state)}")
    return "\n".join(lines) + "\n"
