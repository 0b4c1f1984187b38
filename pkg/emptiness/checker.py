"""
Top-down emptiness check for alternating automata, with witnesses.

Works on pairs (X̄, Ȳ) of state sets denoting ⋂⟦X̄⟧ \\ ⋃⟦Ȳ⟧. A pair is first
assumed empty (P); the assumption is checked against every symbol by lazily
enumerating the DNF of the pair's transition formula. When some DNF term is
inhabited, P is restored and the pair moves to N together with a witness.
"""

import logging
import sys
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from alternating.ata import Ata, ata_accepts
from alternating.dnf import EMPTY_PAIR, StateSetPair
from alternating.formula import Formula, dual
from config import CAPS, VERDICTS
from trees import EPS, Tree, print_tree
from utils.errors import WitnessError
from utils.ordering import sorted_states

logger = logging.getLogger(__name__)

# (pair, witness) per child position
Accumulator = Tuple[Tuple[StateSetPair, Tree], ...]
# cons list of formulas still to be put in normal form
Pending = Optional[Tuple[Formula, "Pending"]]

EPS_TREE = Tree(EPS, ())


@dataclass
class EmptinessResult:
    """Outcome of check_empty: ``witness`` is None iff every root is empty."""
    witness: Optional[Tree] = None
    root: Optional[StateSetPair] = None
    explored: List[StateSetPair] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return self.witness is None

    def verdict(self) -> str:
        return format_verdict(self.witness)


def format_verdict(witness: Optional[Tree]) -> str:
    if witness is None:
        return VERDICTS['WELL_TYPED']
    return f"{VERDICTS['ILL_TYPED']} witness={print_tree(witness)}"


class EmptinessChecker:
    """
    Backtracking emptiness search over one ata.

    Attributes:
        positive: P, pairs assumed (or shown) empty; truncated on contradiction
        negative: N, (pair, witness) of pairs shown nonempty; never backtracked
        explored: every pair whose transitions were examined, in order
    """

    def __init__(self, a: Ata):
        self.a = a
        self.positive: List[StateSetPair] = []
        self.negative: List[Tuple[StateSetPair, Tree]] = []
        self.explored: List[StateSetPair] = []
        self._accepts: Dict[Tuple[Hashable, Tree], bool] = {}
        self.reused = 0

    def accepts(self, state: Hashable, t: Tree) -> bool:
        return ata_accepts(self.a, state, t, self._accepts)

    def empty(self, pair: StateSetPair) -> Optional[Tree]:
        """None when ``pair`` denotes ∅ (under the current assumptions), else a witness."""
        if pair.contradictory():
            return None
        for assumed in self.positive:
            if assumed.subset_of(pair):
                return None
        for known, witness in self.negative:
            if pair.subset_of(known):
                return witness

        self.explored.append(pair)
        saved = len(self.positive)
        self.positive.append(pair)
        for symbol, arity in self.a.alphabet.symbols:
            formulas = [self.a.phi(x, symbol) for x in sorted_states(pair.pos)]
            formulas += [dual(self.a.phi(y, symbol)) for y in sorted_states(pair.neg)]
            pending: Pending = None
            for f in reversed(formulas):
                pending = (f, pending)
            start: Accumulator = ((EMPTY_PAIR, EPS_TREE),) * arity
            witness = self.empty_dnf(symbol, pending, start)
            if witness is not None:
                self.validate(pair, witness)
                del self.positive[saved:]
                self.negative.append((pair, witness))
                logger.debug(f"Nonempty {pair} via {symbol}")
                return witness
        return None

    def empty_dnf(self, symbol: str, pending: Pending, acc: Accumulator) -> Optional[Tree]:
        """
        None when the conjunction of ``pending`` has no inhabited DNF term
        extending ``acc``; otherwise a tree rooted at ``symbol``.
        """
        if pending is None:
            return Tree(symbol, tuple(w for _, w in acc))
        f, rest = pending
        kind = f.kind
        if kind == "top":
            return self.empty_dnf(symbol, rest, acc)
        if kind == "bottom":
            return None
        if kind == "or":
            found = self.empty_dnf(symbol, (f.args[0], rest), acc)
            if found is not None:
                return found
            return self.empty_dnf(symbol, (f.args[1], rest), acc)
        if kind == "and":
            return self.empty_dnf(symbol, (f.args[0], (f.args[1], rest)), acc)

        index, state = f.args
        positive = kind == "atom"
        pair, witness = acc[index - 1]
        if state in (pair.pos if positive else pair.neg):
            return self.empty_dnf(symbol, rest, acc)
        extended = pair.add(state, positive)
        if self.accepts(state, witness) == positive:
            self.reused += 1
        else:
            witness = self.empty(extended)
            if witness is None:
                return None
        updated = acc[:index - 1] + ((extended, witness),) + acc[index:]
        return self.empty_dnf(symbol, rest, updated)

    def validate(self, pair: StateSetPair, witness: Tree) -> None:
        """Raise WitnessError unless ``witness`` lies in the denotation of ``pair``."""
        wrong = [x for x in pair.pos if not self.accepts(x, witness)]
        wrong += [y for y in pair.neg if self.accepts(y, witness)]
        if wrong:
            raise WitnessError(f"witness {print_tree(witness)} fails {pair} at {wrong[0]}")

    def coherent(self) -> bool:
        """No pair assumed empty is implied nonempty by a pair in N."""
        return not any(p.subset_of(n) for p in self.positive for n, _ in self.negative)


def check_empty(a: Ata, roots: Optional[Iterable[StateSetPair]] = None) -> EmptinessResult:
    """
    Decide whether every root pair denotes the empty set.

    Args:
        a: Ata, possibly lazy, possibly with negated atoms
        roots: Pairs to test (default: ({X}, ∅) for each initial state)

    Returns:
        EmptinessResult with the first witness found, or none
    """
    if sys.getrecursionlimit() < CAPS['RECURSION_LIMIT']:
        sys.setrecursionlimit(CAPS['RECURSION_LIMIT'])
    checker = EmptinessChecker(a)
    targets = list(roots) if roots is not None else [StateSetPair.of([x]) for x in a.initial]
    for root in targets:
        witness = checker.empty(root)
        if witness is not None:
            logger.info(f"Nonempty after exploring {len(checker.explored)} pairs")
            return EmptinessResult(witness, root, checker.explored)
    logger.info(f"Empty after exploring {len(checker.explored)} pairs")
    return EmptinessResult(None, None, checker.explored)
