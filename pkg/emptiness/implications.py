"""
Horn-clause characterization of ata emptiness.

A clause ``head <= symbol(body_1, ..., body_n)`` says that the intersection
of the states in ``head`` is inhabited as soon as every ``body_i`` is. The
least model contains exactly the inhabited state sets.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

from alternating.ata import Ata
from alternating.dnf import dnf
from alternating.formula import conj_all, has_negation
from config import CAPS
from trees import Tree
from utils.errors import AutomatonError, CapExceeded
from utils.ordering import order_key, sorted_states

logger = logging.getLogger(__name__)

Head = FrozenSet[Hashable]
Body = Tuple[Head, ...]


@dataclass
class ImplicationSystem:
    """Clauses grouped by head, plus the goal heads."""
    clauses: Dict[Head, List[Tuple[str, Body]]] = field(default_factory=dict)
    goals: FrozenSet[Head] = frozenset()

    def add(self, head: Head, symbol: str, body: Body) -> None:
        self.clauses.setdefault(head, []).append((symbol, body))

    def clause_set(self) -> FrozenSet[Tuple[Head, str, Body]]:
        return frozenset(
            (head, symbol, body)
            for head, entries in self.clauses.items()
            for symbol, body in entries
        )

    def __len__(self) -> int:
        return sum(len(entries) for entries in self.clauses.values())


def _check_negation_free(a: Ata, states: Iterable[Hashable]) -> None:
    for x in states:
        for symbol, _ in a.alphabet.symbols:
            if has_negation(a.phi(x, symbol)):
                raise AutomatonError(f"Φ({x}, {symbol}) has a negated atom; push_negation first")


def build_implications(
    a: Ata,
    goals: Optional[Iterable[Head]] = None,
    all_subsets: bool = False,
    max_subsets: Optional[int] = None,
) -> ImplicationSystem:
    """
    Clauses ``X̄ <= a(X̄_1..X̄_n)`` for every (X̄_1..X̄_n) in DNF(⋀_{X∈X̄} Φ(X, a)).

    Args:
        a: Negation-free ata
        goals: Heads to derive (default: the singleton initial states)
        all_subsets: Generate clauses for every subset of the reachable
            states instead of only the heads reachable from the goals
        max_subsets: Cap on the number of heads (default: CAPS['MAX_SUBSETS'])

    Raises:
        AutomatonError: a formula has a negated atom
        CapExceeded: more heads than the cap
    """
    limit = CAPS['MAX_SUBSETS'] if max_subsets is None else max_subsets
    goal_heads = frozenset(
        frozenset(g) for g in (goals if goals is not None else ([x] for x in a.initial))
    )
    universe = sorted_states(a.materialize_all(sorted_states({x for g in goal_heads for x in g})))
    _check_negation_free(a, universe)

    system = ImplicationSystem(goals=goal_heads)

    def expand(head: Head) -> List[Head]:
        found = []
        members = sorted_states(head)
        for symbol, arity in a.alphabet.symbols:
            phi = conj_all(a.phi(x, symbol) for x in members)
            for conjunct in dnf(phi, arity):
                body = tuple(pair.pos for pair in conjunct)
                system.add(head, symbol, body)
                found.extend(body)
        return found

    if all_subsets:
        if 2 ** len(universe) > limit:
            raise CapExceeded("MAX_SUBSETS", limit)
        for size in range(len(universe) + 1):
            for combo in combinations(universe, size):
                expand(frozenset(combo))
    else:
        seen: Set[Head] = set(goal_heads)
        queue = deque(sorted(goal_heads, key=order_key))
        while queue:
            head = queue.popleft()
            for nxt in expand(head):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > limit:
                        raise CapExceeded("MAX_SUBSETS", limit)
                    queue.append(nxt)
    logger.debug(f"Implication system: {len(system.clauses)} heads, {len(system)} clauses")
    return system


def derive_witnesses(rho: ImplicationSystem) -> Dict[Head, Tree]:
    """Least model of ``rho`` with a derivation tree for every derivable head."""
    witness: Dict[Head, Tree] = {}
    heads = sorted(rho.clauses, key=order_key)
    changed = True
    while changed:
        changed = False
        for head in heads:
            if head in witness:
                continue
            for symbol, body in rho.clauses[head]:
                if all(b in witness for b in body):
                    witness[head] = Tree(symbol, tuple(witness[b] for b in body))
                    changed = True
                    break
    return witness


def solve_implications(rho: ImplicationSystem, goals: Optional[Iterable[Head]] = None) -> bool:
    """Whether some goal head is derivable (the ata is nonempty)."""
    targets = rho.goals if goals is None else {frozenset(g) for g in goals}
    derived = derive_witnesses(rho)
    return any(g in derived for g in targets)


def goal_witness(rho: ImplicationSystem) -> Optional[Tree]:
    """Derivation tree of the first derivable goal, in canonical order."""
    derived = derive_witnesses(rho)
    for g in sorted(rho.goals, key=order_key):
        if g in derived:
            return derived[g]
    return None
