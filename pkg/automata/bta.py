"""
Bottom-up tree automata (bta) and their deterministic-complete form (dbta).
"""

import logging
from collections import defaultdict
from itertools import product
from typing import Dict, FrozenSet, Hashable, Iterable, List, NamedTuple, Optional, Tuple

from config import CAPS
from trees import RankedAlphabet, Tree, compositions, print_tree, tree_order
from utils.errors import AutomatonError, CapExceeded
from utils.ordering import order_key, sorted_states

logger = logging.getLogger(__name__)

State = Hashable


class Rule(NamedTuple):
    """``target <- symbol(children...)``"""
    target: State
    symbol: str
    children: Tuple[State, ...]


class Bta:
    """
    Nondeterministic bottom-up tree automaton.

    States are arbitrary hashable values; everything that needs an order
    uses ``utils.ordering``.
    """

    def __init__(
        self,
        alphabet: RankedAlphabet,
        states: Iterable[State],
        final: Iterable[State],
        rules: Iterable[Rule],
    ):
        self.alphabet = alphabet
        self.states: FrozenSet[State] = frozenset(states)
        self.final: FrozenSet[State] = frozenset(final)
        self.rules: FrozenSet[Rule] = frozenset(Rule(*r) for r in rules)

        if not self.final <= self.states:
            extra = sorted_states(self.final - self.states)
            raise AutomatonError(f"final states {extra} are not declared")

        self._by_symbol: Dict[str, List[Rule]] = defaultdict(list)
        self._targets: Dict[Tuple[str, Tuple[State, ...]], set] = defaultdict(set)
        self._children: Dict[Tuple[str, State], List[Tuple[State, ...]]] = defaultdict(list)
        for rule in self.rules:
            if rule.symbol not in alphabet:
                raise AutomatonError(f"rule {format_rule(rule)} uses an unknown symbol")
            if alphabet.arity(rule.symbol) != len(rule.children):
                raise AutomatonError(f"rule {format_rule(rule)} has the wrong number of children")
            missing = [s for s in (rule.target,) + rule.children if s not in self.states]
            if missing:
                raise AutomatonError(f"rule {format_rule(rule)} uses undeclared states {missing}")
            self._by_symbol[rule.symbol].append(rule)
            self._targets[(rule.symbol, rule.children)].add(rule.target)
            self._children[(rule.symbol, rule.target)].append(rule.children)

        for key in self._by_symbol:
            self._by_symbol[key].sort(key=rule_key)
        for key in self._children:
            self._children[key].sort(key=order_key)

    def rules_for(self, symbol: str) -> List[Rule]:
        return self._by_symbol.get(symbol, [])

    def targets(self, symbol: str, children: Tuple[State, ...]) -> FrozenSet[State]:
        return frozenset(self._targets.get((symbol, tuple(children)), ()))

    def children_for(self, symbol: str, target: State) -> List[Tuple[State, ...]]:
        """Child-state tuples of the rules ``target <- symbol(...)``."""
        return self._children.get((symbol, target), [])

    def run(self, t: Tree, _memo: Optional[Dict[Tree, FrozenSet[State]]] = None) -> FrozenSet[State]:
        """States accepting ``t``."""
        memo = {} if _memo is None else _memo
        if t in memo:
            return memo[t]
        child_sets = [self.run(c, memo) for c in t.children]
        found = set()
        for rule in self.rules_for(t.symbol):
            if all(q in s for q, s in zip(rule.children, child_sets)):
                found.add(rule.target)
        result = frozenset(found)
        memo[t] = result
        return result

    def member(self, t: Tree) -> bool:
        return bool(self.run(t) & self.final)

    def with_alphabet(self, alphabet: RankedAlphabet) -> "Bta":
        """Same automaton over a larger alphabet (no rules for the new symbols)."""
        return Bta(self.alphabet.union(alphabet), self.states, self.final, self.rules)

    def with_final(self, final: Iterable[State]) -> "Bta":
        return Bta(self.alphabet, self.states, final, self.rules)

    def is_deterministic_complete(self) -> bool:
        return _completeness_problem(self) is None

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(states={len(self.states)}, final={len(self.final)}, "
            f"rules={len(self.rules)})"
        )


class Dbta(Bta):
    """Bta with exactly one rule per symbol and child-state tuple."""

    def __init__(self, alphabet, states, final, rules):
        super().__init__(alphabet, states, final, rules)
        problem = _completeness_problem(self)
        if problem:
            raise AutomatonError(problem)
        self._step = {(r.symbol, r.children): r.target for r in self.rules}

    @classmethod
    def from_bta(cls, m: Bta) -> "Dbta":
        """Re-check a bta as a dbta; raises AutomatonError when it is not one."""
        if isinstance(m, Dbta):
            return m
        return cls(m.alphabet, m.states, m.final, m.rules)

    def step(self, symbol: str, children: Tuple[State, ...]) -> State:
        return self._step[(symbol, tuple(children))]

    def state_of(self, t: Tree) -> State:
        (state,) = self.run(t)
        return state

    def with_final(self, final: Iterable[State]) -> "Dbta":
        return Dbta(self.alphabet, self.states, final, self.rules)


def rule_key(rule: Rule) -> tuple:
    return (rule.symbol, order_key(rule.target), tuple(order_key(c) for c in rule.children))


def _completeness_problem(m: Bta) -> Optional[str]:
    ordered = sorted_states(m.states)
    for symbol, arity in m.alphabet.symbols:
        for children in product(ordered, repeat=arity):
            targets = m.targets(symbol, children)
            if len(targets) != 1:
                what = "no rule" if not targets else f"{len(targets)} rules"
                shown = ",".join(str(c) for c in children)
                return f"not deterministic-complete: {what} for {symbol}({shown})"
    return None


def format_rule(rule: Rule) -> str:
    if not rule.children:
        return f"{rule.target} <- {rule.symbol}"
    return f"{rule.target} <- {rule.symbol}(" + ",".join(str(c) for c in rule.children) + ")"


# ============================================================================
# OPERATIONS
# ============================================================================

def accepts(m: Bta, t: Tree) -> FrozenSet[State]:
    """
    The set of states of ``m`` that accept ``t``.

    ``t`` is in L(m) iff the result meets ``m.final``; for a dbta the result is
    a singleton.
    """
    return m.run(t)


def determinize_complete(m: Bta) -> Tuple[Dbta, Dict[FrozenSet[State], FrozenSet[State]]]:
    """
    Subset construction restricted to reachable subsets, completed by the
    empty subset as sink.

    Args:
        m: Any bta

    Returns:
        (dbta whose states are frozensets of m's states, map new state -> subset)

    Raises:
        CapExceeded: when more than CAPS['MAX_DETERMINIZED_STATES'] subsets are reachable
    """
    limit = CAPS['MAX_DETERMINIZED_STATES']
    sink: FrozenSet[State] = frozenset()
    known = {sink}
    table: Dict[Tuple[str, Tuple[FrozenSet[State], ...]], FrozenSet[State]] = {}

    def target_of(symbol, children):
        return frozenset(
            r.target for r in m.rules_for(symbol)
            if all(q in s for q, s in zip(r.children, children))
        )

    changed = True
    while changed:
        changed = False
        ordered = sorted_states(known)
        for symbol, arity in m.alphabet.symbols:
            for children in product(ordered, repeat=arity):
                key = (symbol, children)
                if key in table:
                    continue
                target = target_of(symbol, children)
                table[key] = target
                if target not in known:
                    known.add(target)
                    changed = True
                    if len(known) > limit:
                        raise CapExceeded("MAX_DETERMINIZED_STATES", limit)

    rules = [Rule(target, symbol, children) for (symbol, children), target in table.items()]
    final = [s for s in known if s & m.final]
    logger.info(f"Determinized {len(m.states)} states into {len(known)} subsets")
    return Dbta(m.alphabet, known, final, rules), {s: s for s in known}


def complement(m: Bta) -> Dbta:
    """Flip the final set of a deterministic-complete automaton."""
    d = Dbta.from_bta(m)
    return d.with_final(d.states - d.final)


def inhabitants(m: Bta) -> Dict[State, Tree]:
    """
    One witness tree per inhabited state.

    Least fixpoint over the rules; each round keeps the smallest new candidate
    per state so witnesses stay small.
    """
    witness: Dict[State, Tree] = {}
    while True:
        candidates: Dict[State, Tree] = {}
        for rule in m.rules:
            if rule.target in witness:
                continue
            if all(c in witness for c in rule.children):
                tree = Tree(rule.symbol, tuple(witness[c] for c in rule.children))
                best = candidates.get(rule.target)
                if best is None or tree_order(tree) < tree_order(best):
                    candidates[rule.target] = tree
        if not candidates:
            return witness
        witness.update(candidates)


def bta_inhabitant(m: Bta) -> Optional[Tree]:
    """A tree of L(m), or None when the language is empty."""
    witness = inhabitants(m)
    found = [witness[q] for q in m.final if q in witness]
    if not found:
        return None
    return min(found, key=tree_order)


def bta_empty(m: Bta) -> bool:
    return bta_inhabitant(m) is None


def bta_intersect(a: Bta, b: Bta) -> Bta:
    """Product automaton over reachable state pairs; L = L(a) ∩ L(b)."""
    alphabet = a.alphabet.union(b.alphabet)
    reachable = set()
    rules = set()
    changed = True
    while changed:
        changed = False
        for symbol, _ in alphabet.symbols:
            for ra in a.rules_for(symbol):
                for rb in b.rules_for(symbol):
                    children = tuple(zip(ra.children, rb.children))
                    if not all(c in reachable for c in children):
                        continue
                    rule = Rule((ra.target, rb.target), symbol, children)
                    if rule in rules:
                        continue
                    rules.add(rule)
                    if rule.target not in reachable:
                        reachable.add(rule.target)
                        changed = True
    final = [s for s in reachable if s[0] in a.final and s[1] in b.final]
    return Bta(alphabet, reachable, final, rules)


def enumerate_accepted(m: Bta, max_nodes: int) -> List[Tree]:
    """
    Trees of L(m) with at most ``max_nodes`` nodes, ordered by size then
    printed form.

    Built state by state so only trees the automaton accepts are ever formed.
    """
    if max_nodes < 1:
        raise ValueError("max_nodes must be at least 1")
    # by_size[n][q]: trees with n nodes accepted by q
    by_size: List[Dict[State, set]] = [dict()]
    result: List[Tree] = []
    for size in range(1, max_nodes + 1):
        level: Dict[State, set] = defaultdict(set)
        for rule in m.rules:
            arity = len(rule.children)
            for sizes in compositions(size - 1, arity):
                pools = [by_size[s].get(q, ()) for s, q in zip(sizes, rule.children)]
                if any(not p for p in pools):
                    continue
                for children in product(*pools):
                    level[rule.target].add(Tree(rule.symbol, children))
        by_size.append(dict(level))
        accepted = set()
        for q in m.final:
            accepted |= level.get(q, set())
        result.extend(sorted(accepted, key=print_tree))
    return result
