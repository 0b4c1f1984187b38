"""
Typechecking by specialization.

Each procedure p is split into procedures ⟨p, q, q⃗⟩ that only produce
outputs in output state q when their parameters are of types q⃗. Afterwards
typechecking is emptiness of the specialized transducer, decided through
its system of implications.
"""

import logging
from collections import deque
from itertools import product
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

from automata.bta import Bta, Dbta, complement, determinize_complete
from config import CAPS
from emptiness.implications import Head, ImplicationSystem, goal_witness
from inference.states import AtaStateId
from transducer.encode import encode_input_type
from transducer.expr import Call, Constructor, Expr, Param
from transducer.mtt import Mtt, MttRule
from trees import Tree
from utils.errors import CapExceeded
from utils.ordering import order_key, sorted_states

logger = logging.getLogger(__name__)


class Specializer:
    """Specialized variants of an expression, one per choice of output states for its calls."""

    def __init__(self, m: Mtt, out: Bta):
        self.m = m
        self.out = out
        self.states = sorted_states(out.states)
        self._memo: Dict[Tuple[Expr, Hashable, Tuple[Hashable, ...]], List[Expr]] = {}

    def variants(self, e: Expr, q: Hashable, qs: Tuple[Hashable, ...]) -> List[Expr]:
        key = (e, q, qs)
        found = self._memo.get(key)
        if found is not None:
            return found
        if isinstance(e, Param):
            result = [e] if qs[e.index - 1] == q else []
        elif isinstance(e, Constructor):
            result = []
            for children in self.out.children_for(e.symbol, q):
                pools = [self.variants(arg, qi, qs) for arg, qi in zip(e.args, children)]
                result.extend(Constructor(e.symbol, args) for args in product(*pools))
        else:
            assert isinstance(e, Call)
            result = []
            for params in product(self.states, repeat=len(e.args)):
                target = AtaStateId(e.procedure, frozenset([q]), params)
                pools = [self.variants(arg, qj, qs) for arg, qj in zip(e.args, params)]
                result.extend(Call(target, e.child, args) for args in product(*pools))
        self._memo[key] = result
        return result


def mps_specialize(m: Mtt, out_complement: Bta) -> Mtt:
    """
    Specialized transducer with initial procedures ⟨p0, q⟩ for q final in
    ``out_complement``; only procedures reachable from those are built.

    Args:
        m: Transducer with the input type already encoded
        out_complement: Deterministic-complete output automaton
    """
    out = Dbta.from_bta(out_complement)
    specializer = Specializer(m, out)
    initial = [
        AtaStateId(p, frozenset([q]), ())
        for p in m.initial
        for q in sorted_states(out.final)
    ]
    procedures: Dict[AtaStateId, int] = {s: 0 for s in initial}
    rules: List[MttRule] = []
    queue = deque(initial)
    while queue:
        s = queue.popleft()
        (q,) = s.outputs
        for symbol, _ in m.alphabet.symbols:
            for body in m.bodies(s.procedure, symbol):
                for variant in specializer.variants(body, q, s.params):
                    rules.append(MttRule(s, symbol, variant))
                    for call in variant.calls():
                        if call.procedure not in procedures:
                            procedures[call.procedure] = len(call.args)
                            queue.append(call.procedure)
    logger.info(f"Specialized {len(m.procedures)} procedures into {len(procedures)}")
    return Mtt(m.alphabet, procedures, initial, rules)


def mps_implications(u: Mtt, max_subsets: Optional[int] = None) -> ImplicationSystem:
    """
    System ρ′ of the specialized transducer: for a head X̄ and a symbol a,
    one clause per choice of a rule for every s ∈ X̄, whose i-th body set
    collects the procedures called on x_i by the chosen rules.

    Raises:
        CapExceeded: more heads than ``max_subsets`` (default CAPS['MAX_SUBSETS'])
    """
    limit = CAPS['MAX_SUBSETS'] if max_subsets is None else max_subsets
    goals = frozenset(frozenset([s]) for s in u.initial)
    system = ImplicationSystem(goals=goals)
    seen: Set[Head] = set(goals)
    queue = deque(sorted(goals, key=order_key))
    while queue:
        head = queue.popleft()
        members = sorted_states(head)
        for symbol, arity in u.alphabet.symbols:
            options = [u.bodies(s, symbol) for s in members]
            bodies = set()
            for chosen in product(*options):
                parts: List[Set[Hashable]] = [set() for _ in range(arity)]
                for e in chosen:
                    for call in e.calls():
                        parts[call.child - 1].add(call.procedure)
                bodies.add(tuple(frozenset(p) for p in parts))
            for body in sorted(bodies, key=order_key):
                system.add(head, symbol, body)
                for nxt in body:
                    if nxt not in seen:
                        seen.add(nxt)
                        if len(seen) > limit:
                            raise CapExceeded("MAX_SUBSETS", limit)
                        queue.append(nxt)
    logger.debug(f"Specialized implication system: {len(system.clauses)} heads, {len(system)} clauses")
    return system


def compare_systems(rho: ImplicationSystem, rho_prime: ImplicationSystem, rename=None) -> bool:
    """
    Whether two systems have the same clauses and goals.

    Args:
        rename: Optional map applied to the states of ``rho_prime`` first
    """
    if rename is None:
        return rho.clause_set() == rho_prime.clause_set() and rho.goals == rho_prime.goals

    def heads(h: Iterable[Hashable]) -> FrozenSet[Hashable]:
        return frozenset(rename(x) for x in h)

    renamed = frozenset(
        (heads(head), symbol, tuple(heads(b) for b in body))
        for head, symbol, body in rho_prime.clause_set()
    )
    goals = frozenset(heads(g) for g in rho_prime.goals)
    return rho.clause_set() == renamed and rho.goals == goals


def mps_verdict(m: Mtt, in_type: Bta, out_type: Bta, max_subsets: Optional[int] = None) -> Optional[Tree]:
    """A tree of L(in_type) with an output outside L(out_type), or None."""
    out_complement = complement(determinize_complete(out_type)[0])
    encoded = encode_input_type(m, in_type)
    u = mps_specialize(encoded, out_complement)
    return goal_witness(mps_implications(u, max_subsets))
