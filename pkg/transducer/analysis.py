"""Syntactic analyses of transducers: reachability, determinism and copy bounds."""

from collections import defaultdict, deque
from typing import Dict, FrozenSet, Hashable

from alternating.bounds import Bound, solve_bounds

from .mtt import Mtt


def reachable_procedures(m: Mtt) -> FrozenSet[Hashable]:
    """Procedures reachable from the initial ones through any syntactic call."""
    seen = set(m.initial)
    queue = deque(m.initial)
    while queue:
        p = queue.popleft()
        for symbol, _ in m.alphabet.symbols:
            for body in m.bodies(p, symbol):
                for call in body.calls():
                    if call.procedure not in seen:
                        seen.add(call.procedure)
                        queue.append(call.procedure)
    return frozenset(seen)


def is_total_deterministic_syntactic(m: Mtt) -> bool:
    """Every reachable procedure has exactly one rule for every symbol."""
    for p in reachable_procedures(m):
        for symbol, _ in m.alphabet.symbols:
            if len(m.bodies(p, symbol)) != 1:
                return False
    return True


def procedure_copy_bounds(m: Mtt) -> Dict[Hashable, Bound]:
    """
    Copy number of every procedure.

    c[p] is at least, for every rule of p and input child x_i, the sum of
    c[callee] over the calls on x_i in the body.
    """
    per_rule = []
    for rule in m.rules:
        by_child = defaultdict(list)
        for call in rule.body.calls():
            by_child[call.child].append(call.procedure)
        per_rule.append((rule.procedure, list(by_child.values())))

    def rhs(p, values):
        best = 0
        for owner, groups in per_rule:
            if owner != p:
                continue
            for callees in groups:
                best = max(best, sum(values[c] for c in callees))
        return best

    return solve_bounds(m.procedures, rhs)


def copy_bound(m: Mtt) -> Bound:
    """Maximal copy number over the initial procedures (math.inf when unbounded)."""
    bounds = procedure_copy_bounds(m)
    return max((bounds[p] for p in m.initial), default=1)
