"""Folding an input type into the procedures of a transducer."""

import logging
from dataclasses import dataclass
from typing import Hashable, List

from automata.bta import Bta
from utils.ordering import order_key, sorted_states

from .analysis import reachable_procedures
from .expr import Call, Expr, Param, map_calls
from .mtt import Mtt, MttRule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Typed:
    """Procedure ``procedure`` restricted to inputs of in-type state ``state``."""
    procedure: Hashable
    state: Hashable

    def order_key(self) -> tuple:
        return (order_key(self.procedure), order_key(self.state))

    def __str__(self) -> str:
        return f"{self.procedure}@{self.state}"


@dataclass(frozen=True)
class Guard:
    """Arity-1 procedure returning its parameter iff the input is in ``state``."""
    state: Hashable

    def order_key(self) -> tuple:
        return order_key(self.state)

    def __str__(self) -> str:
        return f"check@{self.state}"


def _guarded(body: Expr, children_states: tuple) -> Expr:
    """Wrap ``body`` in guards for every input child it never calls."""
    called = {c.child for c in body.calls()}
    for h, q in enumerate(children_states, start=1):
        if h not in called:
            body = Call(Guard(q), h, (body,))
    return body


def encode_input_type(m: Mtt, in_type: Bta) -> Mtt:
    """
    Transducer T' with T'(v) = T(v) for v in L(in_type) and T'(v) = ∅ otherwise.

    Procedure (p, q) runs p on inputs accepted by in-type state q: each rule
    of p on symbol a is paired with each in-type rule ``q <- a(q1..qn)``, and a
    call on x_h becomes a call of (callee, q_h). Children the body never reads
    are checked by guard procedures.
    """
    alphabet = m.alphabet.union(in_type.alphabet)
    rules: List[MttRule] = []
    procedures = {}

    for rule in m.rules:
        for in_rule in in_type.rules_for(rule.symbol):
            qs = in_rule.children
            body = map_calls(
                rule.body,
                lambda call, args, qs=qs: Call(Typed(call.procedure, qs[call.child - 1]), call.child, args),
            )
            rules.append(MttRule(Typed(rule.procedure, in_rule.target), rule.symbol, _guarded(body, qs)))

    for q in in_type.states:
        for symbol, _ in alphabet.symbols:
            for children in in_type.children_for(symbol, q):
                body: Expr = Param(1)
                for h, qh in enumerate(children, start=1):
                    body = Call(Guard(qh), h, (body,))
                rules.append(MttRule(Guard(q), symbol, body))

    for p, k in m.procedures.items():
        for q in in_type.states:
            procedures[Typed(p, q)] = k
    for q in in_type.states:
        procedures[Guard(q)] = 1

    initial = [Typed(p, q) for p in m.initial for q in sorted_states(in_type.final)]
    encoded = Mtt(alphabet, procedures, initial, rules)

    # drop what the initial procedures can never call
    live = reachable_procedures(encoded)
    trimmed = Mtt(
        alphabet,
        {p: k for p, k in procedures.items() if p in live},
        initial,
        [r for r in rules if r.procedure in live],
    )
    logger.debug(f"Encoded input type: {len(trimmed.procedures)} procedures, {len(trimmed.rules)} rules")
    return trimmed
