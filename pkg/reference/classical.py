"""
Classical typechecking by enumerating procedure behaviours.

A state of the constructed dbta is a function d that maps each procedure p
and tuple of parameter types q⃗ to the output states p can reach on the
current input subtree. Only the functions reachable bottom-up are built.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Hashable, Optional, Tuple

from automata.bta import Bta, Dbta, Rule, bta_inhabitant, bta_intersect, complement, determinize_complete
from config import CAPS
from inference.states import AtaStateId
from transducer.expr import Call, Constructor, Expr, Param
from transducer.mtt import Mtt
from trees import Tree
from utils.errors import CapExceeded
from utils.formatters import format_state
from utils.ordering import order_key, sorted_states

logger = logging.getLogger(__name__)

Domain = Tuple[Tuple[Hashable, Tuple[Hashable, ...]], ...]


@dataclass(frozen=True)
class ClassicalState:
    """
    A total map d over ``domain`` = P × Q^arity, stored as one output set per
    domain entry in domain order.
    """
    values: Tuple[FrozenSet[Hashable], ...]
    domain: Domain = field(compare=False, repr=False, default=())

    def beta(self) -> FrozenSet[AtaStateId]:
        """{⟨p, {q}, q⃗⟩ | q ∈ d(p, q⃗)}"""
        return frozenset(
            AtaStateId(p, frozenset([q]), qs)
            for (p, qs), out in zip(self.domain, self.values)
            for q in out
        )

    def order_key(self) -> tuple:
        return tuple(order_key(v) for v in self.values)

    def __str__(self) -> str:
        shown = [
            f"{p}{format_state(qs) if qs else ''}:{format_state(out)}"
            for (p, qs), out in zip(self.domain, self.values)
            if out
        ]
        return "d[" + " ".join(shown) + "]"


def classical_domain(m: Mtt, out: Bta) -> Domain:
    states = sorted_states(out.states)
    return tuple(
        (p, qs)
        for p in sorted_states(m.procedures)
        for qs in product(states, repeat=m.arity(p))
    )


class ClassicalInference:
    """DInf(e, d⃗, q⃗): output states reachable by ``e`` under child behaviours d⃗."""

    def __init__(self, m: Mtt, out: Bta):
        self.m = m
        self.out = out
        self.domain = classical_domain(m, out)
        self.index = {entry: i for i, entry in enumerate(self.domain)}

    def dinf(self, e: Expr, ds: Tuple[ClassicalState, ...], qs: Tuple[Hashable, ...]) -> FrozenSet[Hashable]:
        if isinstance(e, Param):
            return frozenset([qs[e.index - 1]])
        if isinstance(e, Constructor):
            pools = [sorted_states(self.dinf(arg, ds, qs)) for arg in e.args]
            found = set()
            for children in product(*pools):
                found |= self.out.targets(e.symbol, children)
            return frozenset(found)
        assert isinstance(e, Call)
        d = ds[e.child - 1]
        pools = [sorted_states(self.dinf(arg, ds, qs)) for arg in e.args]
        found = set()
        for params in product(*pools):
            found |= d.values[self.index[(e.procedure, params)]]
        return frozenset(found)

    def step(self, symbol: str, ds: Tuple[ClassicalState, ...]) -> ClassicalState:
        values = []
        for p, qs in self.domain:
            reached = set()
            for body in self.m.bodies(p, symbol):
                reached |= self.dinf(body, ds, qs)
            values.append(frozenset(reached))
        return ClassicalState(tuple(values), self.domain)


def classical_typecheck(m: Mtt, out_complement: Bta) -> Dbta:
    """
    Dbta over the reachable ClassicalStates recognizing the inputs with an
    output accepted by ``out_complement``.

    Args:
        m: Transducer (input type not encoded)
        out_complement: Deterministic-complete automaton for the complement
            of the output type

    Raises:
        CapExceeded: more than CAPS['MAX_CLASSICAL_STATES'] reachable states
    """
    out = Dbta.from_bta(out_complement)
    engine = ClassicalInference(m, out)
    limit = CAPS['MAX_CLASSICAL_STATES']
    known: Dict[ClassicalState, None] = {}
    table: Dict[Tuple[str, Tuple[ClassicalState, ...]], ClassicalState] = {}
    changed = True
    while changed:
        changed = False
        ordered = sorted_states(known)
        for symbol, arity in m.alphabet.symbols:
            for ds in product(ordered, repeat=arity):
                if (symbol, ds) in table:
                    continue
                d = engine.step(symbol, ds)
                table[(symbol, ds)] = d
                if d not in known:
                    known[d] = None
                    changed = True
                    if len(known) > limit:
                        raise CapExceeded("MAX_CLASSICAL_STATES", limit)

    final = [
        d for d in known
        if any(d.values[engine.index[(p, ())]] & out.final for p in m.initial)
    ]
    rules = [Rule(d, symbol, ds) for (symbol, ds), d in table.items()]
    logger.info(f"Classical construction: {len(known)} reachable states")
    return Dbta(m.alphabet, known, final, rules)


def classical_verdict(m: Mtt, in_type: Bta, out_type: Bta) -> Optional[Tree]:
    """
    A tree of L(in_type) with an output outside L(out_type), or None.

    Returns:
        The smallest inhabitant of the product with the input type
    """
    out_complement = complement(determinize_complete(out_type)[0])
    n_prime = classical_typecheck(m, out_complement)
    return bta_inhabitant(bta_intersect(n_prime, in_type))


def beta_isomorphism_check(n_prime: Dbta, n: Dbta) -> bool:
    """
    Whether d ↦ β(d) is an isomorphism from the classical dbta onto the
    determinized basic-inference dbta.

    Args:
        n_prime: Result of classical_typecheck
        n: Dbta over frozensets of AtaStateId, e.g. from determinize_ata
    """
    image: Dict[ClassicalState, FrozenSet] = {d: d.beta() for d in n_prime.states}
    if len(set(image.values())) != len(image):
        logger.debug("β is not injective")
        return False
    if set(image.values()) != set(n.states):
        logger.debug("β is not onto the reachable states")
        return False
    for d in n_prime.states:
        if (d in n_prime.final) != (image[d] in n.final):
            logger.debug(f"β does not preserve final status of {d}")
            return False
    for rule in n_prime.rules:
        mapped = tuple(image[c] for c in rule.children)
        if n.step(rule.symbol, mapped) != image[rule.target]:
            logger.debug(f"β does not commute with {rule.symbol}")
            return False
    return True
