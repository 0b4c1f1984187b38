"""
Backward type inference, one output state at a time.

Given a transducer and a deterministic-complete output automaton, builds an
ata whose language is the set of inputs having some output in the
automaton's language.
"""

import logging
from itertools import product
from typing import Dict, FrozenSet, Hashable, List, Tuple

from alternating.ata import Ata
from alternating.formula import BOTTOM, TOP, Formula, atom, conj, conj_all, disj_all
from automata.bta import Bta, Dbta
from transducer.expr import Call, Constructor, Expr, Param
from transducer.mtt import Mtt
from utils.ordering import sorted_states

from .states import AtaStateId

logger = logging.getLogger(__name__)


class BasicInference:
    """Inf(e, q, q⃗) with memoization on (expression, q, q⃗)."""

    def __init__(self, m: Mtt, out: Bta):
        self.m = m
        self.out = out
        self.states: List[Hashable] = sorted_states(out.states)
        self._memo: Dict[Tuple[Expr, Hashable, Tuple[Hashable, ...]], Formula] = {}

    def inf(self, e: Expr, q: Hashable, qs: Tuple[Hashable, ...]) -> Formula:
        key = (e, q, qs)
        found = self._memo.get(key)
        if found is not None:
            return found
        if isinstance(e, Param):
            result = TOP if qs[e.index - 1] == q else BOTTOM
        elif isinstance(e, Constructor):
            result = disj_all(
                conj_all(self.inf(arg, child, qs) for arg, child in zip(e.args, children))
                for children in self.out.children_for(e.symbol, q)
            )
        else:
            assert isinstance(e, Call)
            alternatives = []
            for params in product(self.states, repeat=len(e.args)):
                target = AtaStateId(e.procedure, frozenset([q]), params)
                alternatives.append(conj(
                    atom(e.child, target),
                    conj_all(self.inf(arg, qj, qs) for arg, qj in zip(e.args, params)),
                ))
            result = disj_all(alternatives)
        self._memo[key] = result
        return result

    def transition(self, state: AtaStateId, symbol: str) -> Formula:
        (q,) = state.outputs
        return disj_all(self.inf(body, q, state.params) for body in self.m.bodies(state.procedure, symbol))


def infer_basic(m: Mtt, out: Bta, require_deterministic: bool = True) -> Ata:
    """
    Ata for the inputs some of whose outputs are accepted by ``out``.

    Args:
        m: Transducer
        out: Output automaton; initial ata states are ⟨p0, {q}⟩ for q final in ``out``
        require_deterministic: Reject automata that are not deterministic-complete.
            Without determinism the construction is unsound; turning the check
            off reproduces that behaviour.

    Returns:
        Lazily materialized ata over m's alphabet

    Raises:
        AutomatonError: ``out`` is not deterministic-complete and
            ``require_deterministic`` is set
    """
    if require_deterministic:
        out = Dbta.from_bta(out)
    engine = BasicInference(m, out)
    initial = [
        AtaStateId(p, frozenset([q]), ())
        for p in m.initial
        for q in sorted_states(out.final)
    ]
    logger.debug(f"Basic inference with {len(engine.states)} output states")
    return Ata(m.alphabet, initial, engine.transition)


def basic_state_universe(m: Mtt, out: Bta) -> FrozenSet[AtaStateId]:
    """Every ⟨p, {q}, q⃗⟩ over the procedures of ``m`` and the states of ``out``."""
    states = sorted_states(out.states)
    return frozenset(
        AtaStateId(p, frozenset([q]), params)
        for p, k in m.procedures.items()
        for q in states
        for params in product(states, repeat=k)
    )
