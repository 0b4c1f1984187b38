"""
Backward type inference over sets of output states, built lazily.

States are ⟨p, q̄, q⃗⟩ with q̄ a set of output states. Three optimizations can
be switched independently:

- cartesian: constructor rules range over a product decomposition of the
  matching output transitions instead of single transitions;
- partition: procedure calls range over classes of equivalent parameter
  types instead of every tuple of states;
- complement_output: for a total deterministic transducer, inference for a
  set larger than half the states is the negation of inference for its
  complement.
"""

import logging
from itertools import product
from typing import Dict, FrozenSet, Hashable, List, Mapping, Optional, Tuple

from alternating.ata import Ata
from alternating.formula import BOTTOM, TOP, Formula, atom, conj, conj_all, disj_all, dual
from automata.bta import Bta, Dbta
from config import DEFAULT_TOGGLES
from transducer.analysis import is_total_deterministic_syntactic
from transducer.expr import Call, Constructor, Expr, Param
from transducer.mtt import Mtt
from utils.ordering import sorted_states

from .cartesian import Component, cartesian_decompose
from .partition import EquivFamily, choice, classes
from .states import AtaStateId

logger = logging.getLogger(__name__)

StateSet = FrozenSet[Hashable]


class OptimizedInference:
    """
    Inf(e, q̄, q⃗) with memoization on (expression, q̄, q⃗).

    Args:
        m: Transducer
        out: Deterministic-complete output automaton
        options: Toggle dict with keys 'cartesian', 'partition', 'complement_output'
    """

    def __init__(self, m: Mtt, out: Dbta, options: Mapping[str, bool]):
        self.m = m
        self.out = out
        self.Q: StateSet = frozenset(out.states)
        self.ordered: List[Hashable] = sorted_states(out.states)
        self.cartesian = options.get('cartesian', True)
        self.partition = options.get('partition', True)
        self.total_deterministic = is_total_deterministic_syntactic(m)
        self.complement = options.get('complement_output', True) and self.total_deterministic
        self._memo: Dict[Tuple[Expr, StateSet, Tuple[Hashable, ...]], Formula] = {}
        self._components: Dict[Tuple[StateSet, str], List[Component]] = {}
        self.family: Optional[EquivFamily] = None
        if self.partition:
            self.family = EquivFamily(m, self.Q, self.components, self.normalize)

    def flips(self, qbar: StateSet) -> bool:
        """Whether inference for q̄ is taken as the negation of its complement."""
        return self.complement and 2 * len(qbar) > len(self.Q)

    def normalize(self, qbar: StateSet) -> StateSet:
        return self.Q - qbar if self.flips(qbar) else qbar

    def components(self, qbar: StateSet, symbol: str) -> List[Component]:
        """Products covering Δ(q̄, symbol) = {q⃗′ | q ← symbol(q⃗′), q ∈ q̄}."""
        key = (qbar, symbol)
        found = self._components.get(key)
        if found is not None:
            return found
        rows = {children for q in qbar for children in self.out.children_for(symbol, q)}
        if self.cartesian:
            result = cartesian_decompose(rows)
        else:
            result = [tuple(frozenset([q]) for q in row) for row in sorted_states(rows)]
        self._components[key] = result
        return result

    def parameter_classes(self, procedure: Hashable, qbar: StateSet, j: int) -> List[StateSet]:
        if self.family is None:
            return [frozenset([q]) for q in self.ordered]
        return classes(self.family.procedure_partition(procedure, qbar, j))

    def inf(self, e: Expr, qbar: StateSet, qs: Tuple[Hashable, ...]) -> Formula:
        key = (e, qbar, qs)
        found = self._memo.get(key)
        if found is not None:
            return found
        if not qbar:
            result = BOTTOM
        elif self.flips(qbar):
            result = dual(self.inf(e, self.Q - qbar, qs))
        elif isinstance(e, Param):
            result = TOP if qs[e.index - 1] in qbar else BOTTOM
        elif isinstance(e, Constructor):
            result = disj_all(
                conj_all(self.inf(arg, part, qs) for arg, part in zip(e.args, comp))
                for comp in self.components(qbar, e.symbol)
            )
        else:
            assert isinstance(e, Call)
            per_position = [
                self.parameter_classes(e.procedure, qbar, j) for j in range(1, len(e.args) + 1)
            ]
            alternatives = []
            for chosen in product(*per_position):
                target = AtaStateId(e.procedure, qbar, tuple(choice(c) for c in chosen))
                alternatives.append(conj(
                    atom(e.child, target),
                    conj_all(self.inf(arg, c, qs) for arg, c in zip(e.args, chosen)),
                ))
            result = disj_all(alternatives)
        self._memo[key] = result
        return result

    def transition(self, state: AtaStateId, symbol: str) -> Formula:
        return disj_all(
            self.inf(body, state.outputs, state.params)
            for body in self.m.bodies(state.procedure, symbol)
        )


def infer_optimized(
    m: Mtt,
    out_type: Bta,
    options: Optional[Mapping[str, bool]] = None,
    target: Optional[StateSet] = None,
) -> Ata:
    """
    Lazily materialized ata for the inputs with an output in ⟦target⟧.

    Args:
        m: Transducer
        out_type: Deterministic-complete output automaton
        options: Optimization toggles (default: config.DEFAULT_TOGGLES)
        target: Output states to reach; defaults to the non-final states, so
            the ata accepts the inputs with an ill-typed output

    Returns:
        Ata with initial states ⟨p0, target⟩ (none when target is empty)

    Raises:
        AutomatonError: out_type is not deterministic-complete
    """
    out = Dbta.from_bta(out_type)
    engine = OptimizedInference(m, out, dict(DEFAULT_TOGGLES if options is None else options))
    qbar = frozenset(out.states - out.final) if target is None else frozenset(target)
    initial = [AtaStateId(p, qbar, ()) for p in m.initial] if qbar else []
    logger.info(
        f"Inference over {len(engine.Q)} output states "
        f"(cartesian={engine.cartesian}, partition={engine.partition}, complement={engine.complement})"
    )
    return Ata(m.alphabet, initial, engine.transition)
