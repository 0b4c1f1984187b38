"""States of inferred alternating automata."""

from dataclasses import dataclass
from typing import FrozenSet, Hashable, Tuple

from utils.formatters import format_state
from utils.ordering import order_key


@dataclass(frozen=True)
class AtaStateId:
    """
    ⟨procedure, outputs, params⟩: inputs on which ``procedure``, given
    parameters of the output-automaton states ``params``, can produce a tree
    accepted by some state of ``outputs``.
    """
    procedure: Hashable
    outputs: FrozenSet[Hashable]
    params: Tuple[Hashable, ...] = ()

    def order_key(self) -> tuple:
        return (order_key(self.procedure), order_key(self.outputs), order_key(self.params))

    def __str__(self) -> str:
        inner = [str(self.procedure), format_state(self.outputs)]
        inner.extend(format_state(q) for q in self.params)
        return "<" + ",".join(inner) + ">"
