"""Bottom-up automata viewed as alternating automata."""

from alternating.ata import Ata
from alternating.formula import atom, conj_all, disj_all

from .bta import Bta


def bta_to_ata(m: Bta) -> Ata:
    """
    Φ(q, a) = ⋁ over rules ``q <- a(q1..qn)`` of ⋀_i ``d i q_i``.

    No rule gives ⊥; a nullary rule gives ⊤. Each state keeps its language.
    """

    def transition(state, symbol):
        alternatives = [
            conj_all(atom(i, q) for i, q in enumerate(children, start=1))
            for children in m.children_for(symbol, state)
        ]
        return disj_all(alternatives)

    return Ata(m.alphabet, m.final, transition, m.states)
