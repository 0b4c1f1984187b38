"""Disjunctive normal form of transition formulas as tuples of state-set pairs."""

from typing import Dict, FrozenSet, Hashable, Iterable, List, NamedTuple, Tuple

from utils.ordering import order_key

from .formula import Formula


class StateSetPair(NamedTuple):
    """
    ``(pos, neg)``: trees accepted by every state of ``pos`` and by no state
    of ``neg``. ``(∅, ∅)`` denotes all trees.
    """
    pos: FrozenSet[Hashable]
    neg: FrozenSet[Hashable]

    @classmethod
    def of(cls, pos: Iterable[Hashable] = (), neg: Iterable[Hashable] = ()) -> "StateSetPair":
        return cls(frozenset(pos), frozenset(neg))

    def union(self, other: "StateSetPair") -> "StateSetPair":
        return StateSetPair(self.pos | other.pos, self.neg | other.neg)

    def add(self, state: Hashable, positive: bool = True) -> "StateSetPair":
        if positive:
            return StateSetPair(self.pos | {state}, self.neg)
        return StateSetPair(self.pos, self.neg | {state})

    def subset_of(self, other: "StateSetPair") -> bool:
        """Componentwise inclusion; the larger pair denotes the smaller language."""
        return self.pos <= other.pos and self.neg <= other.neg

    def contradictory(self) -> bool:
        return not self.pos.isdisjoint(self.neg)

    def order_key(self) -> tuple:
        return (order_key(self.pos), order_key(self.neg))

    def __str__(self) -> str:
        pos = ",".join(str(x) for x in sorted(self.pos, key=order_key))
        neg = ",".join(str(x) for x in sorted(self.neg, key=order_key))
        return f"({{{pos}}},{{{neg}}})"


EMPTY_PAIR = StateSetPair(frozenset(), frozenset())

Conjunct = Tuple[StateSetPair, ...]


def conjunct_key(c: Conjunct) -> tuple:
    return tuple(p.order_key() for p in c)


def _dnf(phi: Formula, arity: int, memo: Dict[Formula, FrozenSet[Conjunct]]) -> FrozenSet[Conjunct]:
    found = memo.get(phi)
    if found is not None:
        return found
    kind = phi.kind
    if kind == "top":
        result = frozenset([(EMPTY_PAIR,) * arity])
    elif kind == "bottom":
        result = frozenset()
    elif kind in ("atom", "neg"):
        index, state = phi.args
        pair = StateSetPair.of([state]) if kind == "atom" else StateSetPair.of((), [state])
        row = [EMPTY_PAIR] * arity
        row[index - 1] = pair
        result = frozenset([tuple(row)])
    elif kind == "or":
        result = _dnf(phi.args[0], arity, memo) | _dnf(phi.args[1], arity, memo)
    else:
        left = _dnf(phi.args[0], arity, memo)
        right = _dnf(phi.args[1], arity, memo)
        result = frozenset(
            tuple(a.union(b) for a, b in zip(l, r)) for l in left for r in right
        )
    memo[phi] = result
    return result


def dnf(phi: Formula, arity: int) -> List[Conjunct]:
    """
    Disjuncts of ``phi`` as ``arity``-tuples of StateSetPair.

    ``phi`` denotes the union over the returned tuples of their componentwise
    intersections. The list is deduplicated and sorted.
    """
    if phi.max_index > arity:
        raise ValueError(f"formula uses child {phi.max_index} at arity {arity}")
    return sorted(_dnf(phi, arity, {}), key=conjunct_key)
