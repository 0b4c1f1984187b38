"""
Equivalence of parameter types.

For a procedure p, an output set q̄ and a parameter position j, the family
assigns a partition of the output states such that parameter types in the
same class give language-equal inferred states. It is computed as the limit
of x_{n+1} = x_n ⊔ f(x_n) from the one-class partition, where ⊔ is the
common refinement and f reads off the inference rules.
"""

import logging
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Tuple

from transducer.expr import Call, Constructor, Expr, Param
from transducer.mtt import Mtt
from utils.ordering import order_key, sorted_states

from .cartesian import cartesian_decompose

logger = logging.getLogger(__name__)

StateSet = FrozenSet[Hashable]
Partition = FrozenSet[StateSet]
Key = Tuple[str, Hashable, StateSet]


def one_class(states: StateSet) -> Partition:
    return frozenset([frozenset(states)]) if states else frozenset()


def split(states: StateSet, part: StateSet) -> Partition:
    """{part, states \\ part} without empty classes."""
    return frozenset(c for c in (frozenset(part) & states, states - part) if c)


def join(left: Partition, right: Partition) -> Partition:
    """Common refinement of two partitions."""
    return frozenset(a & b for a in left for b in right if a & b)


def classes(partition: Partition) -> List[StateSet]:
    """Classes in canonical order."""
    return sorted(partition, key=order_key)


def choice(cls: Iterable[Hashable]) -> Hashable:
    """Representative of a class: its smallest state."""
    members = list(cls)
    if not members:
        raise ValueError("cannot choose from an empty class")
    return min(members, key=order_key)


class EquivFamily:
    """
    Lazily grown solution of the equivalence constraints.

    Keys are ("proc", p, q̄) and ("expr", e, q̄); values hold one partition per
    parameter position. Asking for a key not seen before extends the system
    and resumes the iteration from the current values; existing keys never
    depend on new ones, so earlier answers stay valid.

    Args:
        m: Transducer
        states: Output-automaton states Q
        components: (q̄, symbol) -> product decomposition of Δ(q̄, symbol)
        normalize: q̄ -> the output set whose inference determines q̄'s
    """

    def __init__(
        self,
        m: Mtt,
        states: Iterable[Hashable],
        components: Callable[[StateSet, str], list],
        normalize: Callable[[StateSet], StateSet] = lambda s: s,
    ):
        self.m = m
        self.Q: StateSet = frozenset(states)
        self.components = components
        self.normalize = normalize
        self._values: Dict[Key, Tuple[Partition, ...]] = {}
        self._pending: List[Key] = []
        self.rounds = 0

    # -- keys -----------------------------------------------------------------

    def _width(self, key: Key) -> int:
        kind, subject, _ = key
        if kind == "proc":
            return self.m.arity(subject)
        return subject.max_param

    def _key(self, kind: str, subject, qbar: StateSet) -> Key:
        key = (kind, subject, self.normalize(frozenset(qbar)))
        if key not in self._values:
            self._values[key] = (one_class(self.Q),) * self._width(key)
            self._pending.append(key)
        return key

    def _get(self, key: Key, i: int, values: Dict[Key, Tuple[Partition, ...]]) -> Partition:
        row = values.get(key)
        if row is None:
            row = self._values[key]
        if i > len(row):
            return one_class(self.Q)
        return row[i - 1]

    # -- constraints ----------------------------------------------------------

    def _rhs(self, key: Key, values) -> Tuple[Partition, ...]:
        kind, subject, qbar = key
        width = self._width(key)
        result = [one_class(self.Q)] * width
        if not qbar or width == 0:
            return tuple(result)

        def refine(i, partition):
            result[i - 1] = join(result[i - 1], partition)

        if kind == "proc":
            for symbol, _ in self.m.alphabet.symbols:
                for body in self.m.bodies(subject, symbol):
                    sub = self._key("expr", body, qbar)
                    for i in range(1, width + 1):
                        refine(i, self._get(sub, i, values))
        elif isinstance(subject, Param):
            refine(subject.index, split(self.Q, qbar))
        elif isinstance(subject, Constructor):
            for comp in self.components(qbar, subject.symbol):
                for arg, part in zip(subject.args, comp):
                    sub = self._key("expr", arg, part)
                    for i in range(1, width + 1):
                        refine(i, self._get(sub, i, values))
        else:
            assert isinstance(subject, Call)
            callee = self._key("proc", subject.procedure, qbar)
            for j, arg in enumerate(subject.args, start=1):
                for cls in classes(self._get(callee, j, values)):
                    sub = self._key("expr", arg, cls)
                    for i in range(1, width + 1):
                        refine(i, self._get(sub, i, values))
        return tuple(result)

    def solve(self) -> None:
        """Iterate x := x ⊔ f(x) until nothing changes and no key is added."""
        while self._pending:
            self._pending.clear()
            changed = True
            while changed or self._pending:
                self._pending.clear()
                self.rounds += 1
                snapshot = dict(self._values)
                changed = False
                for key in list(snapshot):
                    rhs = self._rhs(key, snapshot)
                    old = self._values[key]
                    new = tuple(join(a, b) for a, b in zip(old, rhs))
                    if new != old:
                        self._values[key] = new
                        changed = True
        logger.debug(f"Equivalence family: {len(self._values)} keys after {self.rounds} rounds")

    # -- queries --------------------------------------------------------------

    def procedure_partition(self, procedure: Hashable, qbar: StateSet, j: int) -> Partition:
        """E⟨procedure, q̄, j⟩."""
        key = self._key("proc", procedure, qbar)
        self.solve()
        return self._get(key, j, self._values)

    def expression_partition(self, e: Expr, qbar: StateSet, i: int) -> Partition:
        """E[e, q̄, i]."""
        key = self._key("expr", e, qbar)
        self.solve()
        return self._get(key, i, self._values)

    def keys(self) -> List[Key]:
        return sorted(self._values, key=lambda k: (k[0], order_key(k[2]), str(k[1])))


def compute_equiv_family(m: Mtt, out, components=None, normalize=None) -> EquivFamily:
    """
    Equivalence family for ``m`` against output automaton ``out``, solved for
    every procedure and every nonempty output set reachable from the singletons.

    Args:
        m: Transducer
        out: Deterministic-complete output automaton
        components: Product decomposition used by constructor rules
            (default: greedy Cartesian decomposition)
        normalize: Output-set normalization (default: identity)
    """
    if components is None:
        def components(qbar, symbol):
            rows = {c for q in qbar for c in out.children_for(symbol, q)}
            return cartesian_decompose(rows)

    family = EquivFamily(m, out.states, components, normalize or (lambda s: s))
    for p in sorted_states(m.procedures):
        for q in sorted_states(out.states):
            family._key("proc", p, frozenset([q]))
    family.solve()
    return family
