"""
Hash-consed Boolean formulas over child-state atoms.

Structurally equal formulas are the same object, so formulas compare and hash
by identity and can key memo tables directly. Build formulas only through the
constructors below; they apply the unit/zero laws of ⊤ and ⊥ and nothing else.
"""

import weakref
from typing import Callable, FrozenSet, Hashable, Iterable, Tuple

from utils.ordering import order_key

_table: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()


class Formula:
    __slots__ = ("kind", "args", "max_index", "size", "_atoms", "_dual", "__weakref__")

    kind: str
    args: tuple

    def __repr__(self) -> str:
        return f"Formula({format_formula(self)!r})"

    def __str__(self) -> str:
        return format_formula(self)

    def __reduce__(self):
        return (_rebuild, (self.kind, self.args))

    @property
    def atoms(self) -> FrozenSet[Tuple[int, Hashable, bool]]:
        """(index, state, positive) for every atom occurring in the formula."""
        if self._atoms is None:
            if self.kind in ("atom", "neg"):
                self._atoms = frozenset([(self.args[0], self.args[1], self.kind == "atom")])
            elif self.kind in ("and", "or"):
                self._atoms = self.args[0].atoms | self.args[1].atoms
            else:
                self._atoms = frozenset()
        return self._atoms

    def states(self) -> FrozenSet[Hashable]:
        return frozenset(x for _, x, _ in self.atoms)

    def evaluate(self, holds: Callable[[int, Hashable], bool]) -> bool:
        """Truth value when atom ``d i X`` is ``holds(i, X)``."""
        kind = self.kind
        if kind == "top":
            return True
        if kind == "bottom":
            return False
        if kind == "atom":
            return holds(*self.args)
        if kind == "neg":
            return not holds(*self.args)
        left, right = self.args
        if kind == "and":
            return left.evaluate(holds) and right.evaluate(holds)
        return left.evaluate(holds) or right.evaluate(holds)


def _intern(kind: str, args: tuple) -> Formula:
    key = (kind, args)
    found = _table.get(key)
    if found is not None:
        return found
    f = Formula.__new__(Formula)
    f.kind = kind
    f.args = args
    f._atoms = None
    f._dual = None
    if kind in ("and", "or"):
        f.max_index = max(args[0].max_index, args[1].max_index)
        f.size = 1 + args[0].size + args[1].size
    elif kind in ("atom", "neg"):
        f.max_index = args[0]
        f.size = 1
    else:
        f.max_index = 0
        f.size = 1
    _table[key] = f
    return f


def _rebuild(kind: str, args: tuple) -> Formula:
    return _intern(kind, args)


TOP = _intern("top", ())
BOTTOM = _intern("bottom", ())


def atom(index: int, state: Hashable) -> Formula:
    """``d index state``: child ``index`` (1-based) is accepted by ``state``."""
    if index < 1:
        raise ValueError(f"child index must be at least 1, got {index}")
    return _intern("atom", (index, state))


def neg_atom(index: int, state: Hashable) -> Formula:
    if index < 1:
        raise ValueError(f"child index must be at least 1, got {index}")
    return _intern("neg", (index, state))


def conj(left: Formula, right: Formula) -> Formula:
    if left is TOP:
        return right
    if right is TOP:
        return left
    if left is BOTTOM or right is BOTTOM:
        return BOTTOM
    return _intern("and", (left, right))


def disj(left: Formula, right: Formula) -> Formula:
    if left is BOTTOM:
        return right
    if right is BOTTOM:
        return left
    if left is TOP or right is TOP:
        return TOP
    return _intern("or", (left, right))


def conj_all(parts: Iterable[Formula]) -> Formula:
    """Right-nested conjunction; empty input gives ⊤."""
    items = list(parts)
    result = TOP
    for f in reversed(items):
        result = conj(f, result)
    return result


def disj_all(parts: Iterable[Formula]) -> Formula:
    """Right-nested disjunction; empty input gives ⊥."""
    items = list(parts)
    result = BOTTOM
    for f in reversed(items):
        result = disj(f, result)
    return result


def dual(f: Formula) -> Formula:
    """Negation pushed to the atoms (De Morgan); cached per formula."""
    if f._dual is not None:
        return f._dual
    kind = f.kind
    if kind == "top":
        result = BOTTOM
    elif kind == "bottom":
        result = TOP
    elif kind == "atom":
        result = neg_atom(*f.args)
    elif kind == "neg":
        result = atom(*f.args)
    elif kind == "and":
        result = disj(dual(f.args[0]), dual(f.args[1]))
    else:
        result = conj(dual(f.args[0]), dual(f.args[1]))
    f._dual = result
    result._dual = f
    return result


def rewrite_atoms(f: Formula, replace: Callable[[int, Hashable, bool], Formula], memo=None) -> Formula:
    """Rebuild ``f`` with every atom replaced by ``replace(index, state, positive)``."""
    memo = {} if memo is None else memo
    found = memo.get(f)
    if found is not None:
        return found
    kind = f.kind
    if kind in ("top", "bottom"):
        result = f
    elif kind == "atom":
        result = replace(f.args[0], f.args[1], True)
    elif kind == "neg":
        result = replace(f.args[0], f.args[1], False)
    else:
        left = rewrite_atoms(f.args[0], replace, memo)
        right = rewrite_atoms(f.args[1], replace, memo)
        result = conj(left, right) if kind == "and" else disj(left, right)
    memo[f] = result
    return result


def map_states(f: Formula, rename: Callable[[Hashable], Hashable]) -> Formula:
    """Rename the states in every atom, keeping polarity."""
    return rewrite_atoms(
        f, lambda i, x, positive: atom(i, rename(x)) if positive else neg_atom(i, rename(x))
    )


def has_negation(f: Formula) -> bool:
    return any(not positive for _, _, positive in f.atoms)


def format_formula(f: Formula, show_state: Callable[[Hashable], str] = str) -> str:
    kind = f.kind
    if kind == "top":
        return "T"
    if kind == "bottom":
        return "F"
    if kind == "atom":
        return f"d {f.args[0]} {show_state(f.args[1])}"
    if kind == "neg":
        return f"~d {f.args[0]} {show_state(f.args[1])}"
    op = " & " if kind == "and" else " | "
    return (
        "(" + format_formula(f.args[0], show_state) + op
        + format_formula(f.args[1], show_state) + ")"
    )


def formula_key(f: Formula) -> tuple:
    """Total order on formulas, for reproducible output."""
    if f.kind in ("atom", "neg"):
        return (f.kind, f.args[0], order_key(f.args[1]))
    if f.kind in ("and", "or"):
        return (f.kind, formula_key(f.args[0]), formula_key(f.args[1]))
    return (f.kind,)
