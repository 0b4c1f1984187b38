"""
Right-hand-side expressions of transducer rules.

Expressions are hash-consed: building the same expression twice returns the
same object, so inference can memoize on expression identity.
"""

from typing import Callable, Dict, Hashable, Iterator, Tuple

_table: Dict[tuple, "Expr"] = {}


class Expr:
    __slots__ = ("args", "max_param", "max_child", "size")

    args: Tuple["Expr", ...]

    def subexpressions(self) -> Iterator["Expr"]:
        """Pre-order walk, shared nodes visited once per occurrence."""
        yield self
        for arg in self.args:
            yield from arg.subexpressions()

    def calls(self) -> Iterator["Call"]:
        for e in self.subexpressions():
            if isinstance(e, Call):
                yield e

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_expr(self)!r})"

    def __str__(self) -> str:
        return format_expr(self)


def _finish(e: Expr, args: Tuple[Expr, ...]) -> None:
    e.args = args
    e.max_param = max((a.max_param for a in args), default=0)
    e.max_child = max((a.max_child for a in args), default=0)
    e.size = 1 + sum(a.size for a in args)


class Constructor(Expr):
    """Output node ``symbol(args...)``."""
    __slots__ = ("symbol",)

    def __new__(cls, symbol: str, args: Tuple[Expr, ...] = ()):
        args = tuple(args)
        key = ("c", symbol, args)
        found = _table.get(key)
        if found is not None:
            return found
        e = object.__new__(cls)
        e.symbol = symbol
        _finish(e, args)
        _table[key] = e
        return e


class Call(Expr):
    """``procedure(x_child, args...)``: run ``procedure`` on input child ``child``."""
    __slots__ = ("procedure", "child")

    def __new__(cls, procedure: Hashable, child: int, args: Tuple[Expr, ...] = ()):
        if child < 1:
            raise ValueError(f"input variables start at x1, got x{child}")
        args = tuple(args)
        key = ("p", procedure, child, args)
        found = _table.get(key)
        if found is not None:
            return found
        e = object.__new__(cls)
        e.procedure = procedure
        e.child = child
        _finish(e, args)
        e.max_child = max(e.max_child, child)
        _table[key] = e
        return e


class Param(Expr):
    """Accumulating parameter ``y_index``."""
    __slots__ = ("index",)

    def __new__(cls, index: int):
        if index < 1:
            raise ValueError(f"parameters start at y1, got y{index}")
        key = ("y", index)
        found = _table.get(key)
        if found is not None:
            return found
        e = object.__new__(cls)
        e.index = index
        _finish(e, ())
        e.max_param = index
        _table[key] = e
        return e


def map_calls(e: Expr, rewrite: Callable[[Call, Tuple[Expr, ...]], Expr]) -> Expr:
    """Rebuild ``e`` bottom-up, replacing each call by ``rewrite(call, new_args)``."""
    if isinstance(e, Param):
        return e
    args = tuple(map_calls(a, rewrite) for a in e.args)
    if isinstance(e, Constructor):
        return Constructor(e.symbol, args)
    return rewrite(e, args)


def format_expr(e: Expr, show_procedure: Callable[[Hashable], str] = str) -> str:
    if isinstance(e, Param):
        return f"y{e.index}"
    inner = [format_expr(a, show_procedure) for a in e.args]
    if isinstance(e, Call):
        return f"{show_procedure(e.procedure)}(" + ", ".join([f"x{e.child}"] + inner) + ")"
    if not inner:
        return e.symbol
    return f"{e.symbol}(" + ", ".join(inner) + ")"
