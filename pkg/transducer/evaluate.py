"""Set semantics of macro tree transducers (inside-out parameter passing)."""

from itertools import product
from typing import Dict, FrozenSet, Hashable, Optional, Tuple

from trees import Tree

from .expr import Call, Constructor, Expr, Param
from .mtt import Mtt

Memo = Dict[Tuple[Hashable, Tree, Tuple[Tree, ...]], FrozenSet[Tree]]


def run_procedure(
    m: Mtt,
    procedure: Hashable,
    t: Tree,
    params: Tuple[Tree, ...] = (),
    memo: Optional[Memo] = None,
) -> FrozenSet[Tree]:
    """⟦procedure⟧(t, params): union over the rules matching t's root."""
    memo = {} if memo is None else memo
    key = (procedure, t, params)
    found = memo.get(key)
    if found is not None:
        return found
    result = set()
    for body in m.bodies(procedure, t.symbol):
        result |= eval_expr(m, body, t.children, params, memo)
    frozen = frozenset(result)
    memo[key] = frozen
    return frozen


def eval_expr(
    m: Mtt,
    e: Expr,
    children: Tuple[Tree, ...],
    params: Tuple[Tree, ...],
    memo: Memo,
) -> FrozenSet[Tree]:
    if isinstance(e, Param):
        return frozenset([params[e.index - 1]])
    arg_sets = [eval_expr(m, a, children, params, memo) for a in e.args]
    if isinstance(e, Constructor):
        return frozenset(Tree(e.symbol, combo) for combo in product(*arg_sets))
    assert isinstance(e, Call)
    result = set()
    for combo in product(*arg_sets):
        result |= run_procedure(m, e.procedure, children[e.child - 1], combo, memo)
    return frozenset(result)


def evaluate(m: Mtt, t: Tree, memo: Optional[Memo] = None) -> FrozenSet[Tree]:
    """
    All outputs of ``m`` on ``t``.

    Args:
        m: Transducer
        t: Input tree over m's alphabet
        memo: Optional cache shared across calls on the same transducer

    Returns:
        Union of the results of the initial procedures (possibly empty)
    """
    memo = {} if memo is None else memo
    result = set()
    for p in m.initial:
        result |= run_procedure(m, p, t, (), memo)
    return frozenset(result)
