"""Macro tree transducers."""

import logging
from collections import defaultdict
from typing import Dict, Hashable, Iterable, List, Mapping, NamedTuple, Tuple

from trees import RankedAlphabet
from utils.errors import AlphabetError, ArityError
from utils.ordering import order_key, sorted_states

from .expr import Call, Constructor, Expr, Param, format_expr

logger = logging.getLogger(__name__)

Procedure = Hashable


class MttRule(NamedTuple):
    """``procedure(symbol(x1..xn), y1..yk) -> body``"""
    procedure: Procedure
    symbol: str
    body: Expr


class Mtt:
    """
    Nondeterministic macro tree transducer.

    Args:
        alphabet: Input and output symbols
        procedures: Procedure id -> number of accumulating parameters
        initial: Initial procedures (arity 0)
        rules: Transformation rules

    Raises:
        ArityError, AlphabetError: when a rule body is not a well-formed
            expression for its procedure and symbol
    """

    def __init__(
        self,
        alphabet: RankedAlphabet,
        procedures: Mapping[Procedure, int],
        initial: Iterable[Procedure],
        rules: Iterable[MttRule],
    ):
        self.alphabet = alphabet
        self.procedures: Dict[Procedure, int] = dict(procedures)
        self.initial: Tuple[Procedure, ...] = tuple(sorted_states(set(initial)))
        self.rules: Tuple[MttRule, ...] = tuple(
            sorted((MttRule(*r) for r in rules), key=_rule_order)
        )

        for p in self.initial:
            if p not in self.procedures:
                raise ArityError(f"initial procedure {p} is not declared")
            if self.procedures[p] != 0:
                raise ArityError(f"initial procedure {p} must have arity 0")

        self._index: Dict[Tuple[Procedure, str], List[Expr]] = defaultdict(list)
        for rule in self.rules:
            if rule.procedure not in self.procedures:
                raise ArityError(f"rule for undeclared procedure {rule.procedure}")
            n = self.alphabet.arity(rule.symbol)
            k = self.procedures[rule.procedure]
            self._check_body(rule.body, n, k, rule)
            self._index[(rule.procedure, rule.symbol)].append(rule.body)

    def _check_body(self, e: Expr, n: int, k: int, rule: MttRule) -> None:
        where = f"in rule {format_rule(rule)}"
        if e.max_param > k:
            raise ArityError(f"y{e.max_param} used with only {k} parameters {where}")
        if e.max_child > n:
            raise ArityError(f"x{e.max_child} used under a symbol of arity {n} {where}")
        for sub in e.subexpressions():
            if isinstance(sub, Constructor):
                if sub.symbol not in self.alphabet:
                    raise AlphabetError(f"unknown output symbol {sub.symbol!r} {where}")
                if self.alphabet.arity(sub.symbol) != len(sub.args):
                    raise ArityError(f"{sub.symbol} built with {len(sub.args)} children {where}")
            elif isinstance(sub, Call):
                if sub.procedure not in self.procedures:
                    raise ArityError(f"call to undeclared procedure {sub.procedure} {where}")
                if self.procedures[sub.procedure] != len(sub.args):
                    raise ArityError(
                        f"{sub.procedure} called with {len(sub.args)} arguments, "
                        f"expects {self.procedures[sub.procedure]} {where}"
                    )

    def bodies(self, procedure: Procedure, symbol: str) -> List[Expr]:
        return self._index.get((procedure, symbol), [])

    def arity(self, procedure: Procedure) -> int:
        return self.procedures[procedure]

    @property
    def max_params(self) -> int:
        return max(self.procedures.values(), default=0)

    def with_alphabet(self, alphabet: RankedAlphabet) -> "Mtt":
        return Mtt(self.alphabet.union(alphabet), self.procedures, self.initial, self.rules)

    def with_initial(self, initial: Iterable[Procedure]) -> "Mtt":
        return Mtt(self.alphabet, self.procedures, initial, self.rules)

    def __repr__(self) -> str:
        return f"Mtt(procedures={len(self.procedures)}, rules={len(self.rules)})"


def _rule_order(rule: MttRule) -> tuple:
    return (order_key(rule.procedure), rule.symbol, format_expr(rule.body))


def format_rule(rule: MttRule, alphabet: RankedAlphabet = None, arity: int = None) -> str:
    n = alphabet.arity(rule.symbol) if alphabet is not None else rule.body.max_child
    k = arity if arity is not None else rule.body.max_param
    pattern = rule.symbol
    if n:
        pattern += "(" + ", ".join(f"x{i}" for i in range(1, n + 1)) + ")"
    head = ", ".join([pattern] + [f"y{j}" for j in range(1, k + 1)])
    return f"{rule.procedure}({head}) -> {format_expr(rule.body)}"


def identity_mtt(alphabet: RankedAlphabet, name: str = "id") -> Mtt:
    """The transducer that copies its input."""
    rules = [
        MttRule(name, symbol, Constructor(symbol, tuple(Call(name, i) for i in range(1, n + 1))))
        for symbol, n in alphabet.symbols
    ]
    return Mtt(alphabet, {name: 0}, [name], rules)
