"""
Seeded random typechecking instances at desk scale.
"""

import logging
from itertools import product
from typing import List, Mapping, Optional, Tuple

import numpy as np

from automata.bta import Bta, Rule
from config import RANDOM_LIMITS
from transducer.expr import Call, Constructor, Expr, Param
from transducer.mtt import Mtt, MttRule
from trees import EPS, RankedAlphabet

logger = logging.getLogger(__name__)

# (name, arity) pools; eps is always present
SYMBOL_POOL = [("a", 1), ("b", 2), ("c", 0)]


def _alphabet(rng: np.random.Generator, limits: Mapping[str, int]) -> RankedAlphabet:
    pool = [(n, k) for n, k in SYMBOL_POOL if k <= limits['MAX_ARITY']]
    count = int(rng.integers(1, max(2, limits['MAX_SYMBOLS'])))
    picks = rng.choice(len(pool), size=min(count, len(pool)), replace=False)
    return RankedAlphabet([pool[int(i)] for i in sorted(picks)])


def _random_bta(
    rng: np.random.Generator,
    alphabet: RankedAlphabet,
    limits: Mapping[str, int],
    deterministic: bool,
) -> Bta:
    size = int(rng.integers(1, limits['MAX_STATES'] + 1))
    states = [f"q{i}" for i in range(size)]
    rules: List[Rule] = []
    for symbol, arity in alphabet.symbols:
        for children in product(states, repeat=arity):
            if deterministic:
                rules.append(Rule(states[int(rng.integers(size))], symbol, children))
            else:
                for target in states:
                    if rng.random() < 0.4:
                        rules.append(Rule(target, symbol, children))
    final = [q for q in states if rng.random() < 0.5] or [states[0]]
    return Bta(alphabet, states, final, rules)


def _all_accepting(alphabet: RankedAlphabet) -> Bta:
    rules = [Rule("top", symbol, ("top",) * arity) for symbol, arity in alphabet.symbols]
    return Bta(alphabet, ["top"], ["top"], rules)


class _BodyGenerator:
    def __init__(self, rng: np.random.Generator, alphabet: RankedAlphabet, procedures: Mapping[str, int]):
        self.rng = rng
        self.alphabet = alphabet
        self.procedures = procedures
        self.names = sorted(procedures)

    def body(self, depth: int, n: int, k: int) -> Expr:
        choices = ["constructor"]
        if k:
            choices.append("param")
        if n:
            choices.extend(["call", "call"])
        kind = choices[int(self.rng.integers(len(choices)))]
        if kind == "param":
            return Param(int(self.rng.integers(1, k + 1)))
        if kind == "call":
            callee = self.names[int(self.rng.integers(len(self.names)))]
            width = self.procedures[callee]
            if width and depth <= 0:
                return Param(1) if k else Constructor(EPS)
            child = int(self.rng.integers(1, n + 1))
            return Call(callee, child, tuple(self.body(depth - 1, n, k) for _ in range(width)))
        if depth <= 0:
            return Constructor(EPS)
        symbols = self.alphabet.symbols
        symbol, arity = symbols[int(self.rng.integers(len(symbols)))]
        return Constructor(symbol, tuple(self.body(depth - 1, n, k) for _ in range(arity)))


def random_instance(seed: int, limits: Optional[Mapping[str, int]] = None) -> Tuple[Mtt, Bta, Bta]:
    """
    Deterministic (mtt, input type, output type) for ``seed``.

    Args:
        seed: Generator seed
        limits: Size limits (default: config.RANDOM_LIMITS)

    Returns:
        A well-formed transducer and two automata over the same alphabet
    """
    limits = dict(RANDOM_LIMITS if limits is None else limits)
    rng = np.random.default_rng(seed)
    alphabet = _alphabet(rng, limits)

    procedures = {"p0": 0}
    for i in range(1, int(rng.integers(1, limits['MAX_PROCEDURES'] + 1))):
        procedures[f"p{i}"] = int(rng.integers(0, limits['MAX_PARAMS'] + 1))

    generator = _BodyGenerator(rng, alphabet, procedures)
    rules: List[MttRule] = []
    for p in sorted(procedures):
        for symbol, n in alphabet.symbols:
            for _ in range(int(rng.integers(0, 3))):
                body = generator.body(limits['MAX_BODY_DEPTH'], n, procedures[p])
                rules.append(MttRule(p, symbol, body))
    m = Mtt(alphabet, procedures, ["p0"], rules)

    if rng.random() < 0.3:
        in_type = _all_accepting(alphabet)
    else:
        in_type = _random_bta(rng, alphabet, limits, deterministic=False)
    out_type = _random_bta(rng, alphabet, limits, deterministic=rng.random() < 0.75)
    logger.debug(f"Seed {seed}: {m!r}, in {in_type!r}, out {out_type!r}")
    return m, in_type, out_type
