"""
Ground truth by enumeration: typechecking verdicts, language comparisons and
witness validation.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Union

from alternating.ata import Ata, ata_member
from automata.bta import Bta, enumerate_accepted
from config import ORACLE_DEFAULTS, VERDICTS
from transducer.evaluate import evaluate
from transducer.mtt import Mtt
from trees import Tree, enumerate_trees, print_tree
from utils.errors import WitnessError

logger = logging.getLogger(__name__)

Automaton = Union[Ata, Bta]


@dataclass
class OracleConfig:
    """
    Enumeration limits.

    Attributes:
        max_nodes: Largest tree size enumerated
        max_cases: Number of random instances in a suite
        seed: First seed of a suite
    """
    max_nodes: int = field(default=ORACLE_DEFAULTS['MAX_NODES'])
    max_cases: int = field(default=ORACLE_DEFAULTS['MAX_CASES'])
    seed: int = field(default=ORACLE_DEFAULTS['SEED'])

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError(f"max_nodes must be at least 1, got {self.max_nodes}")


@dataclass(frozen=True)
class OracleVerdict:
    """Either a counterexample or the bound up to which none exists."""
    max_nodes: int
    counterexample: Optional[Tree] = None

    @property
    def well_typed(self) -> bool:
        return self.counterexample is None

    def __str__(self) -> str:
        if self.counterexample is None:
            return f"no counterexample up to {self.max_nodes} nodes"
        return f"{VERDICTS['ILL_TYPED']} witness={print_tree(self.counterexample)}"


class LanguageComparison(NamedTuple):
    equal: bool
    counterexample: Optional[Tree] = None

    def __bool__(self) -> bool:
        return self.equal


def membership(a: Automaton) -> Callable[[Tree], bool]:
    """Membership test for either kind of automaton."""
    if isinstance(a, Bta):
        return a.member
    memo = {}
    return lambda t: ata_member(a, t, memo)


def output_violation(m: Mtt, out_type: Bta, t: Tree) -> Optional[Tree]:
    """Some output of ``m`` on ``t`` outside L(out_type), in printed order."""
    bad = [u for u in evaluate(m, t) if not out_type.member(u)]
    if not bad:
        return None
    return min(bad, key=print_tree)


def oracle_typecheck(m: Mtt, in_type: Bta, out_type: Bta, cfg: Optional[OracleConfig] = None) -> OracleVerdict:
    """
    First input of L(in_type) with at most ``cfg.max_nodes`` nodes that has
    an output outside L(out_type).

    Args:
        m: Transducer
        in_type: Input automaton
        out_type: Output automaton
        cfg: Enumeration limits (default: OracleConfig())
    """
    cfg = cfg or OracleConfig()
    memo = {}
    for t in enumerate_accepted(in_type, cfg.max_nodes):
        outputs = evaluate(m, t, memo)
        if any(not out_type.member(u) for u in outputs):
            logger.debug(f"Oracle counterexample {print_tree(t)}")
            return OracleVerdict(cfg.max_nodes, t)
    return OracleVerdict(cfg.max_nodes)


def language_equal_upto(a1: Automaton, a2: Automaton, max_nodes: int) -> LanguageComparison:
    """
    Membership agreement on every tree with at most ``max_nodes`` nodes.

    Returns:
        LanguageComparison, truthy when equal; otherwise carries the first
        tree on which the two disagree
    """
    alphabet = a1.alphabet.union(a2.alphabet)
    in_first = membership(a1)
    in_second = membership(a2)
    for t in enumerate_trees(alphabet, max_nodes):
        if in_first(t) != in_second(t):
            return LanguageComparison(False, t)
    return LanguageComparison(True)


def validate_witness(m: Mtt, in_type: Bta, out_type: Bta, witness: Tree) -> bool:
    """Exact check: the witness is a typed input with an ill-typed output."""
    return in_type.member(witness) and output_violation(m, out_type, witness) is not None


def check_witness(m: Mtt, in_type: Bta, out_type: Bta, witness: Tree) -> None:
    """
    Raises:
        WitnessError: ``witness`` is not a counterexample
    """
    if not in_type.member(witness):
        raise WitnessError(f"witness {print_tree(witness)} is not in the input type")
    if output_violation(m, out_type, witness) is None:
        raise WitnessError(f"every output of witness {print_tree(witness)} is in the output type")
