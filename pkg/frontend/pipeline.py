"""
The typechecking pipeline: load, determinize and complement the output type,
infer, intersect with the input type, decide emptiness, validate.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from alternating.ata import Ata
from alternating.operations import intersect
from automata.bta import Bta, Dbta, complement, determinize_complete
from automata.embed import bta_to_ata
from automata.parser import load_bta
from config import DEFAULT_TOGGLES, VERDICTS
from emptiness.checker import check_empty
from emptiness.preprocess import preprocess
from inference.basic import infer_basic
from inference.optimized import infer_optimized
from oracle.brute_force import OracleConfig, check_witness, oracle_typecheck
from reference.classical import classical_verdict
from reference.mps import mps_verdict
from schema.grammar import grammar_to_bta, load_grammar
from schema.unranked import decode_tree, format_forest, load_unranked_schema, schema_to_bta
from transducer.analysis import copy_bound
from transducer.mtt import Mtt
from transducer.parser import load_mtt
from trees import Tree, print_tree
from utils.errors import WitnessError
from utils.formatters import format_bound

from .report import RunReport

logger = logging.getLogger(__name__)

Decoder = Optional[Callable[[Tree], str]]


class TypecheckOptions(BaseModel):
    """Per-run knobs: algorithm, optimization toggles, output and oracle settings."""
    algo: Literal["ours", "classical", "mps"] = "ours"
    basic: bool = False
    cartesian: bool = DEFAULT_TOGGLES['cartesian']
    partition: bool = DEFAULT_TOGGLES['partition']
    complement_output: bool = DEFAULT_TOGGLES['complement_output']
    preprocess: bool = DEFAULT_TOGGLES['preprocess']
    witness: bool = False
    stats: bool = False
    oracle_depth: Optional[int] = Field(default=None, ge=1)
    max_subsets: Optional[int] = Field(default=None, ge=1)

    def toggles(self) -> Dict[str, bool]:
        return {
            'cartesian': self.cartesian,
            'partition': self.partition,
            'complement_output': self.complement_output,
            'preprocess': self.preprocess,
        }


def load_type(path: Path | str) -> Tuple[Bta, Decoder]:
    """
    Tree type from ``.bta``, ``.rtg`` (tree grammar) or ``.dtd`` (unranked
    content models) files; the decoder prints witnesses of unranked types.
    """
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".bta":
        return load_bta(path), None
    if suffix == ".rtg":
        return grammar_to_bta(load_grammar(path)), None
    if suffix == ".dtd":
        return schema_to_bta(load_unranked_schema(path)), lambda t: format_forest(decode_tree(t))
    raise ValueError(f"unknown type file suffix {path.suffix!r} (expected .bta, .rtg or .dtd)")


@dataclass
class TypecheckSession:
    """
    One typechecking problem with the intermediate results of every phase.

    The transducer and both types are moved to their common alphabet on
    construction.
    """
    mtt: Mtt
    in_type: Bta
    out_type: Bta
    options: TypecheckOptions = field(default_factory=TypecheckOptions)
    decoder: Decoder = None
    phase_ms: Dict[str, float] = field(default_factory=dict)
    out_dbta: Optional[Dbta] = None
    inferred: Optional[Ata] = None
    ata: Optional[Ata] = None
    explored: Optional[int] = None

    def __post_init__(self):
        alphabet = self.mtt.alphabet.union(self.in_type.alphabet).union(self.out_type.alphabet)
        self.mtt = self.mtt.with_alphabet(alphabet)
        self.in_type = self.in_type.with_alphabet(alphabet)
        self.out_type = self.out_type.with_alphabet(alphabet)

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.phase_ms[name] = (time.perf_counter() - start) * 1000.0
            logger.info(f"Phase {name}: {self.phase_ms[name]:.1f} ms")

    # -- phases ----------------------------------------------------------------

    def determinize(self) -> Dbta:
        with self.phase("determinize"):
            if self.out_type.is_deterministic_complete():
                self.out_dbta = Dbta.from_bta(self.out_type)
            else:
                self.out_dbta, _ = determinize_complete(self.out_type)
        return self.out_dbta

    def infer(self) -> Ata:
        out = self.out_dbta or self.determinize()
        with self.phase("infer"):
            if self.options.basic:
                self.inferred = infer_basic(self.mtt, complement(out))
            else:
                self.inferred = infer_optimized(self.mtt, out, self.options.toggles())
        return self.inferred

    def intersect(self) -> Ata:
        inferred = self.inferred or self.infer()
        with self.phase("intersect"):
            self.ata = intersect(bta_to_ata(self.in_type), inferred)
            if self.options.preprocess:
                self.ata = preprocess(self.ata)
        return self.ata

    def check(self) -> Optional[Tree]:
        ata = self.ata or self.intersect()
        with self.phase("emptiness"):
            result = check_empty(ata)
        self.explored = len(result.explored)
        return result.witness

    def validate(self, witness: Tree) -> None:
        with self.phase("validate"):
            check_witness(self.mtt, self.in_type, self.out_type, witness)

    # -- runs ------------------------------------------------------------------

    def witness(self) -> Optional[Tree]:
        """Counterexample found by the selected algorithm, or None."""
        algo = self.options.algo
        if algo == "classical":
            with self.phase("classical"):
                return classical_verdict(self.mtt, self.in_type, self.out_type)
        if algo == "mps":
            with self.phase("mps"):
                return mps_verdict(self.mtt, self.in_type, self.out_type, self.options.max_subsets)
        return self.check()

    def materialized(self) -> Optional[int]:
        if self.inferred is None:
            return None
        return len(self.inferred.materialized)

    def run(self) -> RunReport:
        witness = self.witness()
        if witness is not None:
            self.validate(witness)
        oracle_note = self.consult_oracle(witness)
        verdict = VERDICTS['WELL_TYPED'] if witness is None else VERDICTS['ILL_TYPED']
        logger.info(f"Verdict: {verdict}")
        decoded = None
        if witness is not None and self.decoder is not None:
            decoded = self.decoder(witness)
        return RunReport(
            verdict=verdict,
            witness=None if witness is None else print_tree(witness),
            decoded_witness=decoded,
            algo=self.options.algo,
            ata_states_materialized=self.materialized(),
            explored_pairs=self.explored,
            output_states=len(self.out_dbta.states) if self.out_dbta is not None else len(self.out_type.states),
            procedures=len(self.mtt.procedures),
            max_params=self.mtt.max_params,
            copy_bound=format_bound(copy_bound(self.mtt)),
            phase_ms=dict(self.phase_ms),
            toggles=self.options.toggles() if self.options.algo == "ours" else {},
            oracle=oracle_note,
        )

    def consult_oracle(self, witness: Optional[Tree]) -> Optional[str]:
        depth = self.options.oracle_depth
        if depth is None:
            return None
        with self.phase("oracle"):
            found = oracle_typecheck(self.mtt, self.in_type, self.out_type, OracleConfig(max_nodes=depth))
        if not found.well_typed and witness is None:
            logger.warning(f"Oracle disagrees: counterexample {print_tree(found.counterexample)}")
            raise WitnessError(
                f"oracle counterexample {print_tree(found.counterexample)} for a WELL-TYPED verdict"
            )
        return str(found)


def open_session(
    mtt_file: Path | str,
    in_type_file: Path | str,
    out_type_file: Path | str,
    options: Optional[TypecheckOptions] = None,
) -> TypecheckSession:
    """Load the three files into a session."""
    m = load_mtt(mtt_file)
    in_type, in_decoder = load_type(in_type_file)
    out_type, _ = load_type(out_type_file)
    return TypecheckSession(m, in_type, out_type, options or TypecheckOptions(), in_decoder)


def run_typecheck(
    mtt_file: Path | str,
    in_type_file: Path | str,
    out_type_file: Path | str,
    options: Optional[TypecheckOptions] = None,
) -> RunReport:
    """
    Typecheck the transducer in ``mtt_file`` against the two type files.

    Raises:
        ParseError, ValueError: unreadable inputs
        CapExceeded: a construction outgrew its cap
        WitnessError: a witness failed validation
    """
    return open_session(mtt_file, in_type_file, out_type_file, options).run()
