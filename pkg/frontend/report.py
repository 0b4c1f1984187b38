"""Run reports: one record per typechecking run."""

from typing import Dict, Optional

from pydantic import BaseModel, Field, model_validator

from config import EXIT_CODES, VERDICTS
from utils.formatters import format_ms


class RunReport(BaseModel):
    """
    Verdict, witness and statistics of a typechecking run.

    ``model_dump_json()`` is the machine-readable form; ``summary()`` the
    human-readable one.
    """
    verdict: str
    witness: Optional[str] = None
    decoded_witness: Optional[str] = None
    algo: str = "ours"
    ata_states_materialized: Optional[int] = None
    explored_pairs: Optional[int] = None
    output_states: int = 0
    procedures: int = 0
    max_params: int = 0
    copy_bound: str = "1"
    phase_ms: Dict[str, float] = Field(default_factory=dict)
    toggles: Dict[str, bool] = Field(default_factory=dict)
    oracle: Optional[str] = None

    @model_validator(mode="after")
    def _witness_matches_verdict(self) -> "RunReport":
        if self.verdict not in VERDICTS.values():
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if (self.witness is not None) != (self.verdict == VERDICTS['ILL_TYPED']):
            raise ValueError("a witness is present exactly when the verdict is ILL-TYPED")
        return self

    @property
    def well_typed(self) -> bool:
        return self.verdict == VERDICTS['WELL_TYPED']

    @property
    def exit_code(self) -> int:
        return EXIT_CODES['WELL_TYPED'] if self.well_typed else EXIT_CODES['ILL_TYPED']

    @property
    def total_ms(self) -> float:
        return sum(self.phase_ms.values())

    def verdict_line(self) -> str:
        if self.witness is None:
            return self.verdict
        return f"{self.verdict} witness={self.witness}"

    def summary(self, witness: bool = True, stats: bool = False) -> str:
        lines = [self.verdict_line()]
        if witness and self.decoded_witness:
            lines.append(f"  document: {self.decoded_witness}")
        if stats:
            lines.append(f"  algorithm: {self.algo}")
            lines.append(
                f"  procedures: {self.procedures}, max params: {self.max_params}, "
                f"copy bound: {self.copy_bound}"
            )
            lines.append(f"  output states: {self.output_states}")
            if self.ata_states_materialized is not None:
                lines.append(f"  ata states materialized: {self.ata_states_materialized}")
            if self.explored_pairs is not None:
                lines.append(f"  pairs explored: {self.explored_pairs}")
            if self.toggles:
                on = [name for name, value in self.toggles.items() if value]
                lines.append("  toggles: " + (", ".join(on) if on else "none"))
            for phase, ms in self.phase_ms.items():
                lines.append(f"  {phase}: {format_ms(ms / 1000.0)}")
            lines.append(f"  total: {format_ms(self.total_ms / 1000.0)}")
        if self.oracle:
            lines.append(f"  oracle: {self.oracle}")
        return "\n".join(lines)
