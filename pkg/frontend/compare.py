"""Tabulating runs across optimization toggles."""

from itertools import product
from pathlib import Path
from typing import List, Optional

import pandas as pd

from config import DISPLAY_NAMES, FIXTURE_DIR, MINI_XHTML, TRANSFORMATIONS

from .pipeline import TypecheckOptions, run_typecheck
from .report import RunReport

TOGGLE_NAMES = ['cartesian', 'partition', 'complement_output']


def toggle_label(options: TypecheckOptions) -> str:
    on = [name for name in TOGGLE_NAMES if getattr(options, name)]
    return "+".join(on) if on else "none"


def report_row(report: RunReport, label: str) -> dict:
    return {
        DISPLAY_NAMES['toggles']: label,
        DISPLAY_NAMES['verdict']: report.verdict,
        DISPLAY_NAMES['ata_states_materialized']: report.ata_states_materialized or 0,
        DISPLAY_NAMES['output_states']: report.output_states,
        DISPLAY_NAMES['copy_bound']: report.copy_bound,
        DISPLAY_NAMES['total_ms']: report.total_ms,
    }


def toggle_combinations(base: Optional[TypecheckOptions] = None) -> List[TypecheckOptions]:
    """The eight settings of the three inference optimizations, all on first."""
    base = base or TypecheckOptions()
    return [
        base.model_copy(update=dict(zip(TOGGLE_NAMES, values)))
        for values in product([True, False], repeat=len(TOGGLE_NAMES))
    ]


def compare_toggles(
    mtt_file: Path | str,
    in_type_file: Path | str,
    out_type_file: Path | str,
    base: Optional[TypecheckOptions] = None,
) -> pd.DataFrame:
    """
    One row per toggle combination: verdict, materialized ata states,
    output states, copy bound and time.
    """
    rows = []
    for options in toggle_combinations(base):
        report = run_typecheck(mtt_file, in_type_file, out_type_file, options)
        rows.append(report_row(report, toggle_label(options)))
    return pd.DataFrame(rows)


def phase_table(report: RunReport) -> pd.DataFrame:
    """Per-phase wall time of one run, in milliseconds."""
    df = pd.DataFrame(
        {"PHASE": list(report.phase_ms), DISPLAY_NAMES['total_ms']: list(report.phase_ms.values())}
    )
    return df


def transformation_suite(options: Optional[TypecheckOptions] = None) -> pd.DataFrame:
    """The shipped mini-XHTML transformations with their expected verdicts."""
    schema = FIXTURE_DIR / MINI_XHTML
    rows = []
    for name, (mtt_name, expected) in TRANSFORMATIONS.items():
        report = run_typecheck(FIXTURE_DIR / mtt_name, schema, schema, options)
        row = report_row(report, toggle_label(options or TypecheckOptions()))
        row.update({
            "TRANSFORMATION": name,
            "EXPECTED": expected,
            "PROCEDURES": report.procedures,
            "MAX PARAMS": report.max_params,
            "WITNESS": report.decoded_witness or "",
        })
        rows.append(row)
    df = pd.DataFrame(rows)
    first = ["TRANSFORMATION", "EXPECTED"]
    return df[first + [c for c in df.columns if c not in first]]
