"""Typechecking pipeline, run reports and toggle comparisons."""

from .report import RunReport
from .pipeline import TypecheckOptions, TypecheckSession, load_type, open_session, run_typecheck
from .compare import (
    TOGGLE_NAMES,
    compare_toggles,
    phase_table,
    report_row,
    toggle_combinations,
    toggle_label,
    transformation_suite,
)

__all__ = [
    'RunReport',
    'TypecheckOptions',
    'TypecheckSession',
    'load_type',
    'open_session',
    'run_typecheck',
    'TOGGLE_NAMES',
    'compare_toggles',
    'phase_table',
    'report_row',
    'toggle_combinations',
    'toggle_label',
    'transformation_suite'
]
