"""Macro tree transducers: expressions, semantics, analyses and input-type encoding."""

from .expr import Call, Constructor, Expr, Param, format_expr, map_calls
from .mtt import Mtt, MttRule, format_rule, identity_mtt
from .evaluate import evaluate, run_procedure
from .analysis import copy_bound, is_total_deterministic_syntactic, procedure_copy_bounds, reachable_procedures
from .encode import Guard, Typed, encode_input_type
from .parser import format_mtt, load_mtt, parse_mtt

__all__ = [
    'Call',
    'Constructor',
    'Expr',
    'Param',
    'format_expr',
    'map_calls',
    'Mtt',
    'MttRule',
    'format_rule',
    'identity_mtt',
    'evaluate',
    'run_procedure',
    'copy_bound',
    'is_total_deterministic_syntactic',
    'procedure_copy_bounds',
    'reachable_procedures',
    'Guard',
    'Typed',
    'encode_input_type',
    'format_mtt',
    'load_mtt',
    'parse_mtt'
]
