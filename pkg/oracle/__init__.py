"""Brute-force oracles and random instances for cross-checking the typecheckers."""

from .brute_force import (
    LanguageComparison,
    OracleConfig,
    OracleVerdict,
    check_witness,
    language_equal_upto,
    membership,
    oracle_typecheck,
    output_violation,
    validate_witness,
)
from .random_instance import SYMBOL_POOL, random_instance

__all__ = [
    'LanguageComparison',
    'OracleConfig',
    'OracleVerdict',
    'check_witness',
    'language_equal_upto',
    'membership',
    'oracle_typecheck',
    'output_violation',
    'validate_witness',
    'SYMBOL_POOL',
    'random_instance'
]
