"""Backward type inference from transducers and output automata to alternating automata."""

from .states import AtaStateId
from .basic import BasicInference, basic_state_universe, infer_basic
from .cartesian import cartesian_decompose, expand
from .partition import EquivFamily, choice, classes, compute_equiv_family, join, one_class, split
from .optimized import OptimizedInference, infer_optimized

__all__ = [
    'AtaStateId',
    'BasicInference',
    'basic_state_universe',
    'infer_basic',
    'cartesian_decompose',
    'expand',
    'EquivFamily',
    'choice',
    'classes',
    'compute_equiv_family',
    'join',
    'one_class',
    'split',
    'OptimizedInference',
    'infer_optimized'
]
