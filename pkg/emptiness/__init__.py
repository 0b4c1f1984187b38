"""Emptiness of alternating tree automata: implication systems and the top-down checker."""

from .implications import (
    ImplicationSystem,
    build_implications,
    derive_witnesses,
    goal_witness,
    solve_implications,
)
from .checker import EmptinessChecker, EmptinessResult, check_empty, format_verdict
from .preprocess import preprocess, trivial_states

__all__ = [
    'ImplicationSystem',
    'build_implications',
    'derive_witnesses',
    'goal_witness',
    'solve_implications',
    'EmptinessChecker',
    'EmptinessResult',
    'check_empty',
    'format_verdict',
    'preprocess',
    'trivial_states'
]
