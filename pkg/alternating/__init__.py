"""Alternating tree automata: formulas, semantics, DNF, operations and bounds."""

from .formula import (
    BOTTOM,
    TOP,
    Formula,
    atom,
    neg_atom,
    conj,
    disj,
    conj_all,
    disj_all,
    dual,
    format_formula,
    has_negation,
    map_states,
    rewrite_atoms
)
from .ata import Ata, ata_accepts, ata_member, format_ata
from .dnf import EMPTY_PAIR, StateSetPair, dnf
from .operations import Negated, Product, Tagged, determinize_ata, intersect, negate, push_negation
from .bounds import INFINITY, is_bounded_traversing, pair_weight, solve_bounds, traversal_bound, traversal_bounds
from .parser import parse_ata, parse_formula

__all__ = [
    'BOTTOM',
    'TOP',
    'Formula',
    'atom',
    'neg_atom',
    'conj',
    'disj',
    'conj_all',
    'disj_all',
    'dual',
    'format_formula',
    'has_negation',
    'map_states',
    'rewrite_atoms',
    'Ata',
    'ata_accepts',
    'ata_member',
    'format_ata',
    'EMPTY_PAIR',
    'StateSetPair',
    'dnf',
    'Negated',
    'Product',
    'Tagged',
    'determinize_ata',
    'intersect',
    'negate',
    'push_negation',
    'INFINITY',
    'is_bounded_traversing',
    'pair_weight',
    'solve_bounds',
    'traversal_bound',
    'traversal_bounds',
    'parse_ata',
    'parse_formula'
]
