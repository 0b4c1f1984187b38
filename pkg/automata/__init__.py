"""Bottom-up tree automata: acceptance, determinization, emptiness and parsing."""

from .bta import (
    Bta,
    Dbta,
    Rule,
    accepts,
    bta_empty,
    bta_inhabitant,
    bta_intersect,
    complement,
    determinize_complete,
    enumerate_accepted,
    format_rule,
    inhabitants
)
from .parser import format_bta, load_bta, parse_bta
from .embed import bta_to_ata

__all__ = [
    'Bta',
    'Dbta',
    'Rule',
    'accepts',
    'bta_empty',
    'bta_inhabitant',
    'bta_intersect',
    'complement',
    'determinize_complete',
    'enumerate_accepted',
    'format_rule',
    'inhabitants',
    'format_bta',
    'load_bta',
    'parse_bta',
    'bta_to_ata'
]
