"""Utility functions for ordering, formatting and error types."""

from .errors import (
    ParseError,
    ArityError,
    AlphabetError,
    AutomatonError,
    CapExceeded,
    WitnessError
)
from .formatters import (
    format_state,
    format_bound,
    format_ms,
    style_verdict,
    get_states_color
)
from .ordering import order_key, sorted_states

__all__ = [
    'ParseError',
    'ArityError',
    'AlphabetError',
    'AutomatonError',
    'CapExceeded',
    'WitnessError',
    'format_state',
    'format_bound',
    'format_ms',
    'style_verdict',
    'get_states_color',
    'order_key',
    'sorted_states'
]
