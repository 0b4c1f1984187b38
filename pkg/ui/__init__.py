"""UI components and styles module."""

from .styles import get_custom_css
from .components import display_metric_cards, display_toggle_chart, display_toggle_table, display_witness

__all__ = [
    'get_custom_css',
    'display_metric_cards',
    'display_toggle_chart',
    'display_toggle_table',
    'display_witness'
]
