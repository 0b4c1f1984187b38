"""
Formatter utilities for states, bounds and verdicts in reports and the dashboard.
"""
import math

from .ordering import sorted_states


def format_state(state) -> str:
    """Readable text for a state of any of the automata."""
    if isinstance(state, str):
        return state
    if isinstance(state, (frozenset, set)):
        return "{" + ",".join(format_state(s) for s in sorted_states(state)) + "}"
    if isinstance(state, tuple):
        return "(" + ",".join(format_state(s) for s in state) + ")"
    return str(state)


def format_bound(bound) -> str:
    """Traversal and copy bounds: naturals or infinity."""
    if bound is None:
        return "-"
    if isinstance(bound, float) and math.isinf(bound):
        return "∞"
    return str(int(bound))


def format_ms(seconds: float) -> str:
    return f"{seconds * 1000.0:.1f} ms"


def style_verdict(verdict: str) -> str:
    """Apply color styling to verdict cells"""
    if verdict == "WELL-TYPED":
        return "background-color: rgba(0, 255, 65, 0.2); color: #00ff41; font-weight: bold;"
    if verdict == "ILL-TYPED":
        return "background-color: rgba(255, 51, 51, 0.2); color: #ff6666; font-weight: bold;"
    return ""


def get_states_color(val, baseline) -> str:
    """Green when a run materialized fewer ata states than the baseline, red when more."""
    if val is None or baseline is None:
        return ""
    if val < baseline:
        return "background-color: rgba(0, 255, 65, 0.2); color: #00ff41; font-weight: 600;"
    elif val == baseline:
        return "background-color: rgba(255, 215, 0, 0.2); color: #ffd700; font-weight: 500;"
    else:
        return "background-color: rgba(255, 51, 51, 0.2); color: #ff6666; font-weight: 500;"
