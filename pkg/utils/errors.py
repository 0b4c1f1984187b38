"""Exception types shared by the parsers, automata and the pipeline."""

from typing import Optional


class ParseError(ValueError):
    """Malformed input text, with the position of the offending token."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}")


class ArityError(ValueError):
    """A node, rule or call whose argument count disagrees with a declared arity."""


class AlphabetError(ValueError):
    """Unknown symbol, or two alphabets that disagree on an arity."""


class AutomatonError(ValueError):
    """An automaton that does not have the shape an operation requires."""


class CapExceeded(RuntimeError):
    """A construction grew past its configured limit."""

    def __init__(self, cap: str, limit: int):
        self.cap = cap
        self.limit = limit
        super().__init__(f"{cap} exceeded the configured limit of {limit}")


class WitnessError(RuntimeError):
    """A counterexample failed validation against the transducer and the types."""
