"""Small tokenizer shared by the text-format parsers."""

import re
from typing import List, NamedTuple, Optional

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<number>\d+)|(?P<op><-|->|[(),|&~*+?:\[\]]))")


class Token(NamedTuple):
    kind: str  # 'name', 'number', 'op' or 'end'
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1) -> List[Token]:
    """Split one line of text into tokens; columns are 1-based."""
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            column = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[column - 1]!r}", line, column)
        kind = match.lastgroup
        column = match.start(kind) + 1
        tokens.append(Token(kind, match.group(kind), line, column))
        pos = match.end()
    tokens.append(Token("end", "", line, stripped_end + 1))
    return tokens


class Scanner:
    """Cursor over a token list with the usual peek/expect helpers."""

    def __init__(self, text: str, line: int = 1):
        self.tokens = tokenize(text, line)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def at(self, text: str) -> bool:
        return self.current.text == text and self.current.kind != "end"

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.index += 1
        return token

    def accept(self, text: str) -> Optional[Token]:
        if self.at(text):
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            self.fail(f"expected {what}")
        return self.advance()

    def expect_end(self) -> None:
        if self.current.kind != "end":
            self.fail("unexpected trailing input")

    def fail(self, message: str):
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError(f"{message}, found {found}", token.line, token.column)
