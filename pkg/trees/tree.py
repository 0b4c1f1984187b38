"""Finite ranked trees and their text form."""

from typing import Iterator, Tuple

from utils.errors import ArityError, ParseError
from utils.scanner import Scanner

from .alphabet import EPS, RankedAlphabet


class Tree:
    """
    Immutable ranked tree node.

    Equality is structural; hash and node count are computed once so trees
    can key the memo tables of evaluation and acceptance.
    """

    __slots__ = ("symbol", "children", "size", "_hash")

    def __init__(self, symbol: str, children: Tuple["Tree", ...] = ()):
        self.symbol = symbol
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)
        self._hash = hash((symbol, self.children))

    @property
    def arity(self) -> int:
        return len(self.children)

    def nodes(self) -> Iterator["Tree"]:
        """Pre-order walk over all subtrees."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def check(self, alphabet: RankedAlphabet) -> "Tree":
        """Raise ArityError unless every node matches the alphabet."""
        for node in self.nodes():
            expected = alphabet.arity(node.symbol)
            if expected != node.arity:
                raise ArityError(
                    f"symbol {node.symbol!r} has arity {expected} but {node.arity} children"
                )
        return self

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree) or self._hash != other._hash:
            return False
        return self.symbol == other.symbol and self.children == other.children

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tree({print_tree(self)!r})"

    def __str__(self) -> str:
        return print_tree(self)


def leaf(symbol: str = EPS) -> Tree:
    return Tree(symbol, ())


def print_tree(t: Tree) -> str:
    """``b(eps,eps)`` style; nullary symbols print bare."""
    if not t.children:
        return t.symbol
    return t.symbol + "(" + ",".join(print_tree(c) for c in t.children) + ")"


def parse_tree(text: str, alphabet: RankedAlphabet) -> Tree:
    """
    Parse ``name`` or ``name(tree, ..., tree)``.

    Args:
        text: Tree text, whitespace allowed between tokens
        alphabet: Alphabet used to check symbols and arities

    Returns:
        The parsed tree

    Raises:
        ParseError: on syntax errors, unknown symbols or arity mismatches
    """
    scanner = Scanner(text.replace("\n", " "))
    tree = read_tree(scanner, alphabet)
    scanner.expect_end()
    return tree


def read_tree(scanner: Scanner, alphabet: RankedAlphabet) -> Tree:
    """Read one tree at the scanner's position (used by other parsers too)."""
    token = scanner.expect_kind("name", "a symbol")
    if token.text not in alphabet:
        raise ParseError(f"unknown symbol {token.text!r}", token.line, token.column)
    children = []
    if scanner.accept("("):
        children.append(read_tree(scanner, alphabet))
        while scanner.accept(","):
            children.append(read_tree(scanner, alphabet))
        scanner.expect(")")
    expected = alphabet.arity(token.text)
    if len(children) != expected:
        raise ParseError(
            f"symbol {token.text!r} expects {expected} children, got {len(children)}",
            token.line,
            token.column,
        )
    return Tree(token.text, tuple(children))
