"""
Text format for alternating tree automata.

    alphabet: a/1, b/2          (optional; symbols are also read off the lines)
    initial: X
    state X: b(2) -> (d 1 X & ~d 2 Y)
    state Y: eps(0) -> T

Formulas: ``T``, ``F``, ``d i X``, ``~d i X``, ``(f & g & ...)``, ``(f | g | ...)``.
Transitions that are not listed are ``F``.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

from automata.parser import content_lines, header, name_list, parse_alphabet
from trees import RankedAlphabet
from utils.errors import AlphabetError, ParseError
from utils.scanner import Scanner

from .ata import Ata
from .formula import BOTTOM, TOP, Formula, atom, conj_all, disj_all, neg_atom


def read_formula(scanner: Scanner) -> Formula:
    """One formula at the scanner position; binary operators need parentheses."""
    if scanner.accept("("):
        parts = [read_formula(scanner)]
        op = None
        while scanner.at("&") or scanner.at("|"):
            token = scanner.advance()
            if op is not None and token.text != op:
                raise ParseError("mixing & and | needs parentheses", token.line, token.column)
            op = token.text
            parts.append(read_formula(scanner))
        scanner.expect(")")
        if op == "|":
            return disj_all(parts)
        return conj_all(parts)
    negative = scanner.accept("~") is not None
    token = scanner.expect_kind("name", "a formula")
    if token.text == "T" and not negative:
        return TOP
    if token.text == "F" and not negative:
        return BOTTOM
    if token.text != "d":
        raise ParseError(f"expected T, F or d, found {token.text!r}", token.line, token.column)
    index = int(scanner.expect_kind("number", "a child index").text)
    if index < 1:
        raise ParseError("child indices start at 1", token.line, token.column)
    state = scanner.expect_kind("name", "a state").text
    return neg_atom(index, state) if negative else atom(index, state)


def parse_formula(text: str) -> Formula:
    scanner = Scanner(text)
    f = read_formula(scanner)
    scanner.expect_end()
    return f


def parse_ata(text: str, alphabet: Optional[RankedAlphabet] = None) -> Ata:
    """
    Parse the text format above into an explicit-table ata.

    Raises:
        ParseError: malformed lines, child index beyond the symbol's arity,
            duplicate transitions, arity conflicts
    """
    initial: List[str] = []
    arities: Dict[str, int] = {}
    declared = alphabet
    table: Dict[Tuple[str, str], Formula] = {}
    states = set()

    for number, line in content_lines(text):
        head = header(line)
        if head:
            key, value = head
            if key == "alphabet":
                parsed = parse_alphabet(value, number)
                declared = parsed if declared is None else declared.union(parsed)
            elif key == "initial":
                initial = name_list(value, number)
            else:
                raise ParseError(f"unexpected header {key!r}", number)
            continue

        scanner = Scanner(line, number)
        keyword = scanner.expect_kind("name", "'state'")
        if keyword.text != "state":
            raise ParseError("expected 'state'", number, keyword.column)
        state = scanner.expect_kind("name", "a state").text
        scanner.expect(":")
        symbol_token = scanner.expect_kind("name", "a symbol")
        scanner.expect("(")
        arity = int(scanner.expect_kind("number", "an arity").text)
        scanner.expect(")")
        scanner.expect("->")
        formula = read_formula(scanner)
        scanner.expect_end()

        symbol = symbol_token.text
        if arities.setdefault(symbol, arity) != arity:
            raise ParseError(f"symbol {symbol!r} used with two arities", number, symbol_token.column)
        if formula.max_index > arity:
            raise ParseError(f"child {formula.max_index} exceeds arity {arity}", number)
        if (state, symbol) in table:
            raise ParseError(f"second transition for state {state!r} on {symbol!r}", number)
        table[(state, symbol)] = formula
        states.add(state)
        states |= formula.states()

    try:
        inferred = RankedAlphabet(arities)
        merged = inferred if declared is None else declared.union(inferred)
    except AlphabetError as e:
        raise ParseError(str(e)) from e
    return Ata.from_table(merged, initial, table, states | set(initial))


def load_ata(path: Path | str) -> Ata:
    return parse_ata(Path(path).read_text(encoding="utf-8"))
