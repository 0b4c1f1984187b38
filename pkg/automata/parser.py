"""
Text format for bottom-up tree automata.

    alphabet: a/1, b/2        (optional; otherwise read off the rules)
    states: q0, q1, q2        (optional; otherwise read off the rules)
    final: q0
    q0 <- b(q1, q2)
    q1 <- eps

``#`` starts a comment.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

from trees import RankedAlphabet
from utils.errors import AlphabetError, AutomatonError, ParseError
from utils.ordering import sorted_states
from utils.scanner import Scanner

from .bta import Bta, Rule, format_rule


def content_lines(text: str) -> List[Tuple[int, str]]:
    """(line number, text) for every non-blank line, comments removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            lines.append((number, line))
    return lines


def header(line: str) -> Optional[Tuple[str, str]]:
    """Split ``key: value`` when ``key`` is a known header word."""
    key, sep, value = line.partition(":")
    key = key.strip()
    if sep and key in ("alphabet", "states", "final", "initial", "start"):
        return key, value.strip()
    return None


def name_list(value: str, line: int) -> List[str]:
    scanner = Scanner(value, line)
    names = []
    if scanner.current.kind == "end":
        return names
    names.append(scanner.expect_kind("name", "a name").text)
    while scanner.accept(","):
        names.append(scanner.expect_kind("name", "a name").text)
    scanner.expect_end()
    return names


def parse_alphabet(value: str, line: int) -> RankedAlphabet:
    try:
        return RankedAlphabet.parse(value)
    except AlphabetError as e:
        raise ParseError(str(e), line) from e


def parse_bta(text: str, alphabet: Optional[RankedAlphabet] = None) -> Bta:
    """
    Parse the text format above.

    Args:
        text: Automaton text
        alphabet: Alphabet to merge with the declared or inferred one

    Returns:
        The automaton

    Raises:
        ParseError: malformed lines, arity conflicts, undeclared states
    """
    declared_states: Optional[List[str]] = None
    final: List[str] = []
    arities: Dict[str, int] = {}
    declared = alphabet
    rules: List[Rule] = []

    for number, line in content_lines(text):
        head = header(line)
        if head:
            key, value = head
            if key == "alphabet":
                parsed = parse_alphabet(value, number)
                declared = parsed if declared is None else declared.union(parsed)
            elif key == "states":
                declared_states = name_list(value, number)
            elif key == "final":
                final = name_list(value, number)
            else:
                raise ParseError(f"unexpected header {key!r}", number)
            continue

        scanner = Scanner(line, number)
        target = scanner.expect_kind("name", "a state").text
        scanner.expect("<-")
        symbol_token = scanner.expect_kind("name", "a symbol")
        children: List[str] = []
        if scanner.accept("("):
            children.append(scanner.expect_kind("name", "a state").text)
            while scanner.accept(","):
                children.append(scanner.expect_kind("name", "a state").text)
            scanner.expect(")")
        scanner.expect_end()
        symbol = symbol_token.text
        if arities.setdefault(symbol, len(children)) != len(children):
            raise ParseError(
                f"symbol {symbol!r} used with arities {arities[symbol]} and {len(children)}",
                number,
                symbol_token.column,
            )
        rules.append(Rule(target, symbol, tuple(children)))

    try:
        inferred = RankedAlphabet(arities)
        merged = inferred if declared is None else declared.union(inferred)
    except AlphabetError as e:
        raise ParseError(str(e)) from e

    mentioned = set(final)
    for rule in rules:
        mentioned.add(rule.target)
        mentioned.update(rule.children)
    states = set(declared_states) if declared_states is not None else mentioned
    undeclared = mentioned - states
    if undeclared:
        raise ParseError(f"undeclared states {sorted_states(undeclared)}")
    try:
        return Bta(merged, states, final, rules)
    except AutomatonError as e:
        raise ParseError(str(e)) from e


def load_bta(path: Path | str, alphabet: Optional[RankedAlphabet] = None) -> Bta:
    return parse_bta(Path(path).read_text(encoding="utf-8"), alphabet)


def format_bta(m: Bta) -> str:
    """Inverse of parse_bta for automata whose states print as plain names."""
    lines = [
        "alphabet: " + ", ".join(f"{n}/{k}" for n, k in m.alphabet.symbols),
        "states: " + ", ".join(str(s) for s in sorted_states(m.states)),
        "final: " + ", ".join(str(s) for s in sorted_states(m.final)),
    ]
    for symbol, _ in m.alphabet.symbols:
        lines.extend(format_rule(r) for r in m.rules_for(symbol))
    return "\n".join(lines) + "\n"
