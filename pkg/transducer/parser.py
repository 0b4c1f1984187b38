"""
Text format for macro tree transducers.

    alphabet: a/1, b/2          (optional; symbols are also read off the rules)
    initial: p0
    p0(a(x1)) -> p(x1, eps)
    p(eps, y1) -> b(y1, y1)

A rule head is ``proc(symbol(x1..xn), y1..yk)``. In a body, ``name(x<i>, ...)``
is a call when ``name`` heads some rule; ``y<j>`` is a parameter; everything
else is an output constructor.
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Set

from automata.parser import content_lines, header, name_list, parse_alphabet
from trees import RankedAlphabet
from utils.errors import AlphabetError, ArityError, ParseError
from utils.scanner import Scanner

from .expr import Call, Constructor, Expr, Param
from .mtt import Mtt, MttRule, format_rule

_INPUT_VAR = re.compile(r"x([1-9][0-9]*)$")
_PARAM_VAR = re.compile(r"y([1-9][0-9]*)$")


class _Head:
    def __init__(self, procedure: str, symbol: str, n: int, k: int, line: int, body: Scanner):
        self.procedure = procedure
        self.symbol = symbol
        self.n = n
        self.k = k
        self.line = line
        self.body = body


def _read_head(scanner: Scanner, line: int) -> _Head:
    procedure = scanner.expect_kind("name", "a procedure").text
    scanner.expect("(")
    symbol = scanner.expect_kind("name", "a symbol").text
    n = 0
    if scanner.accept("("):
        while True:
            token = scanner.expect_kind("name", "an input variable")
            n += 1
            if token.text != f"x{n}":
                raise ParseError(f"expected x{n}, found {token.text!r}", token.line, token.column)
            if not scanner.accept(","):
                break
        scanner.expect(")")
    k = 0
    while scanner.accept(","):
        token = scanner.expect_kind("name", "a parameter")
        k += 1
        if token.text != f"y{k}":
            raise ParseError(f"expected y{k}, found {token.text!r}", token.line, token.column)
    scanner.expect(")")
    scanner.expect("->")
    return _Head(procedure, symbol, n, k, line, scanner)


def _read_expr(scanner: Scanner, procedures: Set[str], arities: Dict[str, int]) -> Expr:
    token = scanner.expect_kind("name", "an expression")
    name = token.text
    if not scanner.accept("("):
        param = _PARAM_VAR.match(name)
        if param:
            return Param(int(param.group(1)))
        if _INPUT_VAR.match(name):
            raise ParseError(f"input variable {name} outside a call", token.line, token.column)
        _note_arity(arities, name, 0, token)
        return Constructor(name, ())

    if name in procedures and _INPUT_VAR.match(scanner.current.text or ""):
        var = scanner.advance()
        child = int(_INPUT_VAR.match(var.text).group(1))
        args: List[Expr] = []
        while scanner.accept(","):
            args.append(_read_expr(scanner, procedures, arities))
        scanner.expect(")")
        return Call(name, child, tuple(args))

    args = [_read_expr(scanner, procedures, arities)]
    while scanner.accept(","):
        args.append(_read_expr(scanner, procedures, arities))
    scanner.expect(")")
    _note_arity(arities, name, len(args), token)
    return Constructor(name, tuple(args))


def _note_arity(arities: Dict[str, int], symbol: str, n: int, token) -> None:
    if arities.setdefault(symbol, n) != n:
        raise ParseError(
            f"symbol {symbol!r} used with arities {arities[symbol]} and {n}", token.line, token.column
        )


def parse_mtt(text: str, alphabet: Optional[RankedAlphabet] = None) -> Mtt:
    """
    Parse the text format above.

    Raises:
        ParseError: malformed rules, inconsistent arities, bodies that are not
            well-formed for their head
    """
    declared = alphabet
    initial: List[str] = []
    heads: List[_Head] = []

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
        heads.append(_read_head(Scanner(line, number), number))

    procedures: Dict[str, int] = {}
    arities: Dict[str, int] = dict(declared.symbols) if declared is not None else {}
    for h in heads:
        if procedures.setdefault(h.procedure, h.k) != h.k:
            raise ParseError(f"procedure {h.procedure!r} declared with two arities", h.line)
        if arities.setdefault(h.symbol, h.n) != h.n:
            raise ParseError(f"symbol {h.symbol!r} used with two arities", h.line)
    for p in initial:
        procedures.setdefault(p, 0)

    rules: List[MttRule] = []
    for h in heads:
        body = _read_expr(h.body, set(procedures), arities)
        h.body.expect_end()
        rules.append(MttRule(h.procedure, h.symbol, body))

    try:
        return Mtt(RankedAlphabet(arities), procedures, initial, rules)
    except (AlphabetError, ArityError) as e:
        raise ParseError(str(e)) from e


def load_mtt(path: Path | str, alphabet: Optional[RankedAlphabet] = None) -> Mtt:
    return parse_mtt(Path(path).read_text(encoding="utf-8"), alphabet)


def format_mtt(m: Mtt) -> str:
    """Text form; re-parses when procedure ids print as plain names."""
    lines = [
        "alphabet: " + ", ".join(f"{n}/{k}" for n, k in m.alphabet.symbols),
        "initial: " + ", ".join(str(p) for p in m.initial),
    ]
    lines.extend(format_rule(r, m.alphabet, m.arity(r.procedure)) for r in m.rules)
    return "\n".join(lines) + "\n"
