"""
Regular tree grammars over ranked alphabets.

    start: Doc
    Doc -> html(Head, End)
    List -> a(End, List) | End
    End -> eps

An alternative ``label(N1, ..., Nn)`` or a bare ``label`` builds a node; a bare
name that is itself a nonterminal is a unit production.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from automata.bta import Bta, Rule
from automata.parser import content_lines, header, name_list
from trees import RankedAlphabet
from utils.errors import AlphabetError, AutomatonError, ParseError
from utils.ordering import sorted_states
from utils.scanner import Scanner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Production:
    """``label(children...)``"""
    label: str
    children: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Alias:
    """Unit production ``N -> target``."""
    target: str


Alternative = Union[Production, Alias]


@dataclass
class TreeGrammar:
    """
    Nonterminals, start symbols and alternatives per nonterminal.

    Raises:
        AutomatonError: a start symbol or an alternative refers to an
            undeclared nonterminal
    """
    productions: Dict[str, List[Alternative]]
    start: Tuple[str, ...]
    alphabet: Optional[RankedAlphabet] = None
    labels: Dict[str, int] = field(init=False, default_factory=dict)

    def __post_init__(self):
        declared = set(self.productions)
        for s in self.start:
            if s not in declared:
                raise AutomatonError(f"start symbol {s} is not declared")
        for nt, alternatives in self.productions.items():
            for alt in alternatives:
                refs = (alt.target,) if isinstance(alt, Alias) else alt.children
                missing = [r for r in refs if r not in declared]
                if missing:
                    raise AutomatonError(f"{nt} refers to undeclared nonterminals {missing}")
                if isinstance(alt, Production):
                    n = len(alt.children)
                    if self.labels.setdefault(alt.label, n) != n:
                        raise AutomatonError(f"label {alt.label} used with two arities")

    @property
    def nonterminals(self) -> List[str]:
        return sorted(self.productions)

    def ranked_alphabet(self) -> RankedAlphabet:
        inferred = RankedAlphabet(self.labels)
        return inferred if self.alphabet is None else self.alphabet.union(inferred)

    def unit_closure(self, nt: str) -> FrozenSet[str]:
        """Nonterminals reachable from ``nt`` through unit productions, ``nt`` included."""
        seen = {nt}
        stack = [nt]
        while stack:
            current = stack.pop()
            for alt in self.productions[current]:
                if isinstance(alt, Alias) and alt.target not in seen:
                    seen.add(alt.target)
                    stack.append(alt.target)
        return frozenset(seen)


def grammar_to_bta(g: TreeGrammar) -> Bta:
    """
    Bta with one state per nonterminal accepting the trees it derives.

    Unit productions are closed away: N gets every node rule of every
    nonterminal in its unit closure.
    """
    rules = set()
    for nt in g.nonterminals:
        for reached in g.unit_closure(nt):
            for alt in g.productions[reached]:
                if isinstance(alt, Production):
                    rules.add(Rule(nt, alt.label, alt.children))
    m = Bta(g.ranked_alphabet(), g.productions, g.start, rules)
    logger.debug(f"Grammar with {len(g.productions)} nonterminals gives {len(rules)} rules")
    return m


def _read_alternative(scanner: Scanner, nonterminals) -> Alternative:
    label = scanner.expect_kind("name", "a label or nonterminal").text
    if scanner.accept("("):
        children = [scanner.expect_kind("name", "a nonterminal").text]
        while scanner.accept(","):
            children.append(scanner.expect_kind("name", "a nonterminal").text)
        scanner.expect(")")
        return Production(label, tuple(children))
    if label in nonterminals:
        return Alias(label)
    return Production(label)


def parse_grammar(text: str) -> TreeGrammar:
    """
    Parse the text format above.

    Raises:
        ParseError: malformed lines or undeclared nonterminals
    """
    start: List[str] = []
    alphabet: Optional[RankedAlphabet] = None
    bodies: List[Tuple[int, str, Scanner]] = []
    for number, line in content_lines(text):
        head = header(line)
        if head:
            key, value = head
            if key == "start":
                start = name_list(value, number)
            elif key == "alphabet":
                try:
                    alphabet = RankedAlphabet.parse(value)
                except AlphabetError as e:
                    raise ParseError(str(e), number) from e
            else:
                raise ParseError(f"unexpected header {key!r}", number)
            continue
        scanner = Scanner(line, number)
        nt = scanner.expect_kind("name", "a nonterminal").text
        scanner.expect("->")
        bodies.append((number, nt, scanner))
    if not start:
        raise ParseError("missing start: header")

    nonterminals = {nt for _, nt, _ in bodies}
    productions: Dict[str, List[Alternative]] = {nt: [] for nt in sorted_states(nonterminals)}
    for number, nt, scanner in bodies:
        productions[nt].append(_read_alternative(scanner, nonterminals))
        while scanner.accept("|"):
            productions[nt].append(_read_alternative(scanner, nonterminals))
        scanner.expect_end()
    try:
        return TreeGrammar(productions, tuple(start), alphabet)
    except AutomatonError as e:
        raise ParseError(str(e)) from e


def load_grammar(path: Path | str) -> TreeGrammar:
    return parse_grammar(Path(path).read_text(encoding="utf-8"))


def format_grammar(g: TreeGrammar) -> str:
    lines = ["start: " + ", ".join(g.start)]
    for nt in g.nonterminals:
        shown = []
        for alt in g.productions[nt]:
            if isinstance(alt, Alias):
                shown.append(alt.target)
            elif alt.children:
                shown.append(f"{alt.label}(" + ", ".join(alt.children) + ")")
            else:
                shown.append(alt.label)
        if shown:
            lines.append(f"{nt} -> " + " | ".join(shown))
    return "\n".join(lines) + "\n"
