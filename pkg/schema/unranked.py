"""
Unranked documents and their content models, encoded first-child/next-sibling.

An element ``<l>c1 ... cn</l>`` followed by siblings s becomes the binary node
``l(enc(c1 ... cn), enc(s))``; ``eps`` ends every sibling list.

Schema text format:

    start: html
    html: head body
    body: (h1 | div | p)+
    p, h1: (b | a)*
    title: EMPTY
"""

import logging
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from automata.bta import Bta
from automata.parser import content_lines, header, name_list
from trees import EPS, RankedAlphabet, Tree
from utils.errors import ParseError
from utils.scanner import Scanner

from .grammar import Alias, Alternative, Production, TreeGrammar, grammar_to_bta

logger = logging.getLogger(__name__)


# ============================================================================
# CONTENT MODELS
# ============================================================================

@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Seq:
    items: Tuple["Model", ...]


@dataclass(frozen=True)
class Alt:
    items: Tuple["Model", ...]


@dataclass(frozen=True)
class Repeat:
    """``item*`` (at_least=0), ``item+`` (1) or ``item?`` (optional)."""
    item: "Model"
    at_least: int = 0
    optional: bool = False


Model = Union[Ref, Seq, Alt, Repeat]
EMPTY = Seq(())


@dataclass
class UnrankedSchema:
    elements: Dict[str, Model]
    start: str

    @property
    def labels(self) -> List[str]:
        return sorted(self.elements)

    def ranked_alphabet(self) -> RankedAlphabet:
        return RankedAlphabet({label: 2 for label in self.elements})


def _read_model(scanner: Scanner) -> Model:
    items = [_read_sequence(scanner)]
    while scanner.accept("|"):
        items.append(_read_sequence(scanner))
    return items[0] if len(items) == 1 else Alt(tuple(items))


def _read_sequence(scanner: Scanner) -> Model:
    items = []
    while scanner.current.kind == "name" or scanner.at("("):
        items.append(_read_factor(scanner))
    if not items:
        scanner.fail("expected a content model")
    return items[0] if len(items) == 1 else Seq(tuple(items))


def _read_factor(scanner: Scanner) -> Model:
    if scanner.accept("("):
        item = _read_model(scanner)
        scanner.expect(")")
    else:
        token = scanner.expect_kind("name", "an element name")
        item = EMPTY if token.text == "EMPTY" else Ref(token.text)
    if scanner.accept("*"):
        return Repeat(item)
    if scanner.accept("+"):
        return Repeat(item, at_least=1)
    if scanner.accept("?"):
        return Repeat(item, optional=True)
    return item


def _references(model: Model) -> List[str]:
    if isinstance(model, Ref):
        return [model.name]
    if isinstance(model, Repeat):
        return _references(model.item)
    return [name for item in model.items for name in _references(item)]


def parse_unranked_schema(text: str) -> UnrankedSchema:
    """
    Parse ``name[, name...]: model`` lines plus a ``start:`` header.

    Raises:
        ParseError: malformed models, duplicate or undeclared elements
    """
    start: Optional[str] = None
    elements: Dict[str, Model] = {}
    for number, line in content_lines(text):
        head = header(line)
        if head:
            key, value = head
            if key != "start":
                raise ParseError(f"unexpected header {key!r}", number)
            names = name_list(value, number)
            if len(names) != 1:
                raise ParseError("start: names exactly one element", number)
            start = names[0]
            continue
        names_part, sep, model_part = line.partition(":")
        if not sep:
            raise ParseError("expected 'name: model'", number)
        names = name_list(names_part, number)
        scanner = Scanner(model_part, number)
        model = _read_model(scanner)
        scanner.expect_end()
        for name in names:
            if name in elements:
                raise ParseError(f"element {name!r} declared twice", number)
            elements[name] = model

    if start is None:
        raise ParseError("missing start: header")
    for name, model in [("start", Ref(start))] + list(elements.items()):
        missing = [r for r in _references(model) if r not in elements]
        if missing:
            raise ParseError(f"{name} refers to undeclared elements {sorted(set(missing))}")
    return UnrankedSchema(elements, start)


def load_unranked_schema(path: Path | str) -> UnrankedSchema:
    return parse_unranked_schema(Path(path).read_text(encoding="utf-8"))


# ============================================================================
# ENCODING
# ============================================================================

class _Encoder:
    """
    Compiles content models by continuation: the nonterminal for (M, K)
    derives the sibling lists made of a match of M followed by a list of K.
    """

    def __init__(self, schema: UnrankedSchema):
        self.schema = schema
        self.productions: Dict[str, List[Alternative]] = {"end": [Production(EPS)]}
        self._compiled: Dict[Tuple[Model, str], str] = {}
        self._content: Dict[str, str] = {}
        self._counter = 0

    def fresh(self, hint: str) -> str:
        self._counter += 1
        name = f"{hint}.{self._counter}"
        self.productions[name] = []
        return name

    def content(self, label: str) -> str:
        """Nonterminal for the children lists allowed under ``label``."""
        found = self._content.get(label)
        if found is None:
            found = f"{label}.content"
            self._content[label] = found
            self.productions[found] = [Alias(self.compile(self.schema.elements[label], "end"))]
        return found

    def compile(self, model: Model, cont: str) -> str:
        key = (model, cont)
        found = self._compiled.get(key)
        if found is not None:
            return found
        if isinstance(model, Seq):
            result = cont
            for item in reversed(model.items):
                result = self.compile(item, result)
            self._compiled[key] = result
            return result

        nt = self.fresh(model.name if isinstance(model, Ref) else "list")
        self._compiled[key] = nt
        if isinstance(model, Ref):
            self.productions[nt].append(Production(model.name, (self.content(model.name), cont)))
        elif isinstance(model, Alt):
            self.productions[nt].extend(Alias(self.compile(item, cont)) for item in model.items)
        elif model.optional:
            self.productions[nt].extend([Alias(self.compile(model.item, cont)), Alias(cont)])
        elif model.at_least == 0:
            # nt = item nt | cont
            self.productions[nt].extend([Alias(cont), Alias(self.compile(model.item, nt))])
        else:
            star = self.compile(Repeat(model.item), cont)
            self.productions[nt].append(Alias(self.compile(model.item, star)))
        return nt


def encode_unranked(schema: UnrankedSchema) -> TreeGrammar:
    """Ranked grammar of the encodings of the documents valid for ``schema``."""
    encoder = _Encoder(schema)
    root = encoder.compile(Ref(schema.start), "end")
    grammar = TreeGrammar(encoder.productions, (root,), schema.ranked_alphabet())
    logger.debug(f"Encoded {len(schema.elements)} elements into {len(grammar.productions)} nonterminals")
    return grammar


def schema_to_bta(schema: UnrankedSchema) -> Bta:
    return grammar_to_bta(encode_unranked(schema))


# ============================================================================
# DOCUMENTS
# ============================================================================

@dataclass(frozen=True)
class Element:
    label: str
    children: Tuple["Element", ...] = ()


def encode_forest(forest: Sequence[Element]) -> Tree:
    """First-child/next-sibling encoding of a list of sibling elements."""
    result = Tree(EPS)
    for element in reversed(forest):
        result = Tree(element.label, (encode_forest(element.children), result))
    return result


def decode_tree(t: Tree) -> List[Element]:
    """Inverse of encode_forest."""
    forest = []
    while t.symbol != EPS:
        first, rest = t.children
        forest.append(Element(t.symbol, tuple(decode_tree(first))))
        t = rest
    return forest


def format_forest(forest: Sequence[Element]) -> str:
    """XML-like text; childless elements print as ``<l/>``."""
    parts = []
    for element in forest:
        if element.children:
            parts.append(f"<{element.label}>{format_forest(element.children)}</{element.label}>")
        else:
            parts.append(f"<{element.label}/>")
    return "".join(parts)


def parse_document(text: str) -> Element:
    """
    Element structure of an XML document; text and attributes are ignored.

    Raises:
        ParseError: not well-formed XML
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as e:
        line, column = e.position
        raise ParseError(f"malformed document: {e}", line, column + 1) from e

    def convert(node: ET.Element) -> Element:
        return Element(node.tag, tuple(convert(child) for child in node))

    return convert(root)
