import pytest

from schema import (
    EMPTY,
    Alias,
    Alt,
    Element,
    Production,
    Ref,
    Repeat,
    decode_tree,
    encode_forest,
    encode_unranked,
    format_forest,
    format_grammar,
    grammar_to_bta,
    parse_document,
    parse_grammar,
    parse_unranked_schema,
    schema_to_bta,
)
from trees import leaf, parse_tree
from utils.errors import ParseError

from tests.conftest import XHTML_LABELS

LINKS = """
start: Doc
Doc -> html(Head, List)
Head -> head(End, End)
List -> a(End, List) | End
End -> eps
"""

VALID_PAGE = "<html><head><title/></head><body><p>see <a>here</a></p><ul><li/></ul></body></html>"


def test_parse_grammar_reads_alternatives():
    g = parse_grammar(LINKS)
    assert g.start == ("Doc",)
    assert g.nonterminals == ["Doc", "End", "Head", "List"]
    assert g.productions["List"] == [Production("a", ("End", "List")), Alias("End")]
    assert g.productions["End"] == [Production("eps")]
    assert g.unit_closure("List") == frozenset(["List", "End"])


def test_grammar_to_bta_closes_unit_productions():
    m = grammar_to_bta(parse_grammar(LINKS))
    assert m.member(parse_tree("html(head(eps, eps), a(eps, a(eps, eps)))", m.alphabet))
    assert m.member(parse_tree("html(head(eps, eps), eps)", m.alphabet))
    assert not m.member(parse_tree("html(eps, eps)", m.alphabet))
    lists = m.with_final(["List"])
    assert lists.member(leaf())


def test_format_grammar_roundtrip():
    g = parse_grammar(LINKS)
    again = parse_grammar(format_grammar(g))
    assert again.productions == g.productions
    assert again.start == g.start


@pytest.mark.parametrize(
    "text",
    [
        "Doc -> eps",
        "start: Doc\nDoc -> html(Missing, Missing)",
        "start: Other\nDoc -> eps",
        "start: Doc\nDoc -> a(Doc) | a(Doc, Doc)",
        "start: Doc\nDoc eps",
    ],
)
def test_parse_grammar_errors(text):
    with pytest.raises(ParseError):
        parse_grammar(text)


def test_parse_unranked_schema(xhtml_schema):
    assert xhtml_schema.start == "html"
    assert xhtml_schema.labels == XHTML_LABELS
    assert xhtml_schema.elements["title"] == EMPTY
    assert xhtml_schema.elements["html"].items == (Ref("head"), Ref("body"))
    body = xhtml_schema.elements["body"]
    assert isinstance(body, Repeat) and body.at_least == 1
    assert isinstance(body.item, Alt)
    assert xhtml_schema.elements["p"] == xhtml_schema.elements["a"]


@pytest.mark.parametrize(
    "text",
    [
        "a: EMPTY",
        "start: a\na: EMPTY\na: b*",
        "start: a\na: b*",
        "start: a\na: (EMPTY",
        "start: a\na",
        "start: a, b\na: EMPTY\nb: EMPTY",
    ],
)
def test_parse_unranked_schema_errors(text):
    with pytest.raises(ParseError):
        parse_unranked_schema(text)


def test_optional_and_plus_models():
    schema = parse_unranked_schema("start: r\nr: x? y+\nx, y: EMPTY")
    m = schema_to_bta(schema)
    accepted = {
        "<r><y/></r>": True,
        "<r><x/><y/><y/></r>": True,
        "<r><x/></r>": False,
        "<r><x/><x/><y/></r>": False,
        "<r><y/><x/></r>": False,
    }
    for text, expected in accepted.items():
        assert m.member(encode_forest([parse_document(text)])) == expected, text


def test_encoded_grammar_uses_binary_labels(xhtml_schema):
    g = encode_unranked(xhtml_schema)
    alphabet = g.ranked_alphabet()
    assert all(alphabet.arity(label) == 2 for label in XHTML_LABELS)
    assert len(g.start) == 1


def test_documents_against_mini_xhtml(xhtml_bta):
    page = parse_document(VALID_PAGE)
    assert xhtml_bta.member(encode_forest([page]))
    invalid = [
        "<html><head><title/></head><body/></html>",
        "<html><head><title><b/></title></head><body><p/></body></html>",
        "<html><body><p/></body><head><title/></head></html>",
        "<html><head><title/></head><body><li/></body></html>",
    ]
    for text in invalid:
        assert not xhtml_bta.member(encode_forest([parse_document(text)])), text


def test_forest_encoding():
    forest = [Element("p", (Element("b"), Element("a", (Element("b"),)))), Element("ul")]
    t = encode_forest(forest)
    assert str(t) == "p(b(eps,a(b(eps,eps),eps)),ul(eps,eps))"
    assert decode_tree(t) == forest
    assert encode_forest([]) == leaf()
    assert format_forest(forest) == "<p><b/><a><b/></a></p><ul/>"


def test_parse_document_drops_text_and_attributes():
    page = parse_document(VALID_PAGE)
    assert format_forest([page]) == (
        "<html><head><title/></head><body><p><a/></p><ul><li/></ul></body></html>"
    )
    assert parse_document('<p class="x">a<b/>c</p>') == Element("p", (Element("b"),))


def test_parse_document_reports_position():
    with pytest.raises(ParseError) as info:
        parse_document("<html>\n<head></html>")
    assert info.value.line == 2
