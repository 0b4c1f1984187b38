import math

import pytest

from automata import parse_bta
from schema import decode_tree, encode_forest, format_forest, parse_document
from transducer import (
    Call,
    Constructor,
    Guard,
    Mtt,
    MttRule,
    Param,
    Typed,
    copy_bound,
    encode_input_type,
    evaluate,
    format_mtt,
    identity_mtt,
    is_total_deterministic_syntactic,
    load_mtt,
    parse_mtt,
    procedure_copy_bounds,
    reachable_procedures,
)
from trees import RankedAlphabet, enumerate_trees, leaf, parse_tree
from utils.errors import ArityError, ParseError

AB = RankedAlphabet({"a": 1, "b": 2})

SHARED_PARAMETER = """
alphabet: a/1, b/2
initial: p0
p0(a(x1)) -> p(x1, q(x1))
p(eps, y1) -> b(y1, y1)
q(eps) -> eps
q(eps) -> a(eps)
"""


def trees(m, *texts):
    return {parse_tree(t, m.alphabet) for t in texts}


def test_expressions_are_hash_consed():
    assert Constructor("b", (Param(1), Param(1))) is Constructor("b", (Param(1), Param(1)))
    e = Call("p", 2, (Constructor("eps"),))
    assert e.max_child == 2
    assert e.max_param == 0
    assert str(e) == "p(x2, eps)"
    with pytest.raises(ValueError):
        Param(0)


def test_parse_duplicate_param(fixture_dir):
    m = load_mtt(fixture_dir / "duplicate_param.mtt")
    assert m.initial == ("p0",)
    assert m.procedures == {"p0": 0, "p": 1}
    assert evaluate(m, parse_tree("a(eps)", m.alphabet)) == trees(m, "b(eps, eps)")
    assert evaluate(m, leaf()) == frozenset()


def test_parameters_are_evaluated_before_the_call():
    m = parse_mtt(SHARED_PARAMETER)
    # both copies of y1 carry the same choice
    assert evaluate(m, parse_tree("a(eps)", m.alphabet)) == trees(m, "b(eps, eps)", "b(a(eps), a(eps))")


def test_format_roundtrip():
    m = parse_mtt(SHARED_PARAMETER)
    again = parse_mtt(format_mtt(m))
    assert again.rules == m.rules
    assert again.procedures == m.procedures
    assert again.initial == m.initial


@pytest.mark.parametrize(
    "text",
    [
        "initial: p0\np0(a(x1)) -> q(x1)\nq(eps, y1) -> y1",
        "initial: p0\np0(a(x1)) -> x1",
        "initial: p0\np0(a(x2)) -> eps",
        "initial: p0\np0(a(x1)) -> b(eps)\np0(b(x1, x2)) -> eps",
        "initial: p0\np0(a(x1)) -> y1",
    ],
)
def test_parse_rejects_malformed_rules(text):
    with pytest.raises(ParseError):
        parse_mtt(text)


def test_mtt_checks_arities():
    with pytest.raises(ArityError):
        Mtt(AB, {"p0": 1}, ["p0"], [])
    with pytest.raises(ArityError):
        Mtt(AB, {"p0": 0}, ["p0"], [MttRule("p0", "a", Call("p0", 2))])
    with pytest.raises(ArityError):
        Mtt(AB, {"p0": 0}, ["p0"], [MttRule("p0", "eps", Constructor("b", (Param(1),)))])


def test_identity_copies_input():
    m = identity_mtt(AB)
    for t in enumerate_trees(AB, 5):
        assert evaluate(m, t) == frozenset([t])
    assert is_total_deterministic_syntactic(m)
    assert copy_bound(m) == 1


@pytest.mark.parametrize(
    "name, procedures, params, bound",
    [
        ("remove_b.mtt", 2, 1, 1),
        ("drop_div.mtt", 2, 1, 1),
        ("copy_links.mtt", 3, 1, 2),
        ("group_b.mtt", 4, 1, math.inf),
        ("toc_prepend.mtt", 8, 2, 2),
        ("toc_only.mtt", 8, 2, 1),
    ],
)
def test_shipped_transformations(fixture_dir, name, procedures, params, bound):
    m = load_mtt(fixture_dir / name)
    assert len(m.procedures) == procedures
    assert m.max_params == params
    assert copy_bound(m) == bound
    assert is_total_deterministic_syntactic(m)
    assert reachable_procedures(m) == frozenset(m.procedures)


HEAD = "<html><head><title/></head>"
LISTS = "<ul><li/><li><div><ul><li/><li/></ul></div></li></ul><p/>"
TOC = "<div><p><b/></p></div><div><p><b/><b/></p><p><b/></p><p><b/><b/></p></div>"


def transform(m, text):
    (out,) = evaluate(m, encode_forest([parse_document(text)]))
    return format_forest(decode_tree(out))


@pytest.mark.parametrize(
    "name, body, expected",
    [
        (
            "group_b.mtt",
            "<p><b><a/></b><b/><b><b/></b><a/><b/></p>",
            "<p><b><a/><b/></b><a/><b/></p>",
        ),
        ("toc_prepend.mtt", LISTS, f"<div>{TOC}</div>{LISTS}"),
        ("toc_only.mtt", LISTS, f"<div>{TOC}</div>"),
    ],
)
def test_transformations_on_a_document(fixture_dir, name, body, expected):
    m = load_mtt(fixture_dir / name)
    result = transform(m, f"{HEAD}<body>{body}</body></html>")
    assert result == f"{HEAD}<body>{expected}</body></html>"


def test_copy_bounds_of_shared_parameter():
    m = parse_mtt(SHARED_PARAMETER)
    assert procedure_copy_bounds(m) == {"p0": 2, "p": 1, "q": 1}
    assert not is_total_deterministic_syntactic(m)


def test_unbounded_copying():
    m = parse_mtt(
        """
        initial: p0
        p0(a(x1)) -> b(p0(x1), p0(x1))
        p0(eps) -> eps
        """
    )
    assert math.isinf(copy_bound(m))


def test_encoding_restricts_to_input_type(nondet_result):
    m = identity_mtt(nondet_result.alphabet)
    encoded = encode_input_type(m, nondet_result)
    assert all(isinstance(p, (Typed, Guard)) for p in encoded.procedures)
    for t in enumerate_trees(nondet_result.alphabet, 5):
        expected = frozenset([t]) if nondet_result.member(t) else frozenset()
        assert evaluate(encoded, t) == expected


def test_encoding_guards_unread_children(nondet_result):
    m = Mtt(nondet_result.alphabet, {"p0": 0}, ["p0"], [MttRule("p0", "b", Constructor("eps"))])
    encoded = encode_input_type(m, nondet_result)
    assert evaluate(encoded, parse_tree("b(eps, eps)", m.alphabet)) == frozenset([leaf()])
    assert evaluate(encoded, parse_tree("b(a(eps), eps)", m.alphabet)) == frozenset()
    assert any(isinstance(p, Guard) for p in encoded.procedures)


def test_encoding_trims_unreachable_procedures():
    in_type = parse_bta("alphabet: a/1, b/2\nfinal: q\nq <- eps")
    m = identity_mtt(AB)
    encoded = encode_input_type(m, in_type)
    assert set(encoded.procedures) == {Typed("id", "q")}
