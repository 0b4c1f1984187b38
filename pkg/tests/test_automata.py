import pytest

from alternating import ata_member
from automata import (
    Bta,
    Dbta,
    Rule,
    accepts,
    bta_empty,
    bta_inhabitant,
    bta_intersect,
    bta_to_ata,
    complement,
    determinize_complete,
    enumerate_accepted,
    format_bta,
    parse_bta,
)
from oracle import language_equal_upto
from trees import RankedAlphabet, enumerate_trees, leaf, parse_tree
from utils.errors import AutomatonError, ParseError


def test_parse_reads_rules_and_finals(nondet_result):
    assert nondet_result.final == frozenset(["q0"])
    assert nondet_result.states == frozenset(["q0", "q1", "q2"])
    t = parse_tree("b(eps, eps)", nondet_result.alphabet)
    assert accepts(nondet_result, t) == frozenset(["q0"])
    assert accepts(nondet_result, leaf()) == frozenset(["q1", "q2"])


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_bta("final: q\nq <- a(q)\nq <- a(q, q)")
    with pytest.raises(ParseError):
        parse_bta("states: q\nfinal: q\nr <- eps")
    with pytest.raises(ParseError):
        parse_bta("q <- ")


def test_format_roundtrip(even_a):
    again = parse_bta(format_bta(even_a))
    assert again.rules == even_a.rules
    assert again.final == even_a.final
    assert again.alphabet == even_a.alphabet


def test_bta_rejects_undeclared_states(ab_alphabet):
    with pytest.raises(AutomatonError):
        Bta(ab_alphabet, ["q"], ["r"], [])
    with pytest.raises(AutomatonError):
        Bta(ab_alphabet, ["q"], ["q"], [Rule("q", "a", ("r",))])
    with pytest.raises(AutomatonError):
        Bta(ab_alphabet, ["q"], ["q"], [Rule("q", "a", ("q", "q"))])


def test_dbta_requires_determinism(nondet_result, even_a):
    with pytest.raises(AutomatonError):
        Dbta.from_bta(nondet_result)
    d = Dbta.from_bta(even_a)
    assert d.step("a", ("even",)) == "odd"
    assert d.state_of(parse_tree("a(a(eps))", d.alphabet)) == "even"


def test_determinize_preserves_language(nondet_result):
    d, subsets = determinize_complete(nondet_result)
    assert d.is_deterministic_complete()
    assert frozenset() in d.states
    assert all(subsets[s] == s for s in d.states)
    assert language_equal_upto(d, nondet_result, 6)


def test_complement_flips_membership(nondet_result):
    d, _ = determinize_complete(nondet_result)
    c = complement(d)
    for t in enumerate_trees(d.alphabet, 5):
        assert c.member(t) != nondet_result.member(t)


def test_complement_requires_dbta(nondet_result):
    with pytest.raises(AutomatonError):
        complement(nondet_result)


def test_inhabitant_and_emptiness(even_a, ab_alphabet):
    assert bta_inhabitant(even_a) == leaf()
    odd = even_a.with_final(["odd"])
    assert bta_inhabitant(odd) == parse_tree("a(eps)", odd.alphabet)
    nothing = Bta(ab_alphabet, ["q"], ["q"], [Rule("q", "a", ("q",))])
    assert bta_empty(nothing)


def test_intersection(even_a):
    three = parse_bta(
        """
        alphabet: a/1
        final: r0
        r0 <- eps
        r1 <- a(r0)
        r2 <- a(r1)
        r0 <- a(r2)
        """
    )
    both = bta_intersect(even_a, three)
    # a^n(eps) with n divisible by 6
    assert bta_inhabitant(both) == leaf()
    sizes = [t.size - 1 for t in enumerate_accepted(both, 14)]
    assert sizes == [0, 6, 12]


def test_enumerate_accepted_matches_filtering(nondet_result, xhtml_bta):
    for m in (nondet_result, xhtml_bta):
        expected = [t for t in enumerate_trees(m.alphabet, 7) if m.member(t)]
        assert enumerate_accepted(m, 7) == expected


def test_smallest_xhtml_document(xhtml_bta):
    found = enumerate_accepted(xhtml_bta, 11)
    assert [str(t) for t in found] == [
        "html(head(title(eps,eps),body(div(eps,eps),eps)),eps)",
        "html(head(title(eps,eps),body(h1(eps,eps),eps)),eps)",
        "html(head(title(eps,eps),body(p(eps,eps),eps)),eps)",
    ]


def test_bta_as_ata_keeps_language(nondet_result, even_a):
    for m in (nondet_result, even_a):
        a = bta_to_ata(m)
        for t in enumerate_trees(m.alphabet, 6):
            assert ata_member(a, t) == m.member(t)


def test_with_alphabet_adds_symbols(even_a):
    wider = even_a.with_alphabet(RankedAlphabet({"b": 2}))
    assert "b" in wider.alphabet
    assert not wider.member(parse_tree("b(eps, eps)", wider.alphabet))
