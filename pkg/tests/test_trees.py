import pytest
from hypothesis import given, strategies as st

from trees import EPS, RankedAlphabet, Tree, compositions, enumerate_trees, leaf, parse_tree, print_tree, trees_of_size
from utils.errors import AlphabetError, ArityError, ParseError

ALPHABET = RankedAlphabet({"a": 1, "b": 2, "c": 0})


def trees(alphabet=ALPHABET, max_leaves=8):
    nullary = [s for s, k in alphabet.symbols if k == 0]
    unary = [s for s, k in alphabet.symbols if k == 1]
    binary = [s for s, k in alphabet.symbols if k == 2]

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from(unary), children).map(lambda p: Tree(p[0], (p[1],))),
            st.tuples(st.sampled_from(binary), children, children).map(lambda p: Tree(p[0], p[1:])),
        )

    return st.recursive(st.sampled_from(nullary).map(leaf), extend, max_leaves=max_leaves)


def test_alphabet_always_has_eps():
    alphabet = RankedAlphabet({"a": 1})
    assert EPS in alphabet
    assert alphabet.arity(EPS) == 0
    assert alphabet.symbols == (("eps", 0), ("a", 1))


def test_alphabet_rejects_conflicting_arities():
    with pytest.raises(AlphabetError):
        RankedAlphabet([("a", 1), ("a", 2)])
    with pytest.raises(AlphabetError):
        RankedAlphabet({"a": 1}).union(RankedAlphabet({"a": 2}))


def test_alphabet_parse_and_equality():
    assert RankedAlphabet.parse("b/2, a/1") == RankedAlphabet({"a": 1, "b": 2, "eps": 0})
    assert hash(RankedAlphabet.parse("a/1")) == hash(RankedAlphabet({"a": 1}))
    with pytest.raises(AlphabetError):
        RankedAlphabet.parse("a/x")


def test_tree_size_and_equality():
    t = Tree("b", (Tree("a", (leaf(),)), leaf("c")))
    assert t.size == 4
    assert t == parse_tree("b(a(eps), c)", ALPHABET)
    assert hash(t) == hash(parse_tree("b(a(eps),c)", ALPHABET))
    assert [n.symbol for n in t.nodes()] == ["b", "a", "eps", "c"]


def test_parse_tree_errors_carry_position():
    with pytest.raises(ParseError) as excinfo:
        parse_tree("b(eps)", ALPHABET)
    assert excinfo.value.line == 1
    with pytest.raises(ParseError):
        parse_tree("d", ALPHABET)
    with pytest.raises(ParseError):
        parse_tree("a(eps) c", ALPHABET)


def test_check_reports_arity_mismatch():
    with pytest.raises(ArityError):
        Tree("a", (leaf(), leaf())).check(ALPHABET)


@given(trees())
def test_print_parse_roundtrip(t):
    assert parse_tree(print_tree(t), ALPHABET) == t


def test_compositions():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 3)) == []


def test_enumeration_counts_and_order():
    alphabet = RankedAlphabet({"a": 1, "b": 2})
    # sizes 1..4: eps; a(eps); a(a(eps)), b(eps,eps); four trees of size 4
    assert [len(trees_of_size(alphabet, n)) for n in range(1, 5)] == [1, 1, 2, 4]
    found = enumerate_trees(alphabet, 4)
    assert len(found) == 8
    assert len(set(found)) == len(found)
    assert [t.size for t in found] == sorted(t.size for t in found)
    assert found[0] == leaf()


@given(trees(max_leaves=3))
def test_enumeration_is_complete(t):
    if t.size <= 5:
        assert t in enumerate_trees(ALPHABET, 5)


def test_enumeration_rejects_empty_bound():
    with pytest.raises(ValueError):
        enumerate_trees(ALPHABET, 0)
