import math

import pytest

from alternating import (
    BOTTOM,
    EMPTY_PAIR,
    INFINITY,
    TOP,
    Ata,
    StateSetPair,
    ata_accepts,
    ata_member,
    atom,
    conj,
    conj_all,
    determinize_ata,
    disj,
    disj_all,
    dnf,
    dual,
    format_ata,
    has_negation,
    intersect,
    is_bounded_traversing,
    map_states,
    neg_atom,
    parse_ata,
    parse_formula,
    push_negation,
    solve_bounds,
    traversal_bound,
    traversal_bounds,
)
from automata import bta_to_ata
from oracle import language_equal_upto
from trees import RankedAlphabet, enumerate_trees, parse_tree
from utils.errors import AlphabetError, AutomatonError, ParseError

AB = RankedAlphabet({"a": 1, "b": 2})

# X: every b on the leftmost path has a right child other than eps
# Y: exactly eps
SAMPLE = """
alphabet: a/1, b/2
initial: X
state X: eps(0) -> T
state X: a(1) -> d 1 X
state X: b(2) -> (d 1 X & ~d 2 Y)
state Y: eps(0) -> T
"""


def test_hash_consing_and_units():
    assert conj(atom(1, "X"), atom(2, "Y")) is conj(atom(1, "X"), atom(2, "Y"))
    assert conj(TOP, atom(1, "X")) is atom(1, "X")
    assert conj(BOTTOM, atom(1, "X")) is BOTTOM
    assert disj(TOP, atom(1, "X")) is TOP
    assert disj(BOTTOM, atom(1, "X")) is atom(1, "X")
    assert conj_all([]) is TOP
    assert disj_all([]) is BOTTOM
    with pytest.raises(ValueError):
        atom(0, "X")


def test_dual_is_involutive():
    f = disj(conj(atom(1, "X"), neg_atom(2, "Y")), atom(1, "Z"))
    assert dual(dual(f)) is f
    g = conj(atom(1, "X"), neg_atom(2, "Y"))
    assert dual(g) is disj(neg_atom(1, "X"), atom(2, "Y"))
    assert dual(TOP) is BOTTOM


def test_formula_evaluation_and_atoms():
    f = conj(atom(1, "X"), neg_atom(2, "Y"))
    assert f.evaluate(lambda i, s: s == "X")
    assert not f.evaluate(lambda i, s: True)
    assert f.atoms == frozenset([(1, "X", True), (2, "Y", False)])
    assert f.states() == frozenset(["X", "Y"])
    assert has_negation(f)
    assert map_states(f, str.lower) is conj(atom(1, "x"), neg_atom(2, "y"))
    assert f.max_index == 2


def test_parse_formula():
    f = parse_formula("(d 1 X & ~d 2 Y & T)")
    assert f is conj(atom(1, "X"), neg_atom(2, "Y"))
    assert parse_formula("F") is BOTTOM
    with pytest.raises(ParseError):
        parse_formula("(d 1 X & d 2 Y | d 1 Z)")
    with pytest.raises(ParseError):
        parse_formula("d 0 X")


def test_parse_ata_and_accept():
    a = parse_ata(SAMPLE)
    assert a.initial == ("X",)
    assert ata_member(a, parse_tree("a(eps)", a.alphabet))
    assert ata_member(a, parse_tree("b(eps, a(eps))", a.alphabet))
    assert not ata_member(a, parse_tree("b(eps, eps)", a.alphabet))
    assert not ata_accepts(a, "Y", parse_tree("a(eps)", a.alphabet))


def test_parse_ata_rejects_bad_index():
    with pytest.raises(ParseError):
        parse_ata("initial: X\nstate X: a(1) -> d 2 X")
    with pytest.raises(ParseError):
        parse_ata("initial: X\nstate X: a(1) -> T\nstate X: a(1) -> F")


def test_format_ata_lists_transitions():
    text = format_ata(parse_ata(SAMPLE))
    assert "initial: X" in text
    assert "state X: b(2) -> (d 1 X & ~d 2 Y)" in text
    assert "state Y: a" not in text


def test_phi_checks_child_index():
    a = Ata(AB, ["X"], lambda x, s: atom(2, "X"))
    with pytest.raises(AutomatonError):
        a.phi("X", "a")


def test_lazy_materialization():
    calls = []

    def transition(x, symbol):
        calls.append((x, symbol))
        return atom(1, x + 1) if symbol == "a" and x < 3 else (TOP if symbol == "eps" else BOTTOM)

    a = Ata(AB, [0], transition)
    assert a.materialized == frozenset([0])
    assert a.materialize_all() == frozenset([0, 1, 2, 3])
    assert len(calls) == 4 * len(AB)
    a.phi(0, "a")
    assert len(calls) == 4 * len(AB)


def test_dnf_of_mixed_formula():
    f = conj(disj(atom(1, "X"), atom(1, "Y")), neg_atom(2, "Z"))
    terms = dnf(f, 2)
    assert terms == [
        (StateSetPair.of(["X"]), StateSetPair.of((), ["Z"])),
        (StateSetPair.of(["Y"]), StateSetPair.of((), ["Z"])),
    ]
    assert dnf(TOP, 2) == [(EMPTY_PAIR, EMPTY_PAIR)]
    assert dnf(BOTTOM, 1) == []
    with pytest.raises(ValueError):
        dnf(atom(3, "X"), 2)


def test_state_set_pair_helpers():
    p = StateSetPair.of(["X"], ["Y"])
    assert p.subset_of(StateSetPair.of(["X", "Z"], ["Y"]))
    assert not p.contradictory()
    assert p.add("Y").contradictory()
    assert str(p) == "({X},{Y})"


def test_push_negation_keeps_language():
    a = parse_ata(SAMPLE)
    positive = push_negation(a)
    for x in positive.materialize_all():
        for symbol, _ in AB.symbols:
            assert not has_negation(positive.phi(x, symbol))
    assert language_equal_upto(a, positive, 6)


def test_intersection_is_conjunction(even_a):
    a = parse_ata(SAMPLE)
    only_a = bta_to_ata(even_a.with_alphabet(AB))
    both = intersect(a, only_a)
    for t in enumerate_trees(AB, 6):
        assert ata_member(both, t) == (ata_member(a, t) and even_a.with_alphabet(AB).member(t))


def test_intersection_needs_same_alphabet(even_a):
    with pytest.raises(AlphabetError):
        intersect(parse_ata(SAMPLE), bta_to_ata(even_a))


def test_determinize_ata(nondet_result):
    a = bta_to_ata(nondet_result)
    d, _ = determinize_ata(a)
    assert d.is_deterministic_complete()
    assert language_equal_upto(d, nondet_result, 6)
    with pytest.raises(AutomatonError):
        determinize_ata(parse_ata(SAMPLE))


def test_solve_bounds_detects_growth():
    # x = y + z is finite; loop feeds itself and grows without bound
    rhs = {
        "x": lambda v: v["y"] + v["z"],
        "y": lambda v: 1,
        "z": lambda v: v["y"],
        "loop": lambda v: v["loop"] + v["y"],
    }
    bounds = solve_bounds(rhs, lambda name, values: rhs[name](values))
    assert bounds["x"] == 2
    assert bounds["y"] == 1
    assert bounds["loop"] == INFINITY


def test_traversal_bounds():
    copy_twice = Ata(
        AB,
        ["X"],
        lambda x, s: conj(atom(1, "Y"), atom(1, "Z")) if (x, s) == ("X", "a") else (TOP if s == "eps" else BOTTOM),
    )
    bounds = traversal_bounds(copy_twice)
    assert bounds == {"X": 2, "Y": 1, "Z": 1}
    assert traversal_bound(copy_twice) == 2
    assert is_bounded_traversing(copy_twice, 2)
    assert not is_bounded_traversing(copy_twice, 1)

    def pump(x, s):
        if s != "a":
            return BOTTOM
        return conj(atom(1, "X"), atom(1, "Y")) if x == "X" else atom(1, "X")

    pumping = Ata(AB, ["X"], pump)
    assert math.isinf(traversal_bound(pumping))
