import pytest

from alternating import determinize_ata
from automata import complement, determinize_complete
from emptiness import ImplicationSystem, build_implications, goal_witness
from inference import AtaStateId, basic_state_universe, infer_basic
from oracle import check_witness
from reference import (
    beta_isomorphism_check,
    classical_domain,
    classical_typecheck,
    classical_verdict,
    compare_systems,
    mps_implications,
    mps_specialize,
    mps_verdict,
)
from transducer import encode_input_type, load_mtt
from trees import parse_tree

from tests.conftest import all_accepting, skip_on_cap


@pytest.fixture
def duplicate(fixture_dir):
    return load_mtt(fixture_dir / "duplicate_param.mtt")


def output_complement(out_type):
    return complement(determinize_complete(out_type)[0])


def test_classical_domain_lists_parameter_types(duplicate, nondet_result):
    domain = classical_domain(duplicate, nondet_result)
    assert domain[0] == ("p", ("q0",))
    assert ("p0", ()) in domain
    assert len(domain) == 3 + 1


def test_classical_states_map_to_basic_states(duplicate, nondet_result):
    out_c = output_complement(nondet_result)
    n_prime = classical_typecheck(duplicate, out_c)
    for d in n_prime.states:
        assert all(isinstance(s, AtaStateId) and len(s.outputs) == 1 for s in d.beta())


@pytest.mark.parametrize("verdict", [classical_verdict, mps_verdict])
def test_reference_verdicts_on_duplicate_param(duplicate, nondet_result, verdict):
    in_type = all_accepting(duplicate.alphabet)
    assert verdict(duplicate, in_type, nondet_result) is None
    # b(eps, eps) is not accepted from q1
    witness = verdict(duplicate, in_type, nondet_result.with_final(["q1"]))
    assert witness == parse_tree("a(eps)", duplicate.alphabet)
    check_witness(duplicate, in_type, nondet_result.with_final(["q1"]), witness)


def test_beta_is_an_isomorphism(small_instance):
    m, _, out_type = small_instance
    out_c = skip_on_cap(output_complement, out_type)
    n_prime = skip_on_cap(classical_typecheck, m, out_c)
    n, _ = skip_on_cap(determinize_ata, infer_basic(m, out_c), basic_state_universe(m, out_c))
    assert beta_isomorphism_check(n_prime, n)
    assert not beta_isomorphism_check(n_prime.with_final(n_prime.states - n_prime.final), n)


def test_specialized_procedures(duplicate, nondet_result):
    out_c = output_complement(nondet_result)
    encoded = encode_input_type(duplicate, all_accepting(duplicate.alphabet))
    u = mps_specialize(encoded, out_c)
    assert all(isinstance(s, AtaStateId) and len(s.outputs) == 1 for s in u.procedures)
    assert len(u.initial) == len(encoded.initial) * len(out_c.final)
    assert all(s.params == () for s in u.initial)


def test_specialized_system_matches_inferred_system(duplicate, nondet_result):
    out_c = output_complement(nondet_result)
    encoded = encode_input_type(duplicate, all_accepting(duplicate.alphabet))
    rho = build_implications(infer_basic(encoded, out_c))
    rho_prime = mps_implications(mps_specialize(encoded, out_c))
    assert compare_systems(rho, rho_prime)
    assert compare_systems(rho, rho_prime, rename=lambda s: s)
    assert goal_witness(rho) is None


def test_compare_systems_sees_differences():
    rho = ImplicationSystem(goals=frozenset([frozenset(["x"])]))
    rho.add(frozenset(["x"]), "eps", ())
    other = ImplicationSystem(goals=rho.goals)
    assert not compare_systems(rho, other)
    other.add(frozenset(["y"]), "eps", ())
    assert not compare_systems(rho, other)
    assert compare_systems(rho, other, rename=lambda s: "x")
