"""
End-to-end agreement checks over seeded random instances and the shipped
mini-XHTML transformations.
"""

import math
from itertools import product

import pytest

from alternating import (
    ata_member,
    determinize_ata,
    intersect,
    pair_weight,
    push_negation,
    traversal_bounds,
)
from automata import bta_to_ata, complement, determinize_complete
from config import DEFAULT_TOGGLES, FIXTURE_DIR, MINI_XHTML, ORACLE_DEFAULTS, TRANSFORMATIONS
from emptiness import build_implications, check_empty, solve_implications
from frontend import TypecheckOptions, TypecheckSession, run_typecheck
from inference import basic_state_universe, infer_basic, infer_optimized
from oracle import OracleConfig, language_equal_upto, oracle_typecheck, random_instance
from reference import (
    beta_isomorphism_check,
    classical_typecheck,
    compare_systems,
    mps_implications,
    mps_specialize,
)
from transducer import copy_bound, encode_input_type, evaluate, load_mtt
from trees import enumerate_trees, parse_tree

from tests.conftest import all_accepting, case_seeds, skip_on_cap

SEEDS = case_seeds()
TOGGLE_SETTINGS = [
    dict(zip(("cartesian", "partition", "complement_output"), values))
    for values in product([True, False], repeat=3)
]
NO_COMPLEMENT = {'cartesian': True, 'partition': True, 'complement_output': False}


@pytest.fixture(params=SEEDS)
def instance(request):
    return random_instance(request.param)


def output_dbta(out_type):
    return skip_on_cap(determinize_complete, out_type)[0]


def session_verdict(m, in_type, out_type, **options):
    report = skip_on_cap(TypecheckSession(m, in_type, out_type, TypecheckOptions(**options)).run)
    return report.well_typed


def test_inferred_ata_is_the_preimage(instance):
    m, _, out_type = instance
    out = output_dbta(out_type)
    a = infer_basic(m, out)
    memo = {}
    for t in enumerate_trees(m.alphabet, ORACLE_DEFAULTS['MAX_NODES']):
        assert ata_member(a, t) == any(out.member(u) for u in evaluate(m, t, memo)), str(t)


def test_toggles_agree(instance):
    m, in_type, out_type = instance
    out = output_dbta(out_type)
    basic = infer_basic(m, complement(out))
    verdicts = set()
    for toggles in TOGGLE_SETTINGS:
        assert language_equal_upto(basic, infer_optimized(m, out, toggles), 6), toggles
        verdicts.add(session_verdict(m, in_type, out_type, **toggles))
    assert len(verdicts) == 1


def test_algorithms_agree_with_each_other_and_the_oracle(instance):
    m, in_type, out_type = instance
    ours = session_verdict(m, in_type, out_type)
    assert session_verdict(m, in_type, out_type, basic=True) == ours
    assert session_verdict(m, in_type, out_type, algo="classical") == ours
    assert session_verdict(m, in_type, out_type, algo="mps") == ours
    oracle = oracle_typecheck(m, in_type, out_type, OracleConfig())
    if not oracle.well_typed:
        assert not ours, str(oracle)


def test_classical_states_correspond_to_inferred_subsets(instance):
    m, _, out_type = instance
    out_c = complement(output_dbta(out_type))
    n_prime = skip_on_cap(classical_typecheck, m, out_c)
    n, _ = skip_on_cap(determinize_ata, infer_basic(m, out_c), basic_state_universe(m, out_c))
    assert beta_isomorphism_check(n_prime, n)


def test_specialization_gives_the_same_implications(instance):
    m, in_type, out_type = instance
    if in_type.states != {"top"}:
        pytest.skip("input type is not all-accepting")
    out_c = complement(output_dbta(out_type))
    encoded = encode_input_type(m, in_type)
    rho = skip_on_cap(build_implications, infer_basic(encoded, out_c))
    rho_prime = skip_on_cap(mps_implications, mps_specialize(encoded, out_c))
    assert compare_systems(rho, rho_prime)


@pytest.mark.parametrize("toggles", [NO_COMPLEMENT, DEFAULT_TOGGLES], ids=["positive", "complemented"])
def test_search_agrees_with_implications(instance, toggles):
    m, in_type, out_type = instance
    out = output_dbta(out_type)
    ata = intersect(bta_to_ata(in_type), infer_optimized(m, out, toggles))
    positive = push_negation(ata)
    if len(positive.materialize_all()) > 12:
        pytest.skip("too many ata states for the implication system")
    result = check_empty(ata)
    assert result.is_empty == (not solve_implications(build_implications(positive)))
    if result.witness is not None:
        assert ata_member(ata, result.witness)


def test_explored_pairs_respect_the_copy_bound(instance):
    m, in_type, out_type = instance
    bound = copy_bound(m)
    if math.isinf(bound):
        pytest.skip("unbounded copying")
    out = output_dbta(out_type)
    ata = intersect(bta_to_ata(in_type), infer_optimized(m, out, NO_COMPLEMENT))
    bounds = traversal_bounds(ata)
    result = check_empty(ata)
    for pair in result.explored:
        assert pair_weight(pair.pos, bounds) <= bound + 1, str(pair)


# ============================================================================
# MINI-XHTML
# ============================================================================

@pytest.mark.parametrize("name", list(TRANSFORMATIONS))
def test_mini_xhtml_transformations(name, xhtml_bta):
    mtt_name, expected = TRANSFORMATIONS[name]
    schema = FIXTURE_DIR / MINI_XHTML
    report = run_typecheck(FIXTURE_DIR / mtt_name, schema, schema)
    assert report.verdict == expected
    oracle = oracle_typecheck(load_mtt(FIXTURE_DIR / mtt_name), xhtml_bta, xhtml_bta, OracleConfig(max_nodes=11))
    assert oracle.well_typed == report.well_typed


@pytest.mark.parametrize("name", list(TRANSFORMATIONS))
def test_complemented_outputs_materialize_fewer_states(name):
    mtt_name, _ = TRANSFORMATIONS[name]
    schema = FIXTURE_DIR / MINI_XHTML
    on, off = (
        run_typecheck(FIXTURE_DIR / mtt_name, schema, schema, TypecheckOptions(complement_output=flag))
        for flag in (True, False)
    )
    assert on.verdict == off.verdict
    assert on.ata_states_materialized <= off.ata_states_materialized


def test_drop_div_smallest_counterexample(xhtml_bta):
    m = load_mtt(FIXTURE_DIR / "drop_div.mtt")
    oracle = oracle_typecheck(m, xhtml_bta, xhtml_bta, OracleConfig(max_nodes=11))
    assert str(oracle.counterexample) == "html(head(title(eps,eps),body(div(eps,eps),eps)),eps)"


# ============================================================================
# NONDETERMINISTIC OUTPUT TYPES
# ============================================================================

def test_nondeterministic_output_type_is_determinized(fixture_dir, nondet_result):
    m = load_mtt(fixture_dir / "duplicate_param.mtt")
    in_type = all_accepting(m.alphabet)
    t = parse_tree("a(eps)", m.alphabet)

    unsound = infer_basic(m, nondet_result, require_deterministic=False)
    assert not ata_member(unsound, t)
    sound = infer_basic(m, determinize_complete(nondet_result)[0])
    assert ata_member(sound, t)

    for algo in ("ours", "classical", "mps"):
        assert session_verdict(m, in_type, nondet_result, algo=algo)
        assert not session_verdict(m, in_type, nondet_result.with_final(["q1"]), algo=algo)
