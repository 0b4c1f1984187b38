import json

import pytest
from pydantic import ValidationError

from config import DISPLAY_NAMES, FIXTURE_DIR, MINI_XHTML, TRANSFORMATIONS
from frontend import (
    RunReport,
    TypecheckOptions,
    compare_toggles,
    load_type,
    open_session,
    phase_table,
    run_typecheck,
    toggle_combinations,
    toggle_label,
    transformation_suite,
)
from oracle import validate_witness
from schema import parse_document
from typecheck import main

# procedures, maximal parameters, copy bound
FIGURES = {
    "remove-b": (2, 1, "1"),
    "drop-div": (2, 1, "1"),
    "copy-links": (3, 1, "2"),
    "group-b": (4, 1, "∞"),
    "toc-prepend": (8, 2, "2"),
    "toc-only": (8, 2, "1"),
}

ALL_INPUTS = """
alphabet: a/1, b/2
final: top
top <- eps
top <- a(top)
top <- b(top, top)
"""


@pytest.fixture
def files(tmp_path, fixture_dir):
    """duplicate_param.mtt with an all-accepting input type and two output types."""
    in_type = tmp_path / "all.bta"
    in_type.write_text(ALL_INPUTS)
    result = (fixture_dir / "nondet_result.bta").read_text()
    accepting = tmp_path / "result.bta"
    accepting.write_text(result)
    rejecting = tmp_path / "other.bta"
    rejecting.write_text(result.replace("final: q0", "final: q1"))
    return {
        "mtt": fixture_dir / "duplicate_param.mtt",
        "in": in_type,
        "good": accepting,
        "bad": rejecting,
    }


# ============================================================================
# OPTIONS AND REPORTS
# ============================================================================

def test_options_validation():
    with pytest.raises(ValidationError):
        TypecheckOptions(algo="fastest")
    with pytest.raises(ValidationError):
        TypecheckOptions(oracle_depth=0)
    options = TypecheckOptions(partition=False)
    assert options.toggles() == {
        'cartesian': True,
        'partition': False,
        'complement_output': True,
        'preprocess': True,
    }


def test_report_requires_witness_exactly_when_ill_typed():
    with pytest.raises(ValidationError):
        RunReport(verdict="ILL-TYPED")
    with pytest.raises(ValidationError):
        RunReport(verdict="WELL-TYPED", witness="eps")
    with pytest.raises(ValidationError):
        RunReport(verdict="UNKNOWN")
    assert RunReport(verdict="WELL-TYPED").exit_code == 0
    assert RunReport(verdict="ILL-TYPED", witness="eps").exit_code == 1


def test_report_summary():
    report = RunReport(
        verdict="ILL-TYPED",
        witness="a(eps)",
        decoded_witness="<a/>",
        phase_ms={"infer": 1.5, "emptiness": 2.0},
        toggles={'cartesian': False, 'partition': False},
    )
    assert report.total_ms == 3.5
    assert report.summary(witness=False) == "ILL-TYPED witness=a(eps)"
    lines = report.summary(witness=True, stats=True).splitlines()
    assert lines[1] == "  document: <a/>"
    assert "  toggles: none" in lines
    assert "  infer: 1.5 ms" in lines
    assert lines[-1] == "  total: 3.5 ms"


def test_load_type_dispatches_on_suffix(tmp_path, xhtml_path):
    grammar = tmp_path / "list.rtg"
    grammar.write_text("start: L\nL -> a(L) | eps\n")
    m, decoder = load_type(grammar)
    assert decoder is None
    assert m.final == frozenset(["L"])
    _, decoder = load_type(xhtml_path)
    assert decoder is not None
    with pytest.raises(ValueError):
        load_type(tmp_path / "type.xml")


# ============================================================================
# PIPELINE
# ============================================================================

@pytest.mark.parametrize("algo", ["ours", "classical", "mps"])
def test_run_typecheck_each_algorithm(files, algo):
    options = TypecheckOptions(algo=algo)
    assert run_typecheck(files["mtt"], files["in"], files["good"], options).well_typed
    report = run_typecheck(files["mtt"], files["in"], files["bad"], options)
    assert report.verdict_line() == "ILL-TYPED witness=a(eps)"
    assert report.algo == algo
    assert (report.toggles != {}) == (algo == "ours")


def test_basic_inference_run(files):
    options = TypecheckOptions(basic=True, preprocess=False)
    report = run_typecheck(files["mtt"], files["in"], files["bad"], options)
    assert not report.well_typed
    assert report.ata_states_materialized > 0


def test_session_records_phases(files):
    session = open_session(files["mtt"], files["in"], files["bad"])
    report = session.run()
    assert list(report.phase_ms) == ["determinize", "infer", "intersect", "emptiness", "validate"]
    assert session.explored == report.explored_pairs
    assert report.procedures == 2
    assert report.copy_bound == "2"
    table = phase_table(report)
    assert list(table.columns) == ["PHASE", DISPLAY_NAMES['total_ms']]
    assert len(table) == 5


def test_oracle_confirms_verdicts(files):
    options = TypecheckOptions(oracle_depth=4)
    good = run_typecheck(files["mtt"], files["in"], files["good"], options)
    assert good.oracle == "no counterexample up to 4 nodes"
    bad = run_typecheck(files["mtt"], files["in"], files["bad"], options)
    assert bad.oracle == "ILL-TYPED witness=a(eps)"


def test_toggle_table(files):
    labels = [toggle_label(o) for o in toggle_combinations()]
    assert labels[0] == "cartesian+partition+complement_output"
    assert labels[-1] == "none"
    df = compare_toggles(files["mtt"], files["in"], files["bad"])
    assert len(df) == 8
    assert set(df[DISPLAY_NAMES['verdict']]) == {"ILL-TYPED"}
    assert list(df[DISPLAY_NAMES['toggles']]) == labels


# ============================================================================
# MINI-XHTML
# ============================================================================

def test_transformation_suite_verdicts():
    df = transformation_suite()
    assert list(df["TRANSFORMATION"]) == list(TRANSFORMATIONS)
    assert (df[DISPLAY_NAMES['verdict']] == df["EXPECTED"]).all()
    witnesses = dict(zip(df["TRANSFORMATION"], df["WITNESS"]))
    assert witnesses["remove-b"] == ""
    assert "<div" in witnesses["drop-div"]
    figures = {
        name: (procedures, params, bound)
        for name, procedures, params, bound in zip(
            df["TRANSFORMATION"], df["PROCEDURES"], df["MAX PARAMS"], df[DISPLAY_NAMES['copy_bound']]
        )
    }
    assert figures == FIGURES


def test_drop_div_witness_is_a_document():
    schema = FIXTURE_DIR / MINI_XHTML
    session = open_session(FIXTURE_DIR / "drop_div.mtt", schema, schema)
    report = session.run()
    witness = session.check()
    assert validate_witness(session.mtt, session.in_type, session.out_type, witness)
    assert report.decoded_witness == "<html><head><title/></head><body><div/></body></html>"
    page = parse_document(report.decoded_witness)
    body = page.children[1]
    assert body.label == "body"
    assert {child.label for child in body.children} == {"div"}


# ============================================================================
# COMMAND LINE
# ============================================================================

def test_cli_exit_codes(files, capsys):
    assert main([str(files["mtt"]), str(files["in"]), str(files["good"])]) == 0
    assert capsys.readouterr().out.strip() == "WELL-TYPED"
    assert main([str(files["mtt"]), str(files["in"]), str(files["bad"]), "--algo", "mps"]) == 1
    assert capsys.readouterr().out.strip() == "ILL-TYPED witness=a(eps)"


def test_cli_json(files, capsys):
    assert main([str(files["mtt"]), str(files["in"]), str(files["bad"]), "--json", "--no-partition"]) == 1
    record = json.loads(capsys.readouterr().out)
    assert record["witness"] == "a(eps)"
    assert record["toggles"]["partition"] is False


def test_cli_witness_and_stats(capsys):
    schema = str(FIXTURE_DIR / MINI_XHTML)
    code = main([str(FIXTURE_DIR / "drop_div.mtt"), schema, schema, "--witness", "--stats"])
    assert code == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].startswith("  document: <html><head><title/></head><body><div")
    assert "  algorithm: ours" in lines


@pytest.mark.parametrize(
    "extra",
    [["--oracle-depth", "0"], ["--max-subsets", "0"]],
)
def test_cli_rejects_bad_options(files, capsys, extra):
    assert main([str(files["mtt"]), str(files["in"]), str(files["good"])] + extra) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_cli_reports_unreadable_inputs(files, tmp_path, capsys):
    assert main([str(tmp_path / "missing.mtt"), str(files["in"]), str(files["good"])]) == 2
    assert main([str(files["mtt"]), str(files["in"]), str(tmp_path / "out.xml")]) == 2
    broken = tmp_path / "broken.mtt"
    broken.write_text("initial: p0\np0(a(x1)) -> x1\n")
    assert main([str(broken), str(files["in"]), str(files["good"])]) == 2
