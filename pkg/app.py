# app.py
# Terminal-style dashboard for the macro tree transducer typechecker
# Runs the shipped transformations or uploaded files through the pipeline

import logging
import tempfile
from pathlib import Path
from dotenv import load_dotenv

import streamlit as st

# Load environment variables
load_dotenv()

# Import from custom modules
from config import ALGORITHMS, FIXTURE_DIR, LOG_LEVEL, MINI_XHTML, TRANSFORMATIONS
from frontend import TypecheckOptions, compare_toggles, phase_table, run_typecheck, transformation_suite
from ui import (
    display_metric_cards,
    display_toggle_chart,
    display_toggle_table,
    display_witness,
    get_custom_css,
)
from utils.errors import CapExceeded, WitnessError

logging.basicConfig(level=LOG_LEVEL)
logger = logging.getLogger(__name__)


# ============================
# PAGE CONFIGURATION
# ============================
st.set_page_config(
    page_title="MTT Typechecker",
    layout="wide",
    initial_sidebar_state="expanded"
)

st.markdown(get_custom_css(), unsafe_allow_html=True)


# ============================
# INPUT SELECTION
# ============================
def _save_upload(upload, directory: Path) -> Path:
    path = directory / upload.name
    path.write_bytes(upload.getvalue())
    return path


def select_inputs(workdir: Path):
    """Sidebar: a shipped transformation or three uploaded files."""
    source = st.sidebar.radio("SOURCE", ["Shipped transformation", "Upload files"])
    if source == "Shipped transformation":
        name = st.sidebar.selectbox("TRANSFORMATION", list(TRANSFORMATIONS))
        mtt_name, expected = TRANSFORMATIONS[name]
        st.sidebar.caption(f"Expected: {expected}")
        schema = FIXTURE_DIR / MINI_XHTML
        return FIXTURE_DIR / mtt_name, schema, schema

    mtt = st.sidebar.file_uploader("TRANSDUCER (.mtt)")
    in_type = st.sidebar.file_uploader("INPUT TYPE (.bta / .rtg / .dtd)")
    out_type = st.sidebar.file_uploader("OUTPUT TYPE (.bta / .rtg / .dtd)")
    if not (mtt and in_type and out_type):
        return None
    in_dir = workdir / "in"
    out_dir = workdir / "out"
    in_dir.mkdir(exist_ok=True)
    out_dir.mkdir(exist_ok=True)
    return _save_upload(mtt, workdir), _save_upload(in_type, in_dir), _save_upload(out_type, out_dir)


def select_options() -> TypecheckOptions:
    st.sidebar.markdown("### OPTIONS")
    return TypecheckOptions(
        algo=st.sidebar.selectbox("ALGORITHM", ALGORITHMS),
        basic=st.sidebar.checkbox("Basic inference", value=False),
        cartesian=st.sidebar.checkbox("Cartesian factorization", value=True),
        partition=st.sidebar.checkbox("State partitioning", value=True),
        complement_output=st.sidebar.checkbox("Output complementation", value=True),
        preprocess=st.sidebar.checkbox("Preprocessing", value=True),
    )


# ============================
# MAIN
# ============================
def main():
    """Typecheck the selected inputs and show verdict, witness and statistics."""
    st.markdown("# MTT TYPECHECKER")
    st.caption("Backward inference into alternating tree automata · top-down emptiness with witnesses")

    with tempfile.TemporaryDirectory() as tmp:
        inputs = select_inputs(Path(tmp))
        options = select_options()
        if inputs is None:
            st.info("Upload a transducer and both types to start.")
            return
        mtt_file, in_file, out_file = inputs

        # Button clicks rerun the script; keep the last report for unchanged inputs
        run_key = (str(mtt_file), str(in_file), str(out_file), options.model_dump_json())
        if st.session_state.get('run_key') != run_key:
            try:
                with st.spinner("Typechecking..."):
                    st.session_state.report = run_typecheck(mtt_file, in_file, out_file, options)
            except (ValueError, CapExceeded, WitnessError, OSError) as e:
                logger.error(f"Run failed: {e}")
                st.error(f"{type(e).__name__}: {e}")
                return
            st.session_state.run_key = run_key
        report = st.session_state.report

        display_metric_cards(report)
        display_witness(report)

        tab_phases, tab_toggles, tab_suite, tab_json = st.tabs(["PHASES", "TOGGLES", "SUITE", "REPORT"])
        with tab_phases:
            st.dataframe(phase_table(report), use_container_width=True, hide_index=True)
        with tab_toggles:
            if options.algo != "ours":
                st.caption("Toggle comparison applies to the inference pipeline only.")
            elif st.button("Compare all toggle combinations"):
                with st.spinner("Running eight combinations..."):
                    df = compare_toggles(mtt_file, in_file, out_file, options)
                display_toggle_table(df)
                display_toggle_chart(df)
        with tab_suite:
            if st.button("Run the shipped transformations"):
                with st.spinner("Typechecking the mini-XHTML suite..."):
                    suite = transformation_suite(options)
                st.dataframe(suite, use_container_width=True, hide_index=True)
        with tab_json:
            st.code(report.model_dump_json(indent=2), language="json")


if __name__ == "__main__":
    main()
