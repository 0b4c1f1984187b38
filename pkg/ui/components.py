"""Reusable UI components for run reports."""

import html

import pandas as pd
import plotly.express as px
import streamlit as st

from config import DISPLAY_NAMES, FORMATTERS
from frontend.report import RunReport
from utils.formatters import get_states_color, style_verdict


def _card(label: str, value: str, status: str = "") -> str:
    return f"""
    <div class='mtt-box'>
        <div class='mtt-label'>{label}</div>
        <div class='mtt-value {status}'>{value}</div>
    </div>"""


def display_metric_cards(report: RunReport):
    """
    Verdict, materialized ata states, copy bound and time as metric cards.

    Args:
        report: Result of one run
    """
    status = "status-well" if report.well_typed else "status-ill"
    states = "-" if report.ata_states_materialized is None else str(report.ata_states_materialized)
    cards = [
        _card("VERDICT", report.verdict, status),
        _card("ATA STATES", states),
        _card("OUTPUT STATES", str(report.output_states)),
        _card("PROCEDURES", f"{report.procedures} / {report.max_params}p"),
        _card("COPY BOUND", report.copy_bound),
        _card("TIME", f"{report.total_ms:.1f} ms"),
    ]
    st.markdown(
        "<div style='display: grid; grid-template-columns: repeat(6, 1fr); gap: 12px; margin-bottom: 20px;'>"
        + "".join(cards)
        + "</div>",
        unsafe_allow_html=True,
    )


def display_witness(report: RunReport):
    if report.witness is None:
        st.success("No input of the input type has an output outside the output type.")
        return
    shown = report.decoded_witness or report.witness
    st.markdown(f"<div class='mtt-witness'>{html.escape(shown)}</div>", unsafe_allow_html=True)
    if report.decoded_witness:
        with st.expander("Ranked encoding"):
            st.code(report.witness)


def display_toggle_table(df: pd.DataFrame):
    """Toggle comparison table, states colored against the all-off run."""
    states = DISPLAY_NAMES['ata_states_materialized']
    baseline = df[states].iloc[-1] if not df.empty else None
    styled = (
        df.style
        .map(style_verdict, subset=[DISPLAY_NAMES['verdict']])
        .map(lambda v: get_states_color(v, baseline), subset=[states])
        .format({k: v for k, v in FORMATTERS.items() if k in df.columns})
    )
    st.dataframe(styled, use_container_width=True, hide_index=True)


def display_toggle_chart(df: pd.DataFrame):
    fig = px.bar(
        df,
        x=DISPLAY_NAMES['toggles'],
        y=DISPLAY_NAMES['ata_states_materialized'],
        color=DISPLAY_NAMES['verdict'],
        color_discrete_map={"WELL-TYPED": "#00ff41", "ILL-TYPED": "#ff3333"},
    )
    fig.update_layout(
        template="plotly_dark",
        paper_bgcolor="#0d0d0d",
        plot_bgcolor="#0d0d0d",
        font=dict(family="IBM Plex Mono, monospace", size=11),
        margin=dict(l=10, r=10, t=30, b=10),
        xaxis_tickangle=-30,
    )
    st.plotly_chart(fig, use_container_width=True)
