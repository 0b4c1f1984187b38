"""UI styling for the typechecker dashboard."""

import streamlit as st


@st.cache_resource
def get_custom_css():
    """Return cached custom CSS for the terminal-style theme."""
    return """
<style>
@import url('https://fonts.googleapis.com/css2?family=IBM+Plex+Mono:wght@400;500;600;700&display=swap');

:root {
    --bg-primary: #0d0d0d;
    --bg-secondary: #1a1a1a;
    --border-color: #262626;
    --text-primary: #f5f5f5;
    --text-muted: #808080;
    --accent-orange: #ff8c00;
    --accent-green: #00ff41;
    --accent-red: #ff3333;
    --font: 'IBM Plex Mono', 'Courier New', monospace;
}

body {
    background-color: var(--bg-primary);
    color: var(--text-primary);
    font-family: var(--font);
}

h1, h2, h3 {
    font-family: var(--font);
    text-transform: uppercase;
    letter-spacing: 2px;
}

.mtt-box {
    background: linear-gradient(135deg, var(--bg-secondary) 0%, #0f0f0f 100%);
    border: 1px solid var(--border-color);
    border-radius: 2px;
    padding: 12px 14px;
    box-shadow: 0 2px 6px rgba(0, 0, 0, 0.4);
}

.mtt-label {
    font-size: 9px;
    letter-spacing: 1.5px;
    color: var(--text-muted);
}

.mtt-value {
    font-size: 26px;
    margin: 8px 0;
    color: var(--accent-orange);
    font-weight: 700;
}

.status-well { color: var(--accent-green); }
.status-ill { color: var(--accent-red); }

.mtt-witness {
    font-family: var(--font);
    font-size: 12px;
    background: #0f0f0f;
    border-left: 3px solid var(--accent-red);
    padding: 10px 14px;
    word-break: break-all;
}
</style>
"""
