"""
Configuration constants and limits for the mtt typechecker.
Caps can be overridden from the environment (see .env handling in the entry points).
"""

import os
from pathlib import Path

# File paths
ROOT_DIR = Path(__file__).resolve().parent
FIXTURE_DIR = ROOT_DIR / "fixtures"

# Logging
LOG_LEVEL = os.getenv("MTT_LOG_LEVEL", "WARNING")

# Resource caps
CAPS = {
    'MAX_SUBSETS': int(os.getenv("MTT_MAX_SUBSETS", 2 ** 16)),                       # implication-system heads
    'MAX_CLASSICAL_STATES': int(os.getenv("MTT_MAX_CLASSICAL_STATES", 20000)),      # reachable (D, D_F, δ) states
    'MAX_DETERMINIZED_STATES': int(os.getenv("MTT_MAX_DETERMINIZED_STATES", 20000)),  # subset constructions
    'RECURSION_LIMIT': int(os.getenv("MTT_RECURSION_LIMIT", 100000)),              # top-down emptiness search
}

# Optimization toggles (all on by default)
DEFAULT_TOGGLES = {
    'cartesian': True,           # Cartesian factorization of constructor rules
    'partition': True,           # parameter state partitioning
    'complement_output': True,   # Inf(e, q̄) = ¬Inf(e, Q \ q̄) for total deterministic mtts
    'preprocess': True,          # trivial-emptiness simplification before the search
}

ALGORITHMS = ["ours", "classical", "mps"]

# Brute-force oracle and random suites
ORACLE_DEFAULTS = {
    'MAX_NODES': int(os.getenv("MTT_ORACLE_MAX_NODES", 7)),   # tree-size bound for enumeration
    'MAX_CASES': int(os.getenv("MTT_ORACLE_CASES", 200)),     # random-suite size
    'SEED': int(os.getenv("MTT_ORACLE_SEED", 1)),
}

RANDOM_LIMITS = {
    'MAX_SYMBOLS': 3,      # including eps
    'MAX_ARITY': 2,
    'MAX_STATES': 3,
    'MAX_PROCEDURES': 3,
    'MAX_PARAMS': 1,
    'MAX_BODY_DEPTH': 2,
}

# Process exit codes
EXIT_CODES = {
    'WELL_TYPED': 0,
    'ILL_TYPED': 1,
    'ERROR': 2,
}

# Verdict labels
VERDICTS = {
    'WELL_TYPED': "WELL-TYPED",
    'ILL_TYPED': "ILL-TYPED",
}

# Display names for report columns
DISPLAY_NAMES = {
    "toggles": "TOGGLES",
    "verdict": "VERDICT",
    "ata_states_materialized": "ATA STATES",
    "output_states": "OUTPUT STATES",
    "copy_bound": "COPY BOUND",
    "total_ms": "TIME (ms)",
}

# Format strings for display
FORMATTERS = {
    "TIME (ms)": "{:.1f}",
    "ATA STATES": "{:d}",
    "OUTPUT STATES": "{:d}",
}

# Shipped transformation suite: name -> (mtt file, expected verdict)
TRANSFORMATIONS = {
    "remove-b": ("remove_b.mtt", "WELL-TYPED"),
    "drop-div": ("drop_div.mtt", "ILL-TYPED"),
    "copy-links": ("copy_links.mtt", "WELL-TYPED"),
    "group-b": ("group_b.mtt", "WELL-TYPED"),
    "toc-prepend": ("toc_prepend.mtt", "WELL-TYPED"),
    "toc-only": ("toc_only.mtt", "WELL-TYPED"),
}

MINI_XHTML = "mini_xhtml.dtd"
