"""Reference typecheckers: classical behaviour enumeration and specialization."""

from .classical import (
    ClassicalInference,
    ClassicalState,
    beta_isomorphism_check,
    classical_domain,
    classical_typecheck,
    classical_verdict,
)
from .mps import Specializer, compare_systems, mps_implications, mps_specialize, mps_verdict

__all__ = [
    'ClassicalInference',
    'ClassicalState',
    'beta_isomorphism_check',
    'classical_domain',
    'classical_typecheck',
    'classical_verdict',
    'Specializer',
    'compare_systems',
    'mps_implications',
    'mps_specialize',
    'mps_verdict'
]
