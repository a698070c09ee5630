"""Exact truncated series, quasimap I-functions and P^1 localization checks.

All arithmetic is over the rationals; every series carries an explicit
:class:`~wallcross.series.TruncationSpec`.
"""
from .cohomology import P1QuantumRing, TargetDescriptor, quantum_product, restrict
from .givental import edge_identity_check, ifunction, mirror_transform, twisted_ifunction
from .report import VerificationReport
from .series import (
    NormalizationError,
    Series,
    SeriesError,
    SingularSeriesError,
    TruncationMismatch,
    TruncationOverflow,
    TruncationSpec,
    coefficient,
    invert_unit,
    nth_root,
    substitute,
)
from .tft import irrationality_witness, omega_closed, s_tilde, verify_tft_system
from .verify import VerifyConfig, run_suite, verify_all

__version__ = "0.1.0"

__all__ = [
    "P1QuantumRing", "TargetDescriptor", "quantum_product", "restrict",
    "edge_identity_check", "ifunction", "mirror_transform", "twisted_ifunction",
    "VerificationReport", "NormalizationError", "Series", "SeriesError", "SingularSeriesError",
    "TruncationMismatch", "TruncationOverflow", "TruncationSpec", "coefficient", "invert_unit",
    "nth_root", "substitute", "irrationality_witness", "omega_closed", "s_tilde",
    "verify_tft_system", "VerifyConfig", "run_suite", "verify_all",
]
