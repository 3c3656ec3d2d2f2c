"""Toeplitz operators with measure symbols on the Fock space and their ideal norms."""

from .fockmeasure import (
    AtomicMeasure,
    DensityMeasure,
    Hat,
    MeasureFormatError,
    QuadratureError,
    Tilde,
    hat,
    kernel,
    kernel_identity_check,
    lattice_sequence,
    load_measure,
    normalized_kernel,
    tilde,
    truncate,
)
from .lattice import LatticeSpec, enumerate_lattice, partition
from .snf import CertifiedSequence, KyFan, Lorentz, PowerSum, SupNorm, eval_limit, parse_snf
from .spectra import HermitianPSD, SValues, frac_power, phi_norm, s_numbers
from .toeplitz import berezin, build_atomic, build_truncated, frame_estimate, norm_bounds
from .verify import berezin_constant, berezin_sandwich, check_tilde_domination, main_chain, partition_subadditivity

__all__ = [
    "AtomicMeasure",
    "DensityMeasure",
    "Hat",
    "MeasureFormatError",
    "QuadratureError",
    "Tilde",
    "hat",
    "kernel",
    "kernel_identity_check",
    "lattice_sequence",
    "load_measure",
    "normalized_kernel",
    "tilde",
    "truncate",
    "LatticeSpec",
    "enumerate_lattice",
    "partition",
    "CertifiedSequence",
    "KyFan",
    "Lorentz",
    "PowerSum",
    "SupNorm",
    "eval_limit",
    "parse_snf",
    "HermitianPSD",
    "SValues",
    "frac_power",
    "phi_norm",
    "s_numbers",
    "berezin",
    "build_atomic",
    "build_truncated",
    "frame_estimate",
    "norm_bounds",
    "berezin_constant",
    "berezin_sandwich",
    "check_tilde_domination",
    "main_chain",
    "partition_subadditivity",
]

__version__ = "0.1.0"
