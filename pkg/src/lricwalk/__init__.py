"""Quantum walks on long-range interacting cycles under dephasing."""

from .coherent import coherent_amplitudes, coherent_probabilities
from .dephasing import (
    IntegrationError,
    IntegratorControl,
    Trajectory,
    delta_state,
    density_defects,
    diagonal_sums,
    evolve,
    inverse_s_transform,
    master_rhs,
    offdiagonal_profile,
    s_transform,
    sample_trajectory,
    superposition_state,
)
from .graph import LricSpec, Spectrum, build_hamiltonian, eigenvalue, full_spectrum
from .large_gamma import (
    ModeCoefficients,
    ModeRates,
    analytic_distribution,
    analytic_offdiagonals,
    analytic_probability,
    mode_coefficients,
    mode_rates,
    reconstruct_density,
)
from .liouville import build_liouvillian, exact_evolve
from .mixing import (
    FailedPoint,
    MixingReport,
    SmallGammaReference,
    lower_bound,
    mixing_time_numeric,
    sandwich_check,
    small_gamma_reference_bounds,
    tv_distance,
    upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "LricSpec",
    "Spectrum",
    "build_hamiltonian",
    "eigenvalue",
    "full_spectrum",
    "coherent_amplitudes",
    "coherent_probabilities",
    "IntegratorControl",
    "IntegrationError",
    "Trajectory",
    "master_rhs",
    "evolve",
    "sample_trajectory",
    "s_transform",
    "inverse_s_transform",
    "diagonal_sums",
    "offdiagonal_profile",
    "density_defects",
    "delta_state",
    "superposition_state",
    "ModeRates",
    "ModeCoefficients",
    "mode_rates",
    "mode_coefficients",
    "analytic_probability",
    "analytic_distribution",
    "analytic_offdiagonals",
    "reconstruct_density",
    "MixingReport",
    "FailedPoint",
    "SmallGammaReference",
    "tv_distance",
    "mixing_time_numeric",
    "lower_bound",
    "upper_bound",
    "small_gamma_reference_bounds",
    "sandwich_check",
    "build_liouvillian",
    "exact_evolve",
]
