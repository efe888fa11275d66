"""Closed-form strong-dephasing solution.

In the strong-damping regime each Fourier mode of the occupation vector
relaxes at a slow rate proportional to 1/gamma, while the surviving
off-diagonal structure of the phase-rotated state is a narrow band: the
main diagonal, the nearest-neighbour diagonal, and the long-range-offset
diagonal. This module evaluates those displayed leading-order formulas
verbatim; corrections are O(1/gamma^2) and are not resummed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dephasing import Trajectory, inverse_s_transform
from .graph import LricSpec

__all__ = [
    "ModeRates",
    "ModeCoefficients",
    "mode_rates",
    "mode_coefficients",
    "analytic_probability",
    "analytic_distribution",
    "analytic_offdiagonals",
    "reconstruct_density",
    "REGIME_GAMMA",
]

# below this gamma the leading-order formulas are out of their regime
REGIME_GAMMA = 10.0


@dataclass(frozen=True)
class ModeRates:
    """Decay rates of the four solution branches, per Fourier mode."""

    gamma0: np.ndarray  # slow branch, ~ 1/(2*gamma)
    gamma1: np.ndarray  # fast branch, gamma - gamma0
    gamma2: np.ndarray  # identically zero
    gamma3: np.ndarray  # bare dephasing rate


@dataclass(frozen=True)
class ModeCoefficients:
    """Leading-order branch weights for the occupation (a), nearest (d)
    and long-range (f) diagonals. Branch 2 carries no displayed weight."""

    a0: np.ndarray
    a1: np.ndarray
    a3: np.ndarray
    d0: np.ndarray
    d1: np.ndarray
    d3: np.ndarray
    f0: np.ndarray
    f1: np.ndarray
    f3: np.ndarray


def _sines(spec: LricSpec):
    k = np.arange(spec.n_nodes)
    s1 = np.sin(np.pi * k / spec.n_nodes)
    sm = np.sin(np.pi * k * spec.distance_param / spec.n_nodes)
    return s1, sm


def mode_rates(spec: LricSpec, gamma: float) -> ModeRates:
    """Branch decay rates per mode; the slow one is (s1^2 + sm^2)/(2*gamma)."""
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    s1, sm = _sines(spec)
    slow = (s1**2 + sm**2) / (2.0 * gamma)
    n = spec.n_nodes
    return ModeRates(
        gamma0=slow,
        gamma1=gamma - slow,
        gamma2=np.zeros(n),
        gamma3=np.full(n, float(gamma)),
    )


def mode_coefficients(spec: LricSpec, gamma: float) -> ModeCoefficients:
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    s1, sm = _sines(spec)
    k = np.arange(spec.n_nodes)
    phase1 = np.exp(1j * np.pi * k / spec.n_nodes)
    phasem = np.exp(1j * np.pi * k * spec.distance_param / spec.n_nodes)
    d0 = (1j / gamma) * s1 * phase1
    f0 = (1j / gamma) * sm * phasem
    return ModeCoefficients(
        a0=np.ones(spec.n_nodes, dtype=complex),
        a1=(-(s1**2 + sm**2) / (2.0 * gamma**2)).astype(complex),
        a3=np.zeros(spec.n_nodes, dtype=complex),
        d0=d0,
        d1=-d0,
        d3=d0 / gamma,
        f0=f0,
        f1=-f0,
        f3=f0 / gamma,
    )


def _occupations(spec: LricSpec, gamma: float, t: float) -> np.ndarray:
    rates = mode_rates(spec, gamma).gamma0
    a = np.fft.ifft(np.exp(-rates * t))
    assert np.abs(a.imag).max() <= 1e-12, "mode sum should be real"
    return a.real


def analytic_probability(spec: LricSpec, gamma: float, t: float, j: int) -> float:
    """Occupation of node j at time t from the closed-form mode sum."""
    if not 0 <= j < spec.n_nodes:
        raise ValueError(f"node {j} outside [0, {spec.n_nodes})")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return float(_occupations(spec, gamma, t)[j])


def analytic_distribution(spec: LricSpec, gamma: float, times, start: int = 0) -> Trajectory:
    """Closed-form occupation vectors on a time grid, as a Trajectory.

    A start node other than 0 just relabels the cycle.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or len(times) == 0:
        raise ValueError("times must be a non-empty 1-d sequence")
    if np.any(times < 0):
        raise ValueError("times must be nonnegative")
    if np.any(np.diff(times) <= 0):
        raise ValueError("times must be strictly increasing")
    probs = np.empty((len(times), spec.n_nodes))
    for i, t in enumerate(times):
        probs[i] = np.roll(_occupations(spec, gamma, t), start)
    tag = "closed-form" if gamma >= REGIME_GAMMA else "closed-form-out-of-regime"
    return Trajectory(
        times=times, probs=probs, spec=spec, gamma=gamma, integrator=tag, dt=0.0
    )


def analytic_offdiagonals(spec: LricSpec, gamma: float, t: float):
    """Nearest-neighbour and long-range diagonal profiles (d_j, f_j) at t.

    Assembled from the three branches with displayed weights; at t = 0 the
    slow and fast branches cancel, leaving an O(1/gamma^2) residual.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    rates = mode_rates(spec, gamma)
    coef = mode_coefficients(spec, gamma)
    e0 = np.exp(-rates.gamma0 * t)
    e1 = np.exp(-rates.gamma1 * t)
    e3 = np.exp(-rates.gamma3 * t)
    d = np.fft.ifft(coef.d0 * e0 + coef.d1 * e1 + coef.d3 * e3)
    f = np.fft.ifft(coef.f0 * e0 + coef.f1 * e1 + coef.f3 * e3)
    return d, f


def reconstruct_density(spec: LricSpec, gamma: float, t: float) -> np.ndarray:
    """Banded closed-form density matrix: occupations on the diagonal,
    d_j/2 on the adjacent diagonals, f_j/2 on the long-range diagonals."""
    n = spec.n_nodes
    m = spec.distance_param
    a = _occupations(spec, gamma, t)
    d, f = analytic_offdiagonals(spec, gamma, t)
    s = np.zeros((n, n), dtype=complex)
    j = np.arange(n)
    s[j, j] = a
    s[j, (j + 1) % n] = d / 2.0
    s[j, (j - 1) % n] = d / 2.0
    if m >= 2:
        s[j, (j + m) % n] = f / 2.0
        s[j, (j - m) % n] = f / 2.0
    return inverse_s_transform(s)
