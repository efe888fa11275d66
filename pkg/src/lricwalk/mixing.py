"""Total-variation mixing times: numeric extraction and analytic bounds.

The distance convention follows sum_j |P_j - 1/N| with no 1/2 in front, so
thresholds here are directly comparable to the bound formulas. The lower
bound keeps the two slowest modes; the upper bound majorizes the mode sum
by a geometric tail. Both scale linearly in gamma and fall off as 1/(1+m^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dephasing import IntegratorControl, Trajectory, delta_state, sample_trajectory
from .graph import LricSpec
from .large_gamma import analytic_distribution

__all__ = [
    "MixingReport",
    "FailedPoint",
    "SmallGammaReference",
    "tv_distance",
    "mixing_time_numeric",
    "lower_bound",
    "upper_bound",
    "small_gamma_reference_bounds",
    "sandwich_check",
]

# beyond this the dense simulator is pointlessly slow; use the closed form
SIM_GAMMA_LIMIT = 100.0
SIM_SIZE_LIMIT = 16


@dataclass(frozen=True)
class MixingReport:
    spec: LricSpec
    gamma: float
    epsilon: float
    t_mix_numeric: float | None  # None when not reached within the horizon
    t_lower_exact: float
    t_lower_asym: float
    t_upper: float
    sandwich_ok: bool | None  # None when t_mix_numeric is None
    horizon: float
    source: str  # "sim" | "analytic" | "failed"


@dataclass(frozen=True)
class FailedPoint:
    """Sweep grid point that raised instead of producing a report."""

    n: int
    m: int
    gamma: float
    epsilon: float
    reason: str


@dataclass(frozen=True)
class SmallGammaReference:
    """Prior weak-dephasing upper bounds, for context only."""

    odd_m: float
    even_m: float
    applicable: bool  # False once gamma is not small


def tv_distance(p) -> float:
    """Distance of a probability vector from uniform, paper convention."""
    p = np.asarray(p, dtype=float)
    return float(np.abs(p - 1.0 / len(p)).sum())


def mixing_time_numeric(traj: Trajectory, epsilon: float) -> float | None:
    """Earliest sampled time from which the distance stays at or below epsilon.

    The sustained rule discards candidates that re-cross later. Sampling
    must be dense near the threshold: consecutive distances with either
    value at or below 2*epsilon may differ by at most epsilon/10.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    tvs = np.array([tv_distance(p) for p in traj.probs])
    near = np.minimum(tvs[:-1], tvs[1:]) <= 2.0 * epsilon
    jumps = np.abs(np.diff(tvs))
    if np.any(jumps[near] >= epsilon / 10.0):
        worst = jumps[near].max()
        raise ValueError(
            f"trajectory too coarse near the threshold: consecutive distance "
            f"jump {worst:.3g} >= epsilon/10 = {epsilon / 10:.3g}"
        )
    below = tvs <= epsilon
    if not below[-1]:
        return None
    above = np.nonzero(~below)[0]
    first_sustained = 0 if len(above) == 0 else above[-1] + 1
    if first_sustained >= len(tvs):
        return None
    return float(traj.times[first_sustained])


def _ln_or_zero(x: float) -> float:
    # vacuous-threshold clamp: a nonpositive log means the bound says nothing
    return math.log(x) if x > 1.0 else 0.0


def lower_bound(spec: LricSpec, gamma: float, epsilon: float, asymptotic: bool = False) -> float:
    """Slowest-mode lower bound; `asymptotic` selects the large-N form."""
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    n, m = spec.n_nodes, spec.distance_param
    ln = _ln_or_zero(2.0 / (n * epsilon))
    if asymptotic:
        return 2.0 * gamma * n**2 * ln / (math.pi**2 * (1 + m**2))
    denom = math.sin(math.pi / n) ** 2 + math.sin(math.pi * m / n) ** 2
    return 2.0 * gamma * ln / denom


def upper_bound(spec: LricSpec, gamma: float, epsilon: float) -> float:
    """Geometric-tail upper bound."""
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    n, m = spec.n_nodes, spec.distance_param
    return gamma * n**2 * math.log((2.0 + epsilon) / epsilon) / (2.0 * (1 + m**2))


def small_gamma_reference_bounds(
    spec: LricSpec, gamma: float, epsilon: float
) -> SmallGammaReference:
    """Quoted weak-dephasing bounds; m enters only through its parity."""
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    n = spec.n_nodes
    base = math.log(n / epsilon) / gamma
    return SmallGammaReference(
        odd_m=base * n / (n - 2),
        even_m=base * n / (n - 1),
        applicable=gamma < 1.0,
    )


def _sweep_control(gamma: float) -> IntegratorControl:
    # the classical kernel is exact on the slow modes as long as it is
    # stable, so step right at the stiffness limit to cover long horizons
    return IntegratorControl(dt=min(0.1, 2.0 / gamma))


def sandwich_check(
    spec: LricSpec,
    gamma: float,
    epsilon: float,
    horizon: float | None = None,
    source: str = "auto",
    control: IntegratorControl | None = None,
    start: int = 0,
) -> MixingReport:
    """Extract the numeric mixing time and compare it against both bounds."""
    t_low = lower_bound(spec, gamma, epsilon)
    t_low_asym = lower_bound(spec, gamma, epsilon, asymptotic=True)
    t_up = upper_bound(spec, gamma, epsilon)
    if horizon is None:
        horizon = 1.05 * t_up
    if source == "auto":
        use_sim = gamma <= SIM_GAMMA_LIMIT and spec.n_nodes <= SIM_SIZE_LIMIT
        source = "sim" if use_sim else "analytic"
    if source not in ("sim", "analytic"):
        raise ValueError(f"unknown extraction source {source!r}")

    if source == "sim":
        control = control or _sweep_control(gamma)
        interval = control.dt * max(1, round(horizon / 4000.0 / control.dt))
        times = np.arange(0.0, horizon + 0.5 * interval, interval)
        traj = sample_trajectory(delta_state(spec.n_nodes, start), spec, gamma, times, control)
    else:
        times = np.linspace(0.0, horizon, 4001)
        traj = analytic_distribution(spec, gamma, times, start)

    t_mix = mixing_time_numeric(traj, epsilon)
    ok = None if t_mix is None else bool(t_low <= t_mix <= t_up)
    return MixingReport(
        spec=spec,
        gamma=gamma,
        epsilon=epsilon,
        t_mix_numeric=t_mix,
        t_lower_exact=t_low,
        t_lower_asym=t_low_asym,
        t_upper=t_up,
        sandwich_ok=ok,
        horizon=horizon,
        source=source,
    )
