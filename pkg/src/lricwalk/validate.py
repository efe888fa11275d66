"""Self-contained correctness checks runnable from the command line.

Each check compares two independent routes to the same quantity (closed
form vs dense solver, stepper vs exact exponential, and so on) and reports
the measured error next to its tolerance. The `validate` CLI command runs
them all and fails if any one fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coherent, dephasing, graph, large_gamma, liouville, mixing

__all__ = ["CheckResult", "run_all"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


SPECTRAL_CASES = [(8, 3), (10, 4), (12, 5), (16, 3), (6, 0)]


def check_spectral(tol: float = 1e-10) -> CheckResult:
    worst = 0.0
    for n, m in SPECTRAL_CASES:
        spec = graph.LricSpec(n, m)
        dense = np.linalg.eigvalsh(graph.build_hamiltonian(spec))
        closed = np.sort(graph.full_spectrum(spec).eigenvalues)
        worst = max(worst, float(np.abs(dense - closed).max()))
    return CheckResult("spectral-formula-vs-dense", worst <= tol, f"max dev {worst:.3e} (tol {tol:g})")


def check_generator(spec=None, gamma: float = 3.0, rhs_fn=None, tol: float = 1e-12) -> CheckResult:
    """Element-wise right-hand side against the dense generator on a full
    basis of matrix units. `rhs_fn` is injectable so a deliberately broken
    derivative can be shown to fail."""
    spec = spec or graph.LricSpec(6, 2)
    rhs_fn = rhs_fn or dephasing.master_rhs
    n = spec.n_nodes
    lmat = liouville.build_liouvillian(spec, gamma)
    worst = 0.0
    for j in range(n):
        for k in range(n):
            unit = np.zeros((n, n), dtype=complex)
            unit[j, k] = 1.0
            direct = rhs_fn(unit, spec, gamma).reshape(-1)
            via_matrix = lmat @ unit.reshape(-1)
            worst = max(worst, float(np.abs(direct - via_matrix).max()))
    return CheckResult("generator-vs-dense-basis", worst <= tol, f"max dev {worst:.3e} (tol {tol:g})")


def check_stepper(quick: bool = False, tol: float = 1e-6) -> CheckResult:
    times = [1.0, 10.0] if quick else [1.0, 10.0, 100.0]
    worst = 0.0
    for n, m in [(6, 2), (8, 3)]:
        spec = graph.LricSpec(n, m)
        rho0 = dephasing.delta_state(n)
        for g in [5.0, 50.0]:
            for t in times:
                stepped = dephasing.evolve(rho0, spec, g, t)
                exact = liouville.exact_evolve(rho0, spec, g, t)
                worst = max(worst, float(np.abs(stepped - exact).max()))
    return CheckResult("stepper-vs-exact", worst <= tol, f"max dev {worst:.3e} (tol {tol:g})")


def check_conservation(quick: bool = False) -> CheckResult:
    spec = graph.LricSpec(8, 3) if quick else graph.LricSpec(12, 5)
    t_max = 10.0 if quick else 50.0
    gammas = [0.0, 10.0, 100.0] if quick else [0.0, 1.0, 10.0, 100.0]
    worst_trace = worst_herm = 0.0
    worst_eig = 0.0
    times = np.arange(0.5, t_max + 0.25, 0.5)
    for g in gammas:
        rho = dephasing.delta_state(spec.n_nodes)
        t_prev = 0.0
        for t in times:
            rho = dephasing.evolve(rho, spec, g, t - t_prev)
            t_prev = t
            trace_dev, herm, min_eig = dephasing.density_defects(rho)
            worst_trace = max(worst_trace, trace_dev)
            worst_herm = max(worst_herm, herm)
            worst_eig = min(worst_eig, min_eig)
    ok = worst_trace <= 1e-8 and worst_herm <= 1e-9 and worst_eig >= -1e-7
    return CheckResult(
        "conservation",
        ok,
        f"trace dev {worst_trace:.3e}, herm {worst_herm:.3e}, min eig {worst_eig:.3e}",
    )


def check_coherent_limit(quick: bool = False, tol: float = 1e-6) -> CheckResult:
    spec = graph.LricSpec(10, 3)
    t_max = 5.0 if quick else 20.0
    worst = 0.0
    for t in np.arange(1.0, t_max + 0.5, 1.0):
        diag = np.diag(dephasing.evolve(dephasing.delta_state(10), spec, 0.0, t)).real
        ref = coherent.coherent_probabilities(spec, t, scale=0.25)
        worst = max(worst, float(np.abs(diag - ref).max()))
    return CheckResult("coherent-limit", worst <= tol, f"max dev {worst:.3e} (tol {tol:g})")


def check_diagonal_decay(tol: float = 1e-6) -> CheckResult:
    spec = graph.LricSpec(8, 3)
    g = 5.0
    # the split kernel damps off-diagonals with the exact factor, so the
    # cyclic-diagonal decay law holds to roundoff; the classical kernel
    # would be off by ~(gamma*dt)^5/120 per step
    control = dephasing.IntegratorControl(scheme="split")
    rho0 = dephasing.superposition_state(8)
    d1_0 = abs(dephasing.diagonal_sums(rho0)[1])
    worst = 0.0
    for t in [0.1, 0.2, 0.4]:
        rho = dephasing.evolve(rho0, spec, g, t, control)
        ratio = abs(dephasing.diagonal_sums(rho)[1]) / d1_0
        worst = max(worst, abs(ratio / math.exp(-g * t) - 1.0))
    return CheckResult("diagonal-sum-decay", worst <= tol, f"max rel dev {worst:.3e} (tol {tol:g})")


def check_closed_form(quick: bool = False, tol: float = 5e-3) -> CheckResult:
    spec = graph.LricSpec(10, 3)
    g = 50.0
    t_max, step = (100.0, 1.0) if quick else (400.0, 0.5)
    times = np.arange(step, t_max + step / 2, step)
    rho = dephasing.delta_state(10)
    worst = 0.0
    t_prev = 0.0
    for t in times:
        rho = dephasing.evolve(rho, spec, g, t - t_prev)
        t_prev = t
        ref = np.array([large_gamma.analytic_probability(spec, g, t, j) for j in range(10)])
        worst = max(worst, float(np.abs(np.diag(rho).real - ref).max()))
    return CheckResult("closed-form-agreement", worst <= tol, f"max dev {worst:.3e} (tol {tol:g})")


def check_bound_arithmetic() -> CheckResult:
    spec = graph.LricSpec(10, 3)
    cyc = graph.LricSpec(10, 0)
    checks = [
        (
            mixing.lower_bound(spec, 50.0, 0.01),
            2 * 50 * math.log(20.0) / (math.sin(math.pi / 10) ** 2 + math.sin(3 * math.pi / 10) ** 2),
        ),
        (mixing.lower_bound(cyc, 50.0, 0.01, asymptotic=True), 2 * 50 * 100 * math.log(20.0) / math.pi**2),
        (mixing.upper_bound(spec, 50.0, 0.01), 250.0 * math.log(201.0)),
        (mixing.upper_bound(cyc, 50.0, 0.01), 2500.0 * math.log(201.0)),
        (mixing.small_gamma_reference_bounds(cyc, 0.01, 0.01).odd_m, 100 * math.log(1000.0) * 10 / 8),
        (mixing.small_gamma_reference_bounds(cyc, 0.01, 0.01).even_m, 100 * math.log(1000.0) * 10 / 9),
    ]
    worst = max(abs(got / want - 1.0) for got, want in checks)
    return CheckResult("bound-arithmetic", worst <= 1e-12, f"max rel dev {worst:.3e} (tol 1e-12)")


def check_sandwich_spot() -> CheckResult:
    report = mixing.sandwich_check(graph.LricSpec(8, 3), 20.0, 0.01)
    ok = report.sandwich_ok is True
    t_mix = "not reached" if report.t_mix_numeric is None else f"{report.t_mix_numeric:.1f}"
    return CheckResult(
        "sandwich-spot",
        ok,
        f"t_mix {t_mix} in [{report.t_lower_exact:.1f}, {report.t_upper:.1f}]",
    )


def run_all(quick: bool = False) -> list[CheckResult]:
    return [
        check_spectral(),
        check_generator(),
        check_stepper(quick),
        check_conservation(quick),
        check_coherent_limit(quick),
        check_diagonal_decay(),
        check_closed_form(quick),
        check_bound_arithmetic(),
        check_sandwich_spot(),
    ]
