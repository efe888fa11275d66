"""Dense generator of the dephasing master equation and its exact exponential.

Ground truth for the time stepper: the full N^2 x N^2 matrix acting on
row-major vectorized density matrices, exponentiated by scipy. Deliberately
built from Kronecker products rather than the element-wise right-hand side
so the two construction routes stay independent.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .graph import LricSpec, build_hamiltonian

__all__ = ["build_liouvillian", "exact_evolve", "DENSE_SIZE_LIMIT"]

# dense exponentiation is desk-scale only
DENSE_SIZE_LIMIT = 12


def _check_size(spec: LricSpec, allow_large: bool):
    if spec.n_nodes > DENSE_SIZE_LIMIT and not allow_large:
        raise ValueError(
            f"dense generator for N={spec.n_nodes} exceeds the size guard "
            f"({DENSE_SIZE_LIMIT}); pass allow_large=True to override"
        )


def build_liouvillian(spec: LricSpec, gamma: float, allow_large: bool = False) -> np.ndarray:
    """Matrix L with L @ vec(rho) = d/dt vec(rho), row-major vec convention.

    The coherent part is -(i/4)(H (x) I - I (x) H^T); dephasing damps every
    off-diagonal component of rho at rate gamma.
    """
    _check_size(spec, allow_large)
    if gamma < 0:
        raise ValueError(f"gamma must be nonnegative, got {gamma}")
    n = spec.n_nodes
    h = build_hamiltonian(spec)
    eye = np.eye(n)
    lmat = -0.25j * (np.kron(h, eye) - np.kron(eye, h.T)).astype(complex)
    offdiag = np.ones(n * n)
    offdiag[:: n + 1] = 0.0  # row-major diagonal of rho sits at stride n+1
    lmat -= gamma * np.diag(offdiag)
    return lmat


def exact_evolve(
    rho0: np.ndarray, spec: LricSpec, gamma: float, t: float, allow_large: bool = False
) -> np.ndarray:
    """Propagate rho0 exactly: expm(L*t) applied to the vectorized state."""
    _check_size(spec, allow_large)
    n = spec.n_nodes
    if rho0.shape != (n, n):
        raise ValueError(f"state shape {rho0.shape} does not match N={n}")
    if t == 0:
        return rho0.astype(complex).copy()
    lmat = build_liouvillian(spec, gamma, allow_large)
    propagator = scipy.linalg.expm(lmat * t)
    return (propagator @ rho0.astype(complex).reshape(-1)).reshape(n, n)
