"""Long-range interacting cycle graphs and their exact spectra.

G(N, m) is an N-cycle with extra edges joining every pair of nodes at
cyclic distance m, so every node has degree 4 when 2 <= m < N/2.
m = 0 selects the plain cycle (degree 2, no long-range band).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["LricSpec", "Spectrum", "build_hamiltonian", "eigenvalue", "full_spectrum"]


@dataclass(frozen=True)
class LricSpec:
    """Cycle size N and interaction distance m, validated on construction."""

    n_nodes: int
    distance_param: int

    def __post_init__(self):
        n, m = self.n_nodes, self.distance_param
        if not isinstance(n, (int, np.integer)) or not isinstance(m, (int, np.integer)):
            raise ValueError(f"n_nodes and distance_param must be integers, got ({n!r}, {m!r})")
        if m == 0:
            if n < 3:
                raise ValueError(f"cycle mode needs at least 3 nodes, got N={n}")
            return
        if m == 1:
            raise ValueError("m = 1 would duplicate the cycle edges; use m = 0 for the plain cycle")
        if m < 0:
            raise ValueError(f"distance_param must be nonnegative, got m={m}")
        if n < 5:
            raise ValueError(f"interacting mode needs N >= 5, got N={n}")
        if 2 * m >= n:
            raise ValueError(
                f"need m < N/2 strictly so all four neighbours are distinct, got N={n}, m={m}"
            )

    @property
    def is_cycle(self) -> bool:
        return self.distance_param == 0

    @property
    def degree(self) -> int:
        return 2 if self.is_cycle else 4

    def offsets(self) -> tuple[int, ...]:
        """Cyclic offsets carrying a unit hop."""
        n, m = self.n_nodes, self.distance_param
        if self.is_cycle:
            return (1, n - 1)
        return (1, n - 1, m, n - m)


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    mode_angles: np.ndarray


def build_hamiltonian(spec: LricSpec) -> np.ndarray:
    """Dense circulant Hamiltonian of G(N, m).

    Diagonal entries are -degree, unit entries sit at the hop offsets,
    so every row sums to zero.
    """
    n = spec.n_nodes
    h = np.zeros((n, n))
    np.fill_diagonal(h, -float(spec.degree))
    for i in range(n):
        for d in spec.offsets():
            h[i, (i + d) % n] += 1.0
    return h


def eigenvalue(spec: LricSpec, n: int) -> float:
    """Closed-form eigenvalue of mode n."""
    if not 0 <= n < spec.n_nodes:
        raise ValueError(f"mode index {n} outside [0, {spec.n_nodes})")
    theta = 2.0 * np.pi * n / spec.n_nodes
    if spec.is_cycle:
        return -2.0 + 2.0 * np.cos(theta)
    return -4.0 + 2.0 * np.cos(theta) + 2.0 * np.cos(spec.distance_param * theta)


def full_spectrum(spec: LricSpec) -> Spectrum:
    """All N eigenvalues from the closed form, in mode order."""
    n = spec.n_nodes
    angles = 2.0 * np.pi * np.arange(n) / n
    if spec.is_cycle:
        energies = -2.0 + 2.0 * np.cos(angles)
    else:
        energies = -4.0 + 2.0 * np.cos(angles) + 2.0 * np.cos(spec.distance_param * angles)
    return Spectrum(eigenvalues=energies, mode_angles=angles)
