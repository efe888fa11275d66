"""Closed-system walk on the cycle via the Fourier mode expansion.

A circulant Hamiltonian diagonalizes in the discrete Fourier basis, so the
propagator applied to a basis state is an inverse FFT of mode phases. The
`scale` prefactor selects the convention: 1 for exp(-iHt) itself, 1/4 to
match the coherent part of the dephasing generator.
"""

from __future__ import annotations

import numpy as np

from .graph import LricSpec, full_spectrum

__all__ = ["coherent_amplitudes", "coherent_probabilities"]


def coherent_amplitudes(spec: LricSpec, t: float, start: int = 0, scale: float = 1.0) -> np.ndarray:
    """Amplitude vector of exp(-i*scale*H*t) applied to the start node.

    Returns the length-N complex array whose entry j is
    (1/N) sum_k exp(-i*scale*E_k*t) exp(2*pi*i*k*(j-start)/N).
    """
    n = spec.n_nodes
    if not 0 <= start < n:
        raise ValueError(f"start node {start} outside [0, {n})")
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    phases = np.exp(-1j * scale * full_spectrum(spec).eigenvalues * t)
    # ifft supplies the (1/N) sum with the +2*pi*i*j*k/N kernel; rolling
    # by `start` shifts j to j - start.
    return np.roll(np.fft.ifft(phases), start)


def coherent_probabilities(spec: LricSpec, t, start: int = 0, scale: float = 1.0) -> np.ndarray:
    """Node occupation probabilities of the coherent walk at time t."""
    amps = coherent_amplitudes(spec, t, start, scale)
    return np.abs(amps) ** 2
