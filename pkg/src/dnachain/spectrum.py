"""Phonon frequencies and normal modes of the coupled chain."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, InstabilityError
from .model import Boundary, ChainSpec, Direction, build_coupling_matrix, chain_matrix
from .units import ANGSTROM, coupling_constant, frequency_from_squared


@dataclass(frozen=True)
class ModeSpectrum:
    """Ascending mode frequencies (PHz) and the orthogonal matrix of mode vectors.

    Column ``l`` of ``modes`` is the mode with frequency ``frequencies[l]``, so
    ``V @ modes == modes @ diag(frequencies**2)``.
    """

    frequencies: np.ndarray
    modes: np.ndarray

    def __len__(self) -> int:
        return self.frequencies.size

    @property
    def squared(self) -> np.ndarray:
        return self.frequencies**2

    def reconstruct(self) -> np.ndarray:
        return (self.modes * self.squared) @ self.modes.T


def analytic_dispersion(
    omega0: float, k_eff: float, n: int, direction: Direction | str, l: int
) -> float:
    """Frequency of mode ``l`` (1..n) of a uniform periodic chain.

    Transverse: w^2 = Omega^2 + 2 (2 cos^2(pi l/n) - 1) K
    Axial:      w^2 = Omega^2 + 4 (2 sin^2(pi l/n) - 1) K
    """
    direction = Direction.parse(direction)
    if not 1 <= l <= n:
        raise DomainError(f"mode index must lie in 1..{n}, got {l}")
    phase = math.pi * l / n
    if direction is Direction.Z:
        w2 = omega0**2 + 4.0 * (2.0 * math.sin(phase) ** 2 - 1.0) * k_eff
    else:
        w2 = omega0**2 + 2.0 * (2.0 * math.cos(phase) ** 2 - 1.0) * k_eff
    return frequency_from_squared(w2, index=l)


def analytic_spectrum(omega0: float, k_eff: float, n: int, direction: Direction | str) -> np.ndarray:
    """All n dispersion frequencies of a uniform periodic chain, ascending."""
    return np.sort([analytic_dispersion(omega0, k_eff, n, direction, l) for l in range(1, n + 1)])


def _fix_signs(modes: np.ndarray) -> np.ndarray:
    # largest-magnitude component positive; argmax picks the lowest index on ties
    lead = np.argmax(np.abs(modes), axis=0)
    signs = np.sign(modes[lead, np.arange(modes.shape[1])])
    signs[signs == 0] = 1.0
    return modes * signs


def numeric_modes(v: np.ndarray) -> ModeSpectrum:
    """Full eigendecomposition of a symmetric coupling matrix."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise DomainError(f"coupling matrix must be square, got shape {v.shape}")
    if not np.array_equal(v, v.T):
        raise DomainError("coupling matrix must be symmetric")
    w2, modes = np.linalg.eigh(v)
    bad = np.flatnonzero(w2 <= 0)
    if bad.size:
        i = int(bad[0])
        raise InstabilityError(
            f"mode {i} has squared frequency {w2[i]:.6g} PHz^2: chain unstable at this spacing",
            value=float(w2[i]),
            index=i,
        )
    return ModeSpectrum(np.sqrt(w2), _fix_signs(modes))


def chain_modes(spec: ChainSpec) -> ModeSpectrum:
    return numeric_modes(build_coupling_matrix(spec))


def min_frequency(spec: ChainSpec) -> float:
    """Smallest phonon frequency (PHz) of the chain."""
    return float(chain_modes(spec).frequencies[0])


def instability_spacing(
    trap,
    direction: Direction | str = Direction.X,
    boundary: Boundary | str = Boundary.OPEN,
    epsilon: float = 1.0,
) -> float:
    """Spacing (m) below which the chain with trapping frequencies ``trap`` (PHz) is unstable.

    Independent of the electron count, which scales the whole matrix.
    """
    trap = np.asarray(trap, dtype=float)

    def lowest(r):
        k = coupling_constant(r, epsilon)
        return np.linalg.eigvalsh(chain_matrix(trap, k, direction, boundary))[0]

    lo, hi = 0.1 * ANGSTROM, 1000 * ANGSTROM
    if lowest(lo) > 0:
        return 0.0
    return brentq(lowest, lo, hi, xtol=1e-16, rtol=1e-12)
