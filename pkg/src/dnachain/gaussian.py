"""Thermal second moments of the chain and the entanglement quantities built on them.

Moments are stored dimensionless. With a reference frequency w_ref,

    X_jk = (2 m w_ref / hbar) <x_j x_k>,     P_jk = (2 / (hbar m w_ref)) <p_j p_k>,

so a decoupled ground-state site has X_jj * P_jj = 1 and w_ref cancels from
every observable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spectrum import ModeSpectrum
from .units import CONSTANTS, PhysicalConstants, half_quantum_ratio

# coth(x) == 1 to double precision beyond this
_COTH_CUTOFF = 20.0
_PURITY_SLACK = 1e-9


@dataclass(frozen=True)
class SecondMoments:
    xmat: np.ndarray
    pmat: np.ndarray
    omega_ref: float = 1.0

    def __len__(self) -> int:
        return self.xmat.shape[0]


def thermal_occupation(frequencies, T: float, constants: PhysicalConstants = CONSTANTS) -> np.ndarray:
    """coth(hbar w / 2 k_B T) for each frequency (PHz); exactly 1 at T = 0."""
    out = np.ones(len(frequencies))
    if T == 0:
        return out
    for i, w in enumerate(frequencies):
        x = half_quantum_ratio(float(w), T, constants)
        if x <= _COTH_CUTOFF:
            out[i] = 1.0 / math.tanh(x)
    return out


def thermal_moments(
    spectrum: ModeSpectrum,
    T: float = 0.0,
    omega_ref: float = 1.0,
    constants: PhysicalConstants = CONSTANTS,
) -> SecondMoments:
    """Position and momentum covariances of the thermal state of the chain."""
    if T < 0:
        raise DomainError(f"temperature must be non-negative, got {T!r}")
    if not omega_ref > 0:
        raise DomainError(f"omega_ref must be positive, got {omega_ref!r}")
    w = spectrum.frequencies
    u = spectrum.modes
    occ = thermal_occupation(w, T, constants)
    x = (u * (occ * omega_ref / w)) @ u.T
    p = (u * (occ * w / omega_ref)) @ u.T
    return SecondMoments(0.5 * (x + x.T), 0.5 * (p + p.T), omega_ref)


def _check_site(moments: SecondMoments, j: int) -> None:
    n = len(moments)
    if not 0 <= j < n:
        raise IndexError(f"site {j} out of range for a chain of {n} sites")


def pair_criteria(moments: SecondMoments, j: int, k: int) -> tuple[float, float]:
    """Separability criteria (S1, S2) for sites ``j`` and ``k`` (0-based).

    S1 tests (x_j + x_k, p_j - p_k), S2 the opposite combination. A negative
    value certifies entanglement of the pair.
    """
    _check_site(moments, j)
    _check_site(moments, k)
    if j == k:
        raise DomainError("pair criteria need two distinct sites")
    x, p = moments.xmat, moments.pmat
    xs = x[j, j] + x[k, k]
    ps = p[j, j] + p[k, k]
    s1 = 0.25 * (xs + 2 * x[j, k]) * (ps - 2 * p[j, k]) - 1.0
    s2 = 0.25 * (xs - 2 * x[j, k]) * (ps + 2 * p[j, k]) - 1.0
    return float(s1), float(s2)


def negativity(s1: float, s2: float) -> float:
    """Negativity in nats from the two criteria: sum of max(0, -ln sqrt(S + 1))."""
    total = 0.0
    for s in (s1, s2):
        if not s > -1:
            raise DomainError(f"criterion value {s!r} <= -1 is unphysical")
        total += max(0.0, -0.5 * math.log1p(s))
    return total


def symplectic_eigenvalue(moments: SecondMoments, j: int) -> float:
    _check_site(moments, j)
    return math.sqrt(moments.xmat[j, j] * moments.pmat[j, j])


def von_neumann_entropy(r: float) -> float:
    """Entropy in nats of a single-mode Gaussian state with symplectic eigenvalue ``r``.

    Vacuum is r = 1. Values within 1e-9 below 1 are treated as roundoff.
    """
    if r < 1.0 - _PURITY_SLACK:
        raise DomainError(f"symplectic eigenvalue {r!r} < 1 violates the uncertainty relation")
    if r <= 1.0:
        return 0.0
    a = 0.5 * (r + 1.0)
    b = 0.5 * (r - 1.0)
    return a * math.log(a) - b * math.log(b)


def single_site_entropy(moments: SecondMoments, j: int) -> tuple[float, float]:
    """(symplectic eigenvalue, von Neumann entropy in nats) of site ``j``."""
    r = symplectic_eigenvalue(moments, j)
    return r, von_neumann_entropy(r)
