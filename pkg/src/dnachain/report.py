"""One-call entanglement summary of a chain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .energy import binding_energy
from .gaussian import negativity, pair_criteria, single_site_entropy, thermal_moments
from .model import Boundary, ChainSpec
from .spectrum import chain_modes


@dataclass(frozen=True)
class EntanglementReport:
    pairs: list[tuple[int, int]]
    s1: np.ndarray
    s2: np.ndarray
    negativity: np.ndarray
    symplectic: np.ndarray
    vne: np.ndarray
    binding_energy: float


def adjacent_pairs(n: int, boundary: Boundary) -> list[tuple[int, int]]:
    pairs = [(j, j + 1) for j in range(n - 1)]
    if boundary is Boundary.PERIODIC:
        pairs.append((n - 1, 0))
    return pairs


def entanglement_report(spec: ChainSpec, omega_ref: float = 1.0) -> EntanglementReport:
    """Pair criteria and negativity, per-site entropy at ``spec.temperature``,
    plus the ground-state binding energy."""
    spectrum = chain_modes(spec)
    moments = thermal_moments(spectrum, spec.temperature, omega_ref)
    pairs = adjacent_pairs(len(spec), spec.boundary)
    crit = np.array([pair_criteria(moments, j, k) for j, k in pairs])
    neg = np.array([negativity(a, b) for a, b in crit])
    sites = np.array([single_site_entropy(moments, j) for j in range(len(spec))])
    return EntanglementReport(
        pairs=pairs,
        s1=crit[:, 0],
        s2=crit[:, 1],
        negativity=neg,
        symplectic=sites[:, 0],
        vne=sites[:, 1],
        binding_energy=binding_energy(spectrum, spec.trap_frequencies()),
    )
