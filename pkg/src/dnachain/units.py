"""Physical constants and the elementary frequency formulas of the model.

Frequencies are angular frequencies. Internally they are carried as floats in
units of ``PHZ`` = 1e15 rad/s (the unit the literature quotes as "10^15 Hz"),
squared frequencies in PHz^2. SI values only appear at the I/O boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import constants as _codata

from .errors import DomainError, InstabilityError

PHZ = 1e15
ANGSTROM = 1e-10
ELECTRON_VOLT = _codata.electron_volt


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants used by the model (CODATA values from scipy)."""

    elementary_charge: float = _codata.e
    electron_mass: float = _codata.m_e
    vacuum_permittivity: float = _codata.epsilon_0
    reduced_planck: float = _codata.hbar
    boltzmann: float = _codata.k
    # F m^2 per atomic polarizability unit, as tabulated for the bases
    atomic_polarizability_unit: float = 0.164e-40

    def __post_init__(self):
        for name, value in self.__dict__.items():
            if not value > 0:
                raise DomainError(f"{name} must be positive, got {value!r}")

    @property
    def charge_to_mass(self) -> float:
        """e^2 / m_e in C^2/kg."""
        return self.elementary_charge**2 / self.electron_mass


CONSTANTS = PhysicalConstants()


def frequency_from_squared(w2: float, index: int | None = None) -> float:
    """Square root of a squared frequency, refusing non-positive input."""
    if not w2 > 0:
        raise InstabilityError(
            f"non-positive squared frequency {w2!r} PHz^2: chain unstable at this spacing",
            value=w2,
            index=index,
        )
    return math.sqrt(w2)


def trapping_frequency(
    alpha: float, n_electrons: int = 1, constants: PhysicalConstants = CONSTANTS
) -> float:
    """Trapping frequency (PHz) of an electron cloud with polarizability ``alpha`` (au).

    Omega = sqrt(n e^2 / (m_e alpha)); charge and mass both scale with the
    electron count, so Omega^2 is linear in ``n_electrons``.
    """
    if not alpha > 0:
        raise DomainError(f"polarizability must be positive, got {alpha!r}")
    if n_electrons < 1:
        raise DomainError(f"n_electrons must be >= 1, got {n_electrons!r}")
    alpha_si = alpha * constants.atomic_polarizability_unit
    return math.sqrt(n_electrons * constants.charge_to_mass / alpha_si) / PHZ


def polarizability(
    omega: float, n_electrons: int = 1, constants: PhysicalConstants = CONSTANTS
) -> float:
    """Inverse of :func:`trapping_frequency`: polarizability in au for ``omega`` in PHz."""
    if not omega > 0:
        raise DomainError(f"frequency must be positive, got {omega!r}")
    omega_si = omega * PHZ
    return n_electrons * constants.charge_to_mass / omega_si**2 / constants.atomic_polarizability_unit


def coupling_constant(
    r: float,
    epsilon: float = 1.0,
    n_electrons: int = 1,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Nearest-neighbour dipole coupling K_eff in PHz^2 for spacing ``r`` in metres.

    K_eff = sqrt(epsilon) n e^2 / (4 pi eps0 m_e r^3). The dispersion-scaling
    factor enters under a square root.
    """
    if not r > 0:
        raise DomainError(f"spacing must be positive, got {r!r}")
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon!r}")
    if n_electrons < 1:
        raise DomainError(f"n_electrons must be >= 1, got {n_electrons!r}")
    k = (
        math.sqrt(epsilon)
        * n_electrons
        * constants.charge_to_mass
        / (4.0 * math.pi * constants.vacuum_permittivity * r**3)
    )
    return k / PHZ**2


def thermal_ratio(T: float, omega: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """2 k_B T / (hbar omega) for ``omega`` in PHz; below 1 thermal noise is weak."""
    if T < 0:
        raise DomainError(f"temperature must be non-negative, got {T!r}")
    if not omega > 0:
        raise DomainError(f"frequency must be positive, got {omega!r}")
    return 2.0 * constants.boltzmann * T / (constants.reduced_planck * omega * PHZ)


def half_quantum_ratio(omega: float, T: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """hbar omega / (2 k_B T); ``inf`` at T = 0."""
    thermal = 2.0 * constants.boltzmann * T
    if thermal == 0:  # also catches subnormal T
        return math.inf
    return constants.reduced_planck * omega * PHZ / thermal
