"""Dipole-coupled oscillator chains as a model of nucleic-acid electron clouds."""

from .energy import (
    BindingEnergyResult,
    asymptotic_binding_energy,
    asymptotic_witness,
    binding_analysis,
    binding_energy,
)
from .errors import DnaChainError, DomainError, InstabilityError, SequenceParseError
from .gaussian import (
    SecondMoments,
    negativity,
    pair_criteria,
    single_site_entropy,
    thermal_moments,
    von_neumann_entropy,
)
from .model import BaseKind, Boundary, ChainSpec, Direction, build_coupling_matrix, chain_matrix, parse_sequence
from .report import EntanglementReport, entanglement_report
from .spectrum import ModeSpectrum, analytic_dispersion, analytic_spectrum, min_frequency, numeric_modes
from .units import CONSTANTS, PhysicalConstants, coupling_constant, thermal_ratio, trapping_frequency

__version__ = "0.1.0"
