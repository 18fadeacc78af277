"""Chain description and the coupling matrix of the dipole-coupled oscillators."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, SequenceParseError
from .units import ANGSTROM, coupling_constant, trapping_frequency


class BaseKind(enum.Enum):
    """Nucleic-acid base with its (alpha_x, alpha_y, alpha_z) polarizabilities in au."""

    ADENINE = "A"
    CYTOSINE = "C"
    GUANINE = "G"
    THYMINE = "T"

    @property
    def letter(self) -> str:
        return self.value

    def polarizability(self, direction: "Direction | str") -> float:
        return _POLARIZABILITY[self][Direction.parse(direction).axis]

    def trapping_frequency(self, direction: "Direction | str", n_electrons: int = 1) -> float:
        return trapping_frequency(self.polarizability(direction), n_electrons)

    @classmethod
    def from_letter(cls, letter: str) -> "BaseKind":
        return cls(letter.upper())


_POLARIZABILITY = {
    BaseKind.ADENINE: (102.5, 114.0, 49.6),
    BaseKind.CYTOSINE: (78.8, 107.1, 44.2),
    BaseKind.GUANINE: (108.7, 124.8, 51.2),
    BaseKind.THYMINE: (80.7, 101.7, 45.9),
}


class Direction(enum.Enum):
    """Oscillation direction. The chain axis is z."""

    X = "x"
    Y = "y"
    Z = "z"

    @property
    def axis(self) -> int:
        return "xyz".index(self.value)

    @property
    def sign(self) -> int:
        """Coupling sign factor: +1 transverse to the chain, -2 along it."""
        return -2 if self is Direction.Z else 1

    @classmethod
    def parse(cls, value: "Direction | str") -> "Direction":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"direction must be one of x, y, z, got {value!r}") from None


class Boundary(enum.Enum):
    OPEN = "open"
    PERIODIC = "periodic"

    @classmethod
    def parse(cls, value: "Boundary | str") -> "Boundary":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"boundary must be open or periodic, got {value!r}") from None


@dataclass(frozen=True)
class ChainSpec:
    """Everything needed to build one chain experiment.

    ``spacing`` is in metres; use :meth:`from_angstrom` for the usual inputs.
    """

    sequence: tuple[BaseKind, ...]
    spacing: float = 4.5 * ANGSTROM
    epsilon: float = 1.0
    direction: Direction = Direction.X
    boundary: Boundary = Boundary.OPEN
    temperature: float = 300.0
    n_electrons: int = 1

    def __post_init__(self):
        seq = self.sequence
        if isinstance(seq, str):
            seq = parse_sequence(seq)
        object.__setattr__(self, "sequence", tuple(seq))
        object.__setattr__(self, "direction", Direction.parse(self.direction))
        object.__setattr__(self, "boundary", Boundary.parse(self.boundary))
        n = len(self.sequence)
        if n < 2:
            raise DomainError(f"chain needs at least 2 sites, got {n}")
        if self.boundary is Boundary.PERIODIC and n < 3:
            raise DomainError("periodic chain needs at least 3 sites")
        if not self.spacing > 0:
            raise DomainError(f"spacing must be positive, got {self.spacing!r}")
        if not self.epsilon > 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon!r}")
        if self.temperature < 0:
            raise DomainError(f"temperature must be non-negative, got {self.temperature!r}")
        if self.n_electrons < 1:
            raise DomainError(f"n_electrons must be >= 1, got {self.n_electrons!r}")

    @classmethod
    def from_angstrom(cls, sequence, spacing: float = 4.5, **kwargs) -> "ChainSpec":
        return cls(sequence, spacing=spacing * ANGSTROM, **kwargs)

    def __len__(self) -> int:
        return len(self.sequence)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.sequence)) == 1

    @property
    def letters(self) -> str:
        return "".join(b.letter for b in self.sequence)

    def trap_frequencies(self) -> np.ndarray:
        """Per-site trapping frequencies Omega_j in PHz."""
        return np.array(
            [b.trapping_frequency(self.direction, self.n_electrons) for b in self.sequence]
        )

    def k_eff(self) -> float:
        return coupling_constant(self.spacing, self.epsilon, self.n_electrons)


def chain_matrix(
    trap: Sequence[float],
    k_eff: float,
    direction: Direction | str = Direction.X,
    boundary: Boundary | str = Boundary.OPEN,
) -> np.ndarray:
    """Coupling matrix for explicit per-site trapping frequencies (PHz) and K_eff (PHz^2).

    Diagonal Omega_j^2, nearest-neighbour entries sign*K_eff, plus the two
    corner entries for a periodic chain.
    """
    trap = np.asarray(trap, dtype=float)
    direction = Direction.parse(direction)
    boundary = Boundary.parse(boundary)
    n = trap.size
    if n < 2:
        raise DomainError(f"chain needs at least 2 sites, got {n}")
    if boundary is Boundary.PERIODIC and n < 3:
        raise DomainError("periodic chain needs at least 3 sites")
    off = direction.sign * k_eff
    v = np.diag(trap**2)
    for j in range(n - 1):
        v[j, j + 1] = off
        v[j + 1, j] = off
    if boundary is Boundary.PERIODIC:
        v[0, n - 1] = off
        v[n - 1, 0] = off
    return v


def build_coupling_matrix(spec: ChainSpec) -> np.ndarray:
    return chain_matrix(spec.trap_frequencies(), spec.k_eff(), spec.direction, spec.boundary)


def parse_sequence(text: str) -> list[BaseKind]:
    """Parse a plain base string or a single-record FASTA document.

    Header lines (``>``) and whitespace are skipped; letters are case-insensitive.
    Positions in error messages are 1-based over the base characters read so far.
    """
    bases: list[BaseKind] = []
    headers = 0
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith(">"):
            headers += 1
            if headers > 1:
                raise SequenceParseError("FASTA input holds more than one record")
            continue
        for ch in stripped:
            if ch.isspace():
                continue
            pos = len(bases) + 1
            try:
                bases.append(BaseKind.from_letter(ch))
            except ValueError:
                raise SequenceParseError(
                    f"invalid base {ch!r} at position {pos}", position=pos, char=ch
                ) from None
    if not bases:
        raise SequenceParseError("no bases found in input")
    return bases


def uniform_sequence(base: BaseKind, n: int) -> tuple[BaseKind, ...]:
    return (base,) * n
