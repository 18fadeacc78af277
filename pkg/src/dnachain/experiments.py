"""Seeded drivers that regenerate the published scans, ensembles and tables."""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InstabilityError
from .gaussian import negativity, pair_criteria, single_site_entropy, thermal_moments
from .model import BaseKind, Boundary, ChainSpec, Direction, chain_matrix
from .spectrum import chain_modes, instability_spacing, numeric_modes
from .units import ANGSTROM, coupling_constant

log = logging.getLogger(__name__)

BASES = (BaseKind.ADENINE, BaseKind.CYTOSINE, BaseKind.GUANINE, BaseKind.THYMINE)


class ScanConfig(NamedTuple):
    epsilon: float
    direction: Direction
    omega0: float  # PHz


# three unscaled curves and two scaled ones
PAPER_SCAN_CONFIGS = (
    ScanConfig(1.0, Direction.Z, 6.0),
    ScanConfig(1.0, Direction.X, 4.0),
    ScanConfig(1.0, Direction.X, 3.0),
    ScanConfig(0.01, Direction.Z, 6.0),
    ScanConfig(0.01, Direction.X, 4.0),
)


@dataclass(frozen=True)
class ScanPoint:
    r: float  # m
    epsilon: float
    direction: Direction
    omega0: float
    negativity: float
    s1: float
    s2: float


@dataclass(frozen=True)
class ScanFailure:
    config: ScanConfig
    r: float
    threshold: float
    message: str


@dataclass
class NegativityScan:
    points: list[ScanPoint] = field(default_factory=list)
    failures: list[ScanFailure] = field(default_factory=list)


def negativity_scan(
    r_min: float,
    r_max: float,
    steps: int,
    configs: Iterable[ScanConfig] = PAPER_SCAN_CONFIGS,
    n_sites: int = 50,
    T: float = 300.0,
) -> NegativityScan:
    """Nearest-neighbour negativity of uniform periodic chains over a spacing grid.

    Spacings in metres. The middle adjacent pair is evaluated; on a uniform
    periodic chain every pair is equivalent. An unstable grid point abandons
    the rest of that config only.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    grid = np.linspace(r_min, r_max, steps)
    j = n_sites // 2 - 1
    scan = NegativityScan()
    for cfg in configs:
        cfg = ScanConfig(float(cfg[0]), Direction.parse(cfg[1]), float(cfg[2]))
        trap = np.full(n_sites, cfg.omega0)
        points = []
        try:
            for r in grid:
                k = coupling_constant(float(r), cfg.epsilon)
                spectrum = numeric_modes(chain_matrix(trap, k, cfg.direction, Boundary.PERIODIC))
                s1, s2 = pair_criteria(thermal_moments(spectrum, T), j, j + 1)
                points.append(
                    ScanPoint(float(r), cfg.epsilon, cfg.direction, cfg.omega0, negativity(s1, s2), s1, s2)
                )
        except InstabilityError as exc:
            threshold = instability_spacing(trap, cfg.direction, Boundary.PERIODIC, cfg.epsilon)
            log.info(
                "config %s unstable at r=%.4g A (threshold %.4g A): %s",
                cfg, r / ANGSTROM, threshold / ANGSTROM, exc,
            )
            scan.failures.append(ScanFailure(cfg, float(r), threshold, str(exc)))
            continue
        scan.points.extend(points)
    return scan


def shannon_entropy(sequence: Sequence[BaseKind] | str) -> tuple[float, float]:
    """Shannon entropy of the empirical base frequencies as (nats, bits)."""
    if len(sequence) == 0:
        raise ValueError("Shannon entropy of an empty sequence is undefined")
    counts = Counter(sequence)
    n = len(sequence)
    nats = -sum((c / n) * math.log(c / n) for c in counts.values())
    nats = max(nats, 0.0)
    return nats, nats / math.log(2)


def substream_seed(master_seed: int, index: int) -> int:
    """Seed of string ``index``: first 64-bit word of SeedSequence(master_seed, spawn_key=(index,))."""
    ss = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def random_sequence(seed: int, length: int) -> tuple[BaseKind, ...]:
    """I.i.d. uniform bases from a PCG64 stream seeded with ``seed``."""
    draws = np.random.default_rng(seed).integers(0, 4, size=length)
    return tuple(BASES[i] for i in draws)


@dataclass(frozen=True)
class EnsembleRecord:
    index: int
    seed: int
    sequence: tuple[BaseKind, ...]
    shannon_nats: float
    mean_vne: float | None
    min_frequency: float | None  # PHz
    error: str | None = None

    @property
    def letters(self) -> str:
        return "".join(b.letter for b in self.sequence)


def ensemble_record(index: int, seed: int, spec: ChainSpec) -> EnsembleRecord:
    nats, _ = shannon_entropy(spec.sequence)
    try:
        spectrum = chain_modes(spec)
    except InstabilityError as exc:
        return EnsembleRecord(index, seed, spec.sequence, nats, None, None, str(exc))
    moments = thermal_moments(spectrum, spec.temperature)
    vne = [single_site_entropy(moments, j)[1] for j in range(len(spec))]
    return EnsembleRecord(
        index, seed, spec.sequence, nats, float(np.mean(vne)), float(spectrum.frequencies[0])
    )


def ensemble_entropy(
    n_strings: int = 1000,
    length: int = 50,
    r: float = 4.5 * ANGSTROM,
    epsilon: float = 1.0,
    direction: Direction | str = Direction.X,
    T: float = 300.0,
    master_seed: int = 0,
) -> list[EnsembleRecord]:
    """Random open chains: mean single-site entropy, Shannon entropy, lowest mode.

    Records come back in string-index order; an unstable chain yields a record
    carrying its error instead of aborting the run.
    """
    if n_strings < 1:
        raise ValueError(f"n_strings must be >= 1, got {n_strings}")
    if length < 2:
        raise ValueError(f"length must be >= 2, got {length}")
    records = []
    for i in range(n_strings):
        seed = substream_seed(master_seed, i)
        spec = ChainSpec(
            random_sequence(seed, length),
            spacing=r,
            epsilon=epsilon,
            direction=direction,
            boundary=Boundary.OPEN,
            temperature=T,
        )
        records.append(ensemble_record(i, seed, spec))
    return records


NEIGHBOR_CHAIN_LENGTH = 17
NEIGHBOR_SITE = 8  # 0-based index of the probed middle site


def neighbor_chain(left: BaseKind, right: BaseKind) -> tuple[BaseKind, ...]:
    seq = [BaseKind.ADENINE] * NEIGHBOR_CHAIN_LENGTH
    seq[NEIGHBOR_SITE - 1] = left
    seq[NEIGHBOR_SITE + 1] = right
    return tuple(seq)


def neighbor_table(
    left: BaseKind,
    right: BaseKind,
    r: float = 4.5 * ANGSTROM,
    epsilon: float = 1.0,
    directions: Iterable[Direction | str] = (Direction.X, Direction.Y, Direction.Z),
    T: float = 0.0,
) -> float:
    """Entropy (nats) of the middle adenine of a 17-site open adenine chain.

    ``left`` and ``right`` replace its two neighbours. The three displacement
    directions are independent oscillator chains, so the reduced state of the
    site factorises and the entropies of the requested directions add.
    """
    # mirror image of the chain swaps the neighbours; fix one orientation so
    # the table is exactly symmetric
    if BASES.index(left) > BASES.index(right):
        left, right = right, left
    seq = neighbor_chain(left, right)
    total = 0.0
    for d in directions:
        spec = ChainSpec(seq, spacing=r, epsilon=epsilon, direction=d, boundary=Boundary.OPEN, temperature=T)
        moments = thermal_moments(chain_modes(spec), T)
        total += single_site_entropy(moments, NEIGHBOR_SITE)[1]
    return total


def neighbor_grid(**kwargs) -> np.ndarray:
    """4x4 grid over (A, C, G, T): row = right neighbour, column = left neighbour."""
    return np.array([[neighbor_table(left, right, **kwargs) for left in BASES] for right in BASES])
