"""Command-line interface.

Every subcommand writes one data file (CSV or JSON, see :mod:`dnachain.output`)
whose metadata header holds the full resolved parameter set, so that
``argv_from_meta`` turns any header back into a command reproducing the file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .energy import binding_analysis
from .errors import DomainError, InstabilityError, SequenceParseError
from .experiments import (
    BASES,
    PAPER_SCAN_CONFIGS,
    ScanConfig,
    ensemble_entropy,
    negativity_scan,
    neighbor_grid,
)
from .gaussian import negativity, pair_criteria, single_site_entropy, thermal_moments
from .model import Boundary, ChainSpec, Direction, chain_matrix, parse_sequence
from .output import render
from .report import adjacent_pairs
from .spectrum import instability_spacing, numeric_modes
from .units import ANGSTROM, ELECTRON_VOLT, coupling_constant

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INSTABILITY = 4
EXIT_DOMAIN = 5
EXIT_IO = 6

# meta keys that are not command-line options
_RESERVED = ("command", "version")
_SKIP = {"out", "fasta", "func", "command", "format"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _config(text: str) -> ScanConfig:
    try:
        eps, d, omega = text.split(",")
        return ScanConfig(float(eps), Direction.parse(d), float(omega))
    except (ValueError, DomainError):
        raise argparse.ArgumentTypeError(
            f"config must look like EPSILON,DIRECTION,OMEGA (e.g. 1,z,6), got {text!r}"
        ) from None


def _config_text(cfg: ScanConfig) -> str:
    return f"{cfg.epsilon:g},{cfg.direction.value},{cfg.omega0:g}"


def _add_output(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path, help="output path (default: stdout)")


def _add_physics(p, temperature=300.0):
    p.add_argument("--spacing", type=float, default=4.5, help="base spacing in angstrom")
    p.add_argument("--epsilon", type=float, default=1.0, help="dispersion scaling factor")
    p.add_argument("--direction", choices=("x", "y", "z"), default="x")
    p.add_argument("--temperature", type=float, default=temperature, help="kelvin")
    p.add_argument("--electrons", type=int, default=1, help="electrons per cloud")


def _add_chain(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--seq", help="base string, e.g. ACGTA")
    src.add_argument("--fasta", type=Path, help="single-record FASTA file")
    src.add_argument("--omega", type=float, help="uniform chain with this trapping frequency (1e15 rad/s)")
    p.add_argument("--sites", type=int, default=50, help="chain length with --omega")
    p.add_argument("--boundary", choices=("open", "periodic"), default="open")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dnachain", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="phonon frequencies of a chain")
    _add_chain(p)
    _add_physics(p)
    _add_output(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("site-entropy", help="per-site entropy and nearest-neighbour criteria")
    _add_chain(p)
    _add_physics(p)
    _add_output(p)
    p.set_defaults(func=cmd_site_entropy)

    p = sub.add_parser("binding-energy", help="exact vs asymptotic binding energy")
    _add_chain(p)
    _add_physics(p)
    _add_output(p)
    p.set_defaults(func=cmd_binding_energy)

    p = sub.add_parser("negativity-scan", help="negativity against spacing for uniform periodic chains")
    p.add_argument("--r-min", type=float, default=4.0, help="angstrom")
    p.add_argument("--r-max", type=float, default=8.0, help="angstrom")
    p.add_argument("--steps", type=int, default=41)
    p.add_argument("--sites", type=int, default=50)
    p.add_argument("--temperature", type=float, default=300.0)
    p.add_argument(
        "--config", type=_config, action="append",
        help="EPSILON,DIRECTION,OMEGA; repeatable (default: the five reference curves)",
    )
    _add_output(p)
    p.set_defaults(func=cmd_negativity_scan)

    p = sub.add_parser("entropy-ensemble", help="random-sequence ensemble of mean entropy vs Shannon entropy")
    p.add_argument("--strings", type=int, default=1000)
    p.add_argument("--length", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    _add_physics(p)
    _add_output(p)
    p.set_defaults(func=cmd_entropy_ensemble)

    p = sub.add_parser("neighbor-table", help="entropy of a central adenine against its two neighbours")
    p.add_argument("--spacing", type=float, default=4.5, help="angstrom")
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--temperature", type=float, default=300.0)
    p.add_argument("--directions", default="xyz", help="directions whose entropies are summed")
    _add_output(p)
    p.set_defaults(func=cmd_neighbor_table)
    return parser


def _meta(args) -> dict:
    meta = {"command": args.command, "version": __version__}
    for key, value in vars(args).items():
        if key in _SKIP or value is None:
            continue
        if key == "config":
            value = ";".join(_config_text(c) for c in value)
        meta[key.replace("_", "-")] = value
    return meta


def argv_from_meta(meta: dict) -> list[str]:
    """Command line reproducing a data file from its metadata header."""
    argv = [meta["command"]]
    for key, value in meta.items():
        if key in _RESERVED:
            continue
        if key == "config":
            for item in str(value).split(";"):
                argv += ["--config", item]
        else:
            argv += [f"--{key}", str(value)]
    return argv


def _sequence(args):
    """Bases from --seq or --fasta, or None for an --omega chain.

    A FASTA input is folded into ``args.seq`` so the metadata header is
    self-contained.
    """
    if args.fasta is not None:
        try:
            text = args.fasta.read_text()
        except OSError as exc:
            raise SequenceParseError(f"cannot read {args.fasta}: {exc.strerror}") from None
        args.seq = "".join(b.letter for b in parse_sequence(text))
        args.fasta = None
    if args.seq is not None:
        args.sites = None
        return tuple(parse_sequence(args.seq))
    return None


def _chain(args):
    """Trap frequencies, coupling matrix inputs and site labels for chain commands."""
    seq = _sequence(args)
    direction = Direction.parse(args.direction)
    boundary = Boundary.parse(args.boundary)
    if seq is not None:
        spec = ChainSpec.from_angstrom(
            seq, args.spacing, epsilon=args.epsilon, direction=direction,
            boundary=boundary, temperature=args.temperature, n_electrons=args.electrons,
        )
        return spec.trap_frequencies(), spec.k_eff(), direction, boundary, list(spec.letters)
    if args.sites < 2 or (boundary is Boundary.PERIODIC and args.sites < 3):
        raise DomainError(f"too few sites for a {boundary.value} chain: {args.sites}")
    if not args.omega > 0:
        raise DomainError(f"--omega must be positive, got {args.omega}")
    if args.temperature < 0:
        raise DomainError(f"temperature must be non-negative, got {args.temperature}")
    n = args.electrons
    trap = np.full(args.sites, args.omega * np.sqrt(n))
    k = coupling_constant(args.spacing * ANGSTROM, args.epsilon, n)
    return trap, k, direction, boundary, ["-"] * args.sites


def _modes(trap, k, direction, boundary, epsilon):
    try:
        return numeric_modes(chain_matrix(trap, k, direction, boundary))
    except InstabilityError as exc:
        threshold = instability_spacing(trap, direction, boundary, epsilon)
        raise InstabilityError(
            f"{exc}; stable only for spacing above {threshold / ANGSTROM:.4f} angstrom",
            exc.value, exc.index,
        ) from None


def cmd_spectrum(args):
    trap, k, direction, boundary, _ = _chain(args)
    spectrum = _modes(trap, k, direction, boundary, args.epsilon)
    columns = ["mode", "frequency_phz", "omega2_phz2"]
    rows = [(l, float(w), float(w * w)) for l, w in enumerate(spectrum.frequencies, start=1)]
    return columns, rows


def cmd_site_entropy(args):
    trap, k, direction, boundary, labels = _chain(args)
    spectrum = _modes(trap, k, direction, boundary, args.epsilon)
    moments = thermal_moments(spectrum, args.temperature)
    n = len(trap)
    crit = {j: pair_criteria(moments, j, kk) for j, kk in adjacent_pairs(n, boundary)}
    columns = ["site", "base", "symplectic", "vne_nats", "s1_next", "s2_next", "negativity_next"]
    rows = []
    for j in range(n):
        r, vne = single_site_entropy(moments, j)
        s1, s2 = crit.get(j, (None, None))
        neg = negativity(s1, s2) if s1 is not None else None
        rows.append((j + 1, labels[j], r, vne, s1, s2, neg))
    return columns, rows


def cmd_binding_energy(args):
    trap, k, direction, boundary, _ = _chain(args)
    _modes(trap, k, direction, boundary, args.epsilon)
    res = binding_analysis(trap, k, direction, boundary)
    columns = [
        "sites", "exact_j", "exact_ev", "asymptotic_j", "asymptotic_ev", "s_witness", "relative_gap",
    ]
    row = (
        len(trap), res.exact, res.exact / ELECTRON_VOLT, res.asymptotic,
        res.asymptotic / ELECTRON_VOLT, res.s_witness, res.relative_gap,
    )
    return columns, [row]


def cmd_negativity_scan(args):
    if args.config is None:
        args.config = list(PAPER_SCAN_CONFIGS)
    if not 0 < args.r_min <= args.r_max:
        raise DomainError(f"need 0 < r-min <= r-max, got {args.r_min}, {args.r_max}")
    if args.sites < 3:
        raise DomainError(f"periodic chain needs at least 3 sites, got {args.sites}")
    scan = negativity_scan(
        args.r_min * ANGSTROM, args.r_max * ANGSTROM, args.steps, args.config, args.sites, args.temperature
    )
    for f in scan.failures:
        print(
            f"dnachain: config {_config_text(f.config)} unstable at {f.r / ANGSTROM:.4f} angstrom "
            f"(threshold {f.threshold / ANGSTROM:.4f} angstrom); curve dropped",
            file=sys.stderr,
        )
    if not scan.points:
        raise InstabilityError("every scan configuration is unstable on this grid")
    columns = ["epsilon", "direction", "omega0_phz", "r_angstrom", "negativity", "s1", "s2"]
    rows = [
        (p.epsilon, p.direction.value, p.omega0, p.r / ANGSTROM, p.negativity, p.s1, p.s2)
        for p in scan.points
    ]
    return columns, rows


def cmd_entropy_ensemble(args):
    records = ensemble_entropy(
        args.strings, args.length, args.spacing * ANGSTROM, args.epsilon,
        args.direction, args.temperature, args.seed,
    )
    columns = [
        "index", "seed", "sequence", "shannon_nats", "shannon_bits", "mean_vne", "min_freq", "error",
    ]
    rows = [
        (
            r.index, r.seed, r.letters, r.shannon_nats, r.shannon_nats / np.log(2),
            r.mean_vne, r.min_frequency, r.error,
        )
        for r in records
    ]
    return columns, rows


def cmd_neighbor_table(args):
    dirs = [Direction.parse(d) for d in args.directions]
    if not dirs:
        raise DomainError("--directions must name at least one of x, y, z")
    grid = neighbor_grid(r=args.spacing * ANGSTROM, epsilon=args.epsilon, directions=dirs, T=args.temperature)
    columns = ["right\\left"] + [b.name.lower() for b in BASES]
    rows = [[right.name.lower()] + [float(v) for v in grid[i]] for i, right in enumerate(BASES)]
    return columns, rows


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        columns, rows = args.func(args)
        text = render(args.format, _meta(args), columns, rows)
    except SequenceParseError as exc:
        print(f"dnachain: sequence error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InstabilityError as exc:
        print(f"dnachain: instability: {exc}", file=sys.stderr)
        return EXIT_INSTABILITY
    except (DomainError, ValueError) as exc:
        print(f"dnachain: invalid parameter: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            args.out.write_text(text)
        except OSError as exc:
            print(f"dnachain: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
