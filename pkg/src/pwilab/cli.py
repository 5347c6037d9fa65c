"""Command-line front end: ``pwilab <command> [options]``.

Exit codes are 0 on success, 1 on a domain error or failed reproduction
and 2 on a usage error.
"""

import argparse
import json
import logging
import os
import re
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import zip_longest
from pathlib import Path

from pwilab.connecting.equations import parametric_coefficients
from pwilab.connecting.graph import build_graph
from pwilab.display.plot import PlotStyle, render_plot
from pwilab.embedding.ergodic import ergodic_residual, resonance_check, xi_estimates
from pwilab.embedding.symbolic import best_alignment, symbolic_match
from pwilab.embedding.tangent import TangentState, tangent_orbit
from pwilab.errors import ConfigError, PwilabError
from pwilab.experiments import constants as C
from pwilab.experiments.reproduce import Case, reproduce_many, system_for
from pwilab.experiments.systems import (
    PaperSystem,
    build_cone_family,
    build_paper_3pwi,
    build_return_strip,
)
from pwilab.iet.induction import rauzy_induction
from pwilab.iet.permutation import Permutation
from pwilab.iet.returns import zero_orbit_statistics
from pwilab.iet.transformation import Direction, Iet, make_iet
from pwilab.numerics import DEFAULT_CAP
from pwilab.persistence import export_orbit, load_pwi, read_orbit, write_report
from pwilab.pwi.system import Pwi, batch_orbits, pwi_first_return

log = logging.getLogger(__name__)

THREADS_ENV = "PWILAB_THREADS"

SYSTEMS = ("paper-3pwi", "cone-family", "return-strip")


@dataclass
class RunConfig:
    """Validated options for one invocation."""

    command: str = ""
    action: str = ""
    lengths: tuple[float, ...] = ()
    perm: Permutation | None = None
    steps: int = 1000
    transient: int = 0
    seeds: tuple[complex, ...] = (0j,)
    cap: int = DEFAULT_CAP
    level: int = C.XI_LEVEL
    json: bool = False
    out: Path | None = None
    orbit_out: Path | None = None
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    verbosity: int = 0

    def __post_init__(self) -> None:
        for name in ("steps", "cap", "level", "threads"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.transient < 0:
            raise ConfigError(f"transient must be non-negative, got {self.transient}")

    @classmethod
    def from_args(cls, args: argparse.Namespace, env: dict | None = None) -> "RunConfig":
        env = os.environ if env is None else env
        threads = os.cpu_count() or 1
        if env.get(THREADS_ENV):
            try:
                threads = int(env[THREADS_ENV])
            except ValueError as exc:
                raise ConfigError(f"{THREADS_ENV}={env[THREADS_ENV]!r} is not an integer") from exc
        seeds = tuple(
            complex(re_, im)
            for re_, im in zip_longest(args.seed_re or [0.0], args.seed_im or [0.0], fillvalue=0.0)
        )
        return cls(
            command=args.command,
            action=getattr(args, "action", "") or "",
            lengths=parse_lengths(args.lengths) if getattr(args, "lengths", None) else (),
            perm=parse_permutation(args.perm) if getattr(args, "perm", None) else None,
            steps=args.steps,
            transient=args.transient,
            seeds=seeds,
            cap=args.cap,
            level=args.level,
            json=args.json,
            out=Path(args.out) if args.out else None,
            orbit_out=Path(args.orbit_out) if args.orbit_out else None,
            threads=threads,
            verbosity=args.verbose,
        )

    def iet(self) -> Iet:
        if not self.lengths or self.perm is None:
            raise ConfigError(f"'{self.command}' needs --lengths and --perm")
        return make_iet(self.lengths, self.perm)


# ---------------------------------------------------------------------------
# Parsing helpers
# ---------------------------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str) -> Permutation:
    """Parse one-line ``4,2,1,3`` or cycle ``(2)(143)`` / ``(1,4,3)(2)`` notation.

    In cycle notation (a b c) sends a to b, b to c and c to a. Cycles of
    single-digit entries may omit separators.

    Raises:
        ConfigError: If the text is not a permutation in either notation.
    """
    text = text.strip()
    try:
        if not text.startswith("("):
            return Permutation(tuple(int(v) for v in text.split(",")))
        cycles = _CYCLE.findall(text)
        if _CYCLE.sub("", text).strip():
            raise ConfigError(f"Unexpected text outside cycles in {text!r}")
        images: dict[int, int] = {}
        for body in cycles:
            parts = body.replace(",", " ").split()
            if len(parts) == 1 and len(parts[0]) > 1:
                parts = list(parts[0])
            entries = [int(v) for v in parts]
            for k, a in enumerate(entries):
                if a in images:
                    raise ConfigError(f"{a} appears twice in {text!r}")
                images[a] = entries[(k + 1) % len(entries)]
        d = max(images) if images else 0
        return Permutation(tuple(images.get(j, j) for j in range(1, d + 1)))
    except ConfigError:
        raise
    except (ValueError, PwilabError) as exc:
        raise ConfigError(f"Cannot parse permutation {text!r}: {exc}") from exc


def parse_lengths(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"Cannot parse lengths {text!r}: {exc}") from exc


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _emit(data: dict, config: RunConfig) -> None:
    if config.out is not None:
        write_report(data, config.out)
    print(json.dumps(data, indent=2, sort_keys=True))


def _system(args: argparse.Namespace) -> PaperSystem:
    if args.system == "paper-3pwi":
        return build_paper_3pwi()
    if args.system == "return-strip":
        return build_return_strip()
    return build_cone_family(args.alpha, args.beta, args.ratio)


def _pwi(args: argparse.Namespace) -> tuple[Pwi, PaperSystem | None]:
    if args.pwi:
        return load_pwi(args.pwi), None
    if args.system:
        system = _system(args)
        return system.pwi, system
    raise ConfigError("Give --system or --pwi")


def _per_symbol(pwi: Pwi) -> tuple[list[float], list[complex]]:
    """Rotation and translation of the first atom carrying each symbol."""
    theta: dict[int, float] = {}
    lam: dict[int, complex] = {}
    for piece in pwi.pieces():
        theta.setdefault(piece.symbol, piece.iso.theta)
        lam.setdefault(piece.symbol, piece.iso.lam)
    order = sorted(theta)
    return [theta[s] for s in order], [lam[s] for s in order]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_iet(args: argparse.Namespace, config: RunConfig) -> int:
    iet = config.iet()
    if config.action == "apply":
        direction = Direction.INVERSE if args.inverse else Direction.FORWARD
        _emit({"x": args.x, "image": iet.apply(args.x, direction)}, config)
    elif config.action == "orbit":
        _emit(
            {
                "orbit": iet.orbit(args.x, config.steps),
                "itinerary": list(iet.itinerary(args.x, config.steps).symbols),
            },
            config,
        )
    elif config.action == "rauzy":
        path = rauzy_induction(iet, args.count)
        _emit(
            {
                "steps": [
                    {
                        "type": int(step.type),
                        "winner": step.winner,
                        "loser": step.loser,
                        "lengths": list(step.iet.lengths),
                        "perm": list(step.iet.perm.mapping),
                    }
                    for step in path
                ]
            },
            config,
        )
    else:
        stats = zero_orbit_statistics(iet, config.steps)
        _emit(
            {
                "n_max": stats.n_max,
                "p": list(stats.p),
                "m": list(stats.m),
                "k": list(stats.k),
                "xprime": list(stats.xprime),
            },
            config,
        )
    return 0


def _cmd_pwi(args: argparse.Namespace, config: RunConfig) -> int:
    pwi, system = _pwi(args)
    if config.action == "orbit":
        records = batch_orbits(
            pwi, config.seeds, config.steps, config.transient, threads=config.threads
        )
        if config.orbit_out is not None:
            export_orbit(records[0], config.orbit_out)
        _emit(
            {
                "orbits": [
                    {
                        "seed": _pair(seed),
                        "length": len(record),
                        "escaped_at": record.escaped_at,
                        "last": _pair(record.points[-1]) if record.points else None,
                        "atoms": list(record.atom_trace.symbols[: args.head]),
                    }
                    for seed, record in zip(config.seeds, records)
                ]
            },
            config,
        )
        return 0

    if args.section:
        try:
            wanted = {int(s) for s in args.section.split(",")}
        except ValueError as exc:
            raise ConfigError(f"Cannot parse section symbols {args.section!r}") from exc
        section = [p.region for p in pwi.pieces() if p.symbol in wanted]
    elif system is not None and system.section:
        section = list(system.section)
    else:
        raise ConfigError("This system has no return section; give --section")
    returns = []
    for seed in config.seeds:
        k, z = pwi_first_return(pwi, section, seed, cap=config.cap)
        returns.append({"seed": _pair(seed), "time": k, "point": _pair(z)})
    _emit({"returns": returns}, config)
    return 0


def _cmd_graph(args: argparse.Namespace, config: RunConfig) -> int:
    if config.perm is None:
        raise ConfigError("'graph' needs --perm")
    graph = build_graph(config.perm)
    theta = parse_lengths(args.theta) if args.theta else (0.0,) * config.perm.d
    coefficients = parametric_coefficients(theta, config.perm, args.p0)
    _emit(
        {
            "cycles": [list(c) for c in graph.cycles],
            "connected": graph.connected,
            "theta_sum": coefficients.theta_sum,
            "coefficients": [_pair(r) for r in coefficients.r],
        },
        config,
    )
    return 0


def _cmd_embed(args: argparse.Namespace, config: RunConfig) -> int:
    pwi, system = _pwi(args)
    if system is None or system.iet is None or config.lengths:
        theta, lam = _per_symbol(pwi)
        system = PaperSystem(
            name=pwi.name, pwi=pwi, theta=tuple(theta), lam=tuple(lam),
            iet=config.iet(), anchor=config.seeds[0],
        )
    iet = system.iet
    anchor = system.anchor if system.anchor is not None else 0j
    if args.anchor_re is not None or args.anchor_im is not None:
        anchor = complex(args.anchor_re or 0.0, args.anchor_im or 0.0)

    if system.alignment is not None:
        match = symbolic_match(iet, pwi, anchor, config.steps, system.alignment)
    else:
        match = best_alignment(iet, pwi, anchor, config.steps)
    theta, lam = system.interval_maps(match.alignment)
    estimate = xi_estimates(iet, theta, config.level, cap=config.cap)
    _emit(
        {
            "match_length": match.length,
            "alignment": list(match.alignment),
            "xi": [_pair(x) for x in estimate.xi],
            "residual": ergodic_residual(iet, theta, lam, anchor, estimate.xi),
            "resonant": resonance_check(iet, theta),
        },
        config,
    )
    return 0


def _cmd_reproduce(args: argparse.Namespace, config: RunConfig) -> int:
    cases = [Case(args.case)] if args.case != "all" else list(Case)
    kwargs = {"level": config.level, "cap": config.cap}
    if args.match_steps:
        kwargs["match_steps"] = args.match_steps
    if args.frequency_steps:
        kwargs["frequency_steps"] = args.frequency_steps
    reports = reproduce_many(cases, threads=config.threads, **kwargs)

    if config.orbit_out is not None:
        system = system_for(cases[0])
        record = batch_orbits(system.pwi, [system.anchor], config.steps, config.transient)[0]
        export_orbit(record, config.orbit_out)

    data = {"reports": [r.to_dict() for r in reports]}
    if config.json or config.out is not None:
        _emit(data, config)
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            print(f"{report.case.value}: {status} match={report.match.length} "
                  f"residual={report.residual:.3e}")
            for name, ok in sorted(report.checks.items()):
                print(f"  {name}: {'ok' if ok else 'failed'}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_plot(args: argparse.Namespace, config: RunConfig) -> int:
    if config.out is None:
        raise ConfigError("'plot' needs --out")
    style = PlotStyle(args.style)
    pwi = None
    if args.system:
        pwi = _system(args).pwi
    if style is PlotStyle.CYLINDER:
        if args.system in ("paper-3pwi", "return-strip") and not config.lengths:
            system = _system(args)
            iet, theta = system.iet, system.interval_maps()[0]
        else:
            iet = config.iet()
            if not args.theta:
                raise ConfigError("Cylinder plots need --theta or a reference --system")
            theta = list(parse_lengths(args.theta))
        states = tangent_orbit(iet, theta, TangentState(0.0, 0.0), config.steps)
        render_plot([states], config.out, style, args.radius, domain_length=iet.total_length)
        return 0

    if args.input:
        records = [read_orbit(path) for path in args.input]
    elif pwi is not None:
        records = batch_orbits(pwi, config.seeds, config.steps, config.transient, config.threads)
    else:
        raise ConfigError("Scatter plots need --input files or a --system")
    render_plot(records, config.out, style, args.radius, pwi=pwi)
    return 0


COMMANDS = {
    "iet": _cmd_iet,
    "pwi": _cmd_pwi,
    "graph": _cmd_graph,
    "embed": _cmd_embed,
    "reproduce": _cmd_reproduce,
    "plot": _cmd_plot,
}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lengths", help="comma-separated subinterval lengths")
    parser.add_argument("--perm", help="one-line '4,2,1,3' or cycle '(2)(143)' notation")
    parser.add_argument("--steps", type=int, default=1000)
    parser.add_argument("--transient", type=int, default=0)
    parser.add_argument("--seed-re", type=float, action="append", dest="seed_re")
    parser.add_argument("--seed-im", type=float, action="append", dest="seed_im")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP)
    parser.add_argument("--level", type=int, default=C.XI_LEVEL)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--out")
    parser.add_argument("--orbit-out", dest="orbit_out")
    parser.add_argument("-v", "--verbose", action="count", default=0)


def _system_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--system", choices=SYSTEMS)
    parser.add_argument("--pwi", help="piecewise isometry JSON file")
    parser.add_argument("--alpha", type=float, default=C.RETURN_STRIP_ALPHA)
    parser.add_argument("--beta", type=float, default=C.RETURN_STRIP_BETA)
    parser.add_argument("--ratio", type=float, default=C.RETURN_STRIP_RATIO)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwilab",
        description="Interval exchanges, piecewise isometries and their embeddings.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    iet = commands.add_parser("iet", help="evaluate and induce interval exchanges")
    iet.add_argument("action", choices=("apply", "orbit", "rauzy", "stats"))
    iet.add_argument("--x", type=float, default=0.0)
    iet.add_argument("--inverse", action="store_true")
    iet.add_argument("--count", type=int, default=1, help="Rauzy steps to take")
    _common(iet)

    pwi = commands.add_parser("pwi", help="orbits and first returns of a piecewise isometry")
    pwi.add_argument("action", choices=("orbit", "return"))
    pwi.add_argument("--section", help="comma-separated atom symbols forming the section")
    pwi.add_argument("--head", type=int, default=20, help="atom symbols to print per orbit")
    _system_options(pwi)
    _common(pwi)

    graph = commands.add_parser("graph", help="connecting graph and parametric coefficients")
    graph.add_argument("--theta", help="comma-separated rotation angles")
    graph.add_argument("--p0", type=int, default=0)
    _common(graph)

    embed = commands.add_parser("embed", help="screen a candidate embedding")
    embed.add_argument("action", choices=("check",))
    embed.add_argument("--anchor-re", type=float, dest="anchor_re")
    embed.add_argument("--anchor-im", type=float, dest="anchor_im")
    _system_options(embed)
    _common(embed)

    rep = commands.add_parser("reproduce", help="rerun a reference experiment")
    rep.add_argument("case", choices=[c.value for c in Case] + ["all"])
    rep.add_argument("--match-steps", type=int, dest="match_steps")
    rep.add_argument("--frequency-steps", type=int, dest="frequency_steps")
    _common(rep)

    plot = commands.add_parser("plot", help="render orbits to SVG")
    plot.add_argument("--input", action="append", help="orbit CSV file (repeatable)")
    plot.add_argument("--style", choices=[s.value for s in PlotStyle], default="scatter")
    plot.add_argument("--radius", type=float, default=0.3)
    plot.add_argument("--theta", help="comma-separated rotation angles for cylinder plots")
    _system_options(plot)
    _common(plot)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run_command(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch to a subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = RunConfig.from_args(args)
    except ConfigError as exc:
        print(f"pwilab: error: {exc}", file=sys.stderr)
        return 2
    _configure_logging(config.verbosity)
    log.debug("dispatching %s %s", config.command, config.action)

    try:
        return COMMANDS[config.command](args, config)
    except ConfigError as exc:
        print(f"pwilab: error: {exc}", file=sys.stderr)
        return 2
    except (PwilabError, ValueError) as exc:
        print(f"pwilab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command())
