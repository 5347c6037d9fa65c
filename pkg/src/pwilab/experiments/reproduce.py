"""Reproduction pipeline: run the reference systems and compare with published values."""

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from pwilab.connecting.equations import connecting_relations, parametric_residual
from pwilab.embedding.ergodic import ErgodicEstimate, ergodic_residual, xi_estimates
from pwilab.embedding.symbolic import MatchResult, best_alignment
from pwilab.errors import EscapedError, NoAtomError
from pwilab.experiments import constants as C
from pwilab.experiments.systems import PaperSystem, build_paper_3pwi, build_return_strip
from pwilab.numerics import DEFAULT_CAP
from pwilab.pwi.system import Pwi

log = logging.getLogger(__name__)


class Case(Enum):
    PAPER_3PWI = "paper-3pwi"
    PAPER_4CONE = "paper-4cone"


def estimate_lengths(pwi: Pwi, z0: complex, n: int) -> tuple[float, ...]:
    """Visit frequency of each atom symbol over z_0..z_{n-1}, summing to 1.

    Raises:
        EscapedError: If the orbit leaves the atoms before n steps.
    """
    if n < 1:
        raise ValueError(f"Need at least one step, got n={n}")
    symbols = np.empty(n, dtype=np.int64)
    z = complex(z0)
    for k in range(n):
        try:
            z, symbols[k] = pwi.apply(z)
        except NoAtomError as exc:
            raise EscapedError(f"Orbit of {z0!r} escaped at step {k}", step=k) from exc
    counts = np.bincount(symbols, minlength=max(pwi.symbols) + 1)[1:]
    return tuple(float(c) for c in counts / n)


@dataclass(frozen=True)
class ReproductionReport:
    """Measured quantities for one case and the checks they were held to."""

    case: Case
    system: str
    match: MatchResult
    estimate: ErgodicEstimate
    residual: float
    frequencies: tuple[float, ...]
    checks: dict[str, bool]
    extras: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "system": self.system,
            "match_length": self.match.length,
            "mismatch_at": self.match.mismatch_at,
            "alignment": list(self.match.alignment),
            "level": self.estimate.level,
            "p": self.estimate.p,
            "m": list(self.estimate.m),
            "xi": [_pair(x) for x in self.estimate.xi],
            "residual": self.residual,
            "frequencies": list(self.frequencies),
            "checks": dict(self.checks),
            "passed": self.passed,
            "extras": {key: _jsonable(value) for key, value in self.extras.items()},
        }


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _jsonable(value: object) -> object:
    if isinstance(value, complex):
        return _pair(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _within(measured: Sequence[complex], published: Sequence[complex], tol: float) -> bool:
    return max(abs(complex(a) - complex(b)) for a, b in zip(measured, published)) <= tol


def reproduce(
    case: Case | str,
    level: int = C.XI_LEVEL,
    match_steps: int | None = None,
    frequency_steps: int = C.FREQUENCY_STEPS,
    cap: int = DEFAULT_CAP,
) -> ReproductionReport:
    """Run one reference case: symbolic match, xi estimates, residuals, frequencies.

    ``paper-3pwi`` uses the three-atom system; ``paper-4cone`` uses the
    return strip of the cone family. Every published threshold becomes one
    entry of ``checks``.
    """
    case = case if isinstance(case, Case) else Case(case)
    system = system_for(case)
    assert system.iet is not None and system.anchor is not None
    iet = system.iet
    published = system.published
    steps = match_steps if match_steps is not None else int(published["match_length"])

    log.info("%s: symbolic match over %d steps", case.value, steps)
    match = best_alignment(iet, system.pwi, system.anchor, steps)
    alignment = match.alignment
    theta, lam = system.interval_maps(alignment)

    log.info("%s: xi estimates at level %d", case.value, level)
    estimate = xi_estimates(iet, theta, level, cap=cap)
    residual = ergodic_residual(iet, theta, lam, system.anchor, estimate.xi)
    atom_xi = [estimate.xi[a - 1] for a in alignment]

    checks = {
        "match": match.length >= int(published["match_length"]),
        "xi": _within(atom_xi, published["xi"], C.XI_TOL),
        "residual": residual <= C.RESIDUAL_THRESHOLD,
    }
    extras: dict[str, object] = {"published_residual": published["residual"]}

    if case is Case.PAPER_4CONE:
        parametric = parametric_residual(theta, lam, iet.perm, 0)
        extras["parametric_residual"] = abs(parametric)
        checks["parametric"] = abs(parametric) < C.PARAMETRIC_TOL
        seed = complex(published["frequency_seed"])
    else:
        relations = connecting_relations(theta, lam, iet.perm, published["points"])
        extras["anchor_relations"] = [abs(r) for r in relations]
        checks["anchor_relations"] = all(abs(r) <= C.ANCHOR_RELATION_TOL for r in relations)
        seed = system.anchor

    log.info("%s: visit frequencies over %d steps", case.value, frequency_steps)
    frequencies = estimate_lengths(system.pwi, seed, frequency_steps)
    expected = [iet.lengths[a - 1] / iet.total_length for a in alignment]
    checks["frequencies"] = _within(frequencies, expected, C.FREQUENCY_TOL)

    report = ReproductionReport(
        case=case,
        system=system.name,
        match=match,
        estimate=replace(estimate, residual=residual),
        residual=residual,
        frequencies=frequencies,
        checks=checks,
        extras=extras,
    )
    log.info("%s: %s", case.value, "passed" if report.passed else "failed")
    return report


def reproduce_many(
    cases: Sequence[Case | str], threads: int | None = None, **kwargs
) -> list[ReproductionReport]:
    """Run independent cases over a thread pool; order follows ``cases``."""
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda c: reproduce(c, **kwargs), cases))


def system_for(case: Case | str) -> PaperSystem:
    case = case if isinstance(case, Case) else Case(case)
    return build_paper_3pwi() if case is Case.PAPER_3PWI else build_return_strip()
