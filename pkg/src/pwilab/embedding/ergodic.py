"""Ergodic averages of rotation along returns, and the residual they must cancel."""

import cmath
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from pwilab.errors import AtomNeverVisitedError
from pwilab.iet.returns import ReturnRule, ZeroOrbit, record_times
from pwilab.iet.transformation import Iet
from pwilab.numerics import DEFAULT_CAP, TWO_PI, angle_distance, normalize_angle

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ErgodicEstimate:
    """Rotation averages xi_j = e_j(p(level)) / m_j(p(level)) along the orbit of 0."""

    level: int
    p: int
    m: tuple[int, ...]
    e: tuple[complex, ...]
    xi: tuple[complex, ...]
    residual: float | None = None


def xi_estimates(
    iet: Iet,
    theta: Sequence[float],
    level: int,
    rule: ReturnRule | str = ReturnRule.STANDARD,
    cap: int = DEFAULT_CAP,
) -> ErgodicEstimate:
    """Estimate xi_j at record time p(level) of the orbit of 0.

    m_j counts f^t(0) in I_j for 1 <= t <= p(level). e_j sums
    exp(-i C^{(t+1)}(0)) over the first m_j returns t of the orbit to I_j,
    starting at the first hitting time k_j. The exchange is assumed minimal.

    Raises:
        CapExceededError: If p(level) or a needed return lies beyond ``cap``.
        AtomNeverVisitedError: If some I_j has no visit up to p(level).
    """
    rule = rule if isinstance(rule, ReturnRule) else ReturnRule(rule)
    d = iet.d
    orbit = ZeroOrbit(iet, cap=cap)
    horizon = record_times(orbit, level)[-1]

    m = [0] * d
    for t in range(1, horizon + 1):
        m[orbit.symbol(t) - 1] += 1
    unseen = [j + 1 for j in range(d) if m[j] == 0]
    if unseen:
        raise AtomNeverVisitedError(
            f"Orbit of 0 never visits I_{unseen} before p({level}) = {horizon}"
        )

    sums = [0j] * d
    taken = [0] * d
    last = [-1] * d
    cocycle = 0.0
    t = 0
    while any(taken[j] < m[j] for j in range(d)):
        j = orbit.symbol(t) - 1
        cocycle = normalize_angle(cocycle + theta[j])
        accepted = taken[j] == 0 or t - last[j] >= rule.first_allowed
        if accepted and taken[j] < m[j]:
            sums[j] += cmath.exp(-1j * cocycle)
            taken[j] += 1
            last[j] = t
        t += 1

    log.debug("xi estimates at level %d (p=%d, %d steps)", level, horizon, t)
    return ErgodicEstimate(
        level=level,
        p=horizon,
        m=tuple(m),
        e=tuple(sums),
        xi=tuple(s / count for s, count in zip(sums, m)),
    )


def ergodic_residual(
    iet: Iet,
    theta: Sequence[float],
    lam: Sequence[complex],
    h0: complex,
    xi: Sequence[complex],
) -> float:
    """|sum_j (lam_j - h0 (1 - e^{i theta_j})) xi_j mu_j|."""
    total = 0j
    for t, l, x, mu in zip(theta, lam, xi, iet.lengths):
        total += (complex(l) - h0 * (1 - cmath.exp(1j * t))) * x * mu
    return abs(total)


def rotation_average(start: float, length: float) -> complex:
    """Mean of e^{-2 pi i x} over [start, start + length), in units of one turn."""
    return cmath.exp(-2j * math.pi * start) * (1 - cmath.exp(-2j * math.pi * length)) / (
        2j * math.pi * length
    )


def corollary_xi(iet: Iet, j: int) -> complex:
    """Limit of xi_j when theta_j = 2 pi tau_j / |I|: the mean of e^{-2 pi i x} over f(I_j)/|I|."""
    start, _ = iet.image_interval(j)
    total = iet.total_length
    return rotation_average(start / total, iet.lengths[j - 1] / total)


def resonant_theta(iet: Iet) -> tuple[float, ...]:
    """theta_j = 2 pi tau_j / |I|, reduced into [0, 2pi)."""
    return tuple(normalize_angle(TWO_PI * tau / iet.total_length) for tau in iet.translations)


def resonance_check(iet: Iet, theta: Sequence[float], tol: float = 1e-10) -> bool:
    """True iff theta_j = 2 pi tau_j / |I| mod 2pi for every j, within ``tol``."""
    return all(
        angle_distance(t, r) <= tol for t, r in zip(theta, resonant_theta(iet), strict=True)
    )
