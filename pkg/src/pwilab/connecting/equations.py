"""Connecting maps, the parametric connecting equation and forced anchors.

All functions take per-atom rotation angles ``theta`` and translations
``lam`` as length-d sequences indexed from atom 1; the map T_0 is the
identity.
"""

import cmath
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

from pwilab.connecting.graph import build_graph, connecting_sequence
from pwilab.errors import ResonantThetaError
from pwilab.iet.permutation import Permutation
from pwilab.numerics import RESONANCE_TOL, reduce_angle
from pwilab.pwi.isometry import Isometry


class ConnectingMap(NamedTuple):
    F: Isometry
    theta_sum: float


@dataclass(frozen=True)
class ParametricCoefficients:
    """r_j(theta) with F_{p0}(0) = sum_j lam_j r_j, and Theta_pi(p0)."""

    r: tuple[complex, ...]
    theta_sum: float

    def evaluate(self, lam: Sequence[complex]) -> complex:
        return sum((complex(l) * r for l, r in zip(lam, self.r)), 0j)


def _check_lengths(perm: Permutation, *arrays: Sequence) -> None:
    for array in arrays:
        if len(array) != perm.d:
            raise ValueError(f"Expected {perm.d} per-atom values, got {len(array)}")


def _isometries(theta: Sequence[float], lam: Sequence[complex]) -> list[Isometry]:
    return [Isometry.identity()] + [Isometry(t, l) for t, l in zip(theta, lam)]


def connecting_map(
    theta: Sequence[float],
    lam: Sequence[complex],
    perm: Permutation,
    p0: int,
) -> ConnectingMap:
    """F_{p0} = A_{p_0} o ... o A_{p_{s-1}}, A_p = T_p^{-1} o T_{pi^{-1}([pi(p)+1])}.

    ``theta_sum`` is Theta_pi(p0) reduced into (-pi, pi].

    Raises:
        ReducibleError: If ``perm`` is reducible.
    """
    _check_lengths(perm, theta, lam)
    sequence = connecting_sequence(build_graph(perm), p0)
    maps = _isometries(theta, lam)
    angles = [0.0] + [float(t) for t in theta]

    F = Isometry.identity()
    total = 0.0
    for p in sequence.sequence:
        q = perm.inverse_at(perm.bracket(perm.at(p) + 1))
        F = F.compose(maps[p].inverse().compose(maps[q]))
        total += angles[q] - angles[p]
    return ConnectingMap(F, reduce_angle(total))


def parametric_coefficients(
    theta: Sequence[float], perm: Permutation, p0: int
) -> ParametricCoefficients:
    """r_j read off as F_{p0}(0) with lam set to the j-th basis vector."""
    d = perm.d
    coefficients = []
    theta_sum = 0.0
    for j in range(d):
        basis = [0j] * d
        basis[j] = 1 + 0j
        F, theta_sum = connecting_map(theta, basis, perm, p0)
        coefficients.append(F.lam)
    return ParametricCoefficients(tuple(coefficients), theta_sum)


def parametric_residual(
    theta: Sequence[float],
    lam: Sequence[complex],
    perm: Permutation,
    p0: int,
) -> complex:
    """sum_j lam_j r_j(theta); zero is necessary for an embedding when Theta_pi(p0) = 0."""
    _check_lengths(perm, lam)
    return parametric_coefficients(theta, perm, p0).evaluate(lam)


def forced_anchor(
    theta: Sequence[float],
    lam: Sequence[complex],
    perm: Permutation,
    p0: int,
    tol: float = RESONANCE_TOL,
) -> complex:
    """h(x_{p0}) = F_{p0}(0) / (1 - e^{i Theta_pi(p0)}), the fixed point of F_{p0}.

    Raises:
        ResonantThetaError: If |Theta_pi(p0)| <= ``tol``.
    """
    F, theta_sum = connecting_map(theta, lam, perm, p0)
    if abs(theta_sum) <= tol:
        raise ResonantThetaError(
            f"Theta_pi({p0}) = {theta_sum!r} vanishes; F_{p0}(0) = 0 must hold instead"
        )
    return F.lam / (1 - cmath.exp(1j * theta_sum))


def connecting_relations(
    theta: Sequence[float],
    lam: Sequence[complex],
    perm: Permutation,
    points: Sequence[complex],
) -> tuple[complex, ...]:
    """Breakpoint-matching residuals for candidate images z_0..z_d of x_0..x_d.

    Entry j - 1, for j in 1..d+1, is
    T_{pi^{-1}([j])}(z_{[pi^{-1}([j]) - 1]}) - T_{pi^{-1}(j-1)}(z_{pi^{-1}(j-1)}),
    which vanishes when the z_j are images of breakpoints under an embedding.
    """
    _check_lengths(perm, theta, lam)
    if len(points) != perm.d + 1:
        raise ValueError(f"Expected {perm.d + 1} breakpoint images, got {len(points)}")
    maps = _isometries(theta, lam)
    residuals = []
    for j in range(1, perm.d + 2):
        a = perm.inverse_at(perm.bracket(j))
        c = perm.inverse_at(j - 1)
        left = maps[a].apply(points[perm.bracket(a - 1)])
        right = maps[c].apply(points[c])
        residuals.append(left - right)
    return tuple(residuals)


def arc_center(
    theta: Sequence[float],
    lam: Sequence[complex],
    tol: float = RESONANCE_TOL,
) -> tuple[complex, ...] | None:
    """Per-atom rotation centres lam_j / (1 - e^{i theta_j}).

    When all centres coincide the maps are rotations about one point and an
    embedding can only be an arc about it. Returns None if some theta_j is 0
    mod 2pi, where the centre is undefined.
    """
    centres = []
    for t, l in zip(theta, lam):
        if abs(reduce_angle(t)) <= tol:
            return None
        centres.append(complex(l) / (1 - cmath.exp(1j * t)))
    return tuple(centres)
