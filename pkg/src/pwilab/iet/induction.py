"""Rauzy-Veech induction for interval exchanges."""

import logging
from dataclasses import dataclass
from enum import IntEnum

from pwilab.errors import DegenerateStepError
from pwilab.iet.permutation import Permutation
from pwilab.iet.transformation import Iet
from pwilab.numerics import DEGENERACY_TOL

log = logging.getLogger(__name__)


class RauzyType(IntEnum):
    """Type 0: f(I_b) sits inside I_d. Type 1: I_d sits inside f(I_b)."""

    TOP = 0
    BOTTOM = 1


@dataclass(frozen=True)
class RauzyStep:
    """One induction step: the induced exchange on I' and which interval lost.

    ``winner`` and ``loser`` are 1-based indices into the exchange the step
    was taken from.
    """

    iet: Iet
    type: RauzyType
    winner: int
    loser: int


def rauzy_step(iet: Iet) -> RauzyStep:
    """First return of f to I' = [0, |I| - min(mu_d, mu_b)), b = pi^{-1}(d).

    Raises:
        DegenerateStepError: If mu_d and mu_b agree within DEGENERACY_TOL.
    """
    perm = iet.perm
    d = perm.d
    b = perm.inverse_at(d)
    mu = iet.lengths
    mu_b, mu_d = mu[b - 1], mu[d - 1]
    if abs(mu_d - mu_b) < DEGENERACY_TOL:
        raise DegenerateStepError(
            f"Rauzy step undefined: |I_{d}|={mu_d!r} equals |f(I_{b})|={mu_b!r}"
        )

    if mu_b < mu_d:
        lengths = list(mu)
        lengths[d - 1] = mu_d - mu_b
        top = perm.at(d)
        mapping = []
        for j in range(1, d + 1):
            image = perm.at(j)
            if j == b:
                mapping.append(top + 1)
            elif image > top:
                mapping.append(image + 1)
            else:
                mapping.append(image)
        step = RauzyStep(
            Iet(Permutation(tuple(mapping)), tuple(lengths)),
            RauzyType.TOP,
            winner=d,
            loser=b,
        )
    else:
        lengths = list(mu[:b - 1]) + [mu_b - mu_d, mu_d] + list(mu[b:d - 1])
        mapping = (
            [perm.at(j) for j in range(1, b + 1)]
            + [perm.at(d)]
            + [perm.at(j - 1) for j in range(b + 2, d + 1)]
        )
        step = RauzyStep(
            Iet(Permutation(tuple(mapping)), tuple(lengths)),
            RauzyType.BOTTOM,
            winner=b,
            loser=d,
        )
    log.debug(
        "rauzy step type %d: winner %d loser %d, |I'|=%r",
        step.type, step.winner, step.loser, step.iet.total_length,
    )
    return step


def rauzy_induction(iet: Iet, steps: int) -> list[RauzyStep]:
    """Iterate ``rauzy_step`` ``steps`` times, returning every step taken.

    A degenerate step ends the run by raising DegenerateStepError; the
    steps already taken are attached as ``exc.steps``.
    """
    path: list[RauzyStep] = []
    current = iet
    for _ in range(steps):
        try:
            step = rauzy_step(current)
        except DegenerateStepError as exc:
            raise DegenerateStepError(str(exc), steps=path) from exc
        path.append(step)
        current = step.iet
    return path


def type_path(path: list[RauzyStep]) -> str:
    """The induction path as a string of 0/1 types."""
    return "".join(str(int(step.type)) for step in path)
