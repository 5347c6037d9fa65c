"""The tangent exchange map Psi(x, y) = (f(x), y + theta_{j(x)}) on I x S^1."""

from collections.abc import Sequence
from dataclasses import dataclass

from pwilab.iet.transformation import Iet
from pwilab.numerics import normalize_angle


@dataclass(frozen=True)
class TangentState:
    x: float
    y: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "y", normalize_angle(float(self.y)))


def tangent_orbit(
    iet: Iet, theta: Sequence[float], start: TangentState, n: int
) -> list[TangentState]:
    """Psi^k(start) for k = 0..n.

    Raises:
        OutOfDomainError: If ``start.x`` is outside I.
    """
    states = [start]
    x, y = start.x, start.y
    for _ in range(n):
        j = iet.locate(x)
        x = x + iet.translations[j - 1]
        y = normalize_angle(y + theta[j - 1])
        states.append(TangentState(x, y))
    if n == 0:
        iet.locate(x)
    return states


def rotational_cocycle(iet: Iet, theta: Sequence[float], x: float, n: int) -> float:
    """C^{(n)}(x) in [0, 2pi); for n < 0 it is -C^{(-n)}(x)."""
    total = 0.0
    for _ in range(abs(n)):
        j = iet.locate(x)
        total = normalize_angle(total + theta[j - 1])
        x = x + iet.translations[j - 1]
    return total if n >= 0 else normalize_angle(-total)
