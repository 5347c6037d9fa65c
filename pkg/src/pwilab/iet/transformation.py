"""Interval exchange transformations on [0, |I|)."""

import math
from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from pwilab.errors import NonPositiveLengthError, OutOfDomainError
from pwilab.iet.permutation import Permutation
from pwilab.numerics import BOUNDARY_TOL


class Direction(Enum):
    """Which way to apply an exchange."""

    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(frozen=True)
class Itinerary:
    """Finite symbolic encoding: ``symbols[k]`` is the subinterval holding f^k(x)."""

    symbols: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, k: int) -> int:
        return self.symbols[k]

    def shift(self) -> "Itinerary":
        """Drop the first symbol (the left shift)."""
        return Itinerary(self.symbols[1:])

    def mismatch(self, other: "Itinerary") -> int | None:
        """Index of the first differing symbol, or None if one is a prefix of the other."""
        for k, (a, b) in enumerate(zip(self.symbols, other.symbols)):
            if a != b:
                return k
        return None


@dataclass(frozen=True)
class Iet:
    """A d-IET f = f_{mu,pi} on I = [0, x_d).

    ``breakpoints`` holds x_0..x_d accumulated left to right, and
    ``translations`` holds tau_1..tau_d. Subinterval and atom indices are
    1-based throughout, matching the usual I_1..I_d numbering.

    Example:
        f = make_iet((0.6, 0.4), (2, 1))
        f.apply(0.1)       # 0.5
        f.itinerary(0.1, 3).symbols   # (1, 1, 2)
    """

    perm: Permutation
    lengths: tuple[float, ...]
    breakpoints: tuple[float, ...] = field(init=False)
    translations: tuple[float, ...] = field(init=False)
    image_breakpoints: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        lengths = tuple(float(mu) for mu in self.lengths)
        if len(lengths) != self.perm.d:
            raise NonPositiveLengthError(
                f"Expected {self.perm.d} lengths for {self.perm}, got {len(lengths)}"
            )
        for j, mu in enumerate(lengths, start=1):
            if not (mu > 0.0) or not math.isfinite(mu):
                raise NonPositiveLengthError(f"Length mu_{j}={mu} is not a positive real")

        breakpoints = [0.0]
        for mu in lengths:
            breakpoints.append(breakpoints[-1] + mu)

        image_breakpoints = [0.0]
        for position in range(1, self.perm.d + 1):
            image_breakpoints.append(
                image_breakpoints[-1] + lengths[self.perm.inverse_at(position) - 1]
            )

        translations = tuple(
            image_breakpoints[self.perm.at(j) - 1] - breakpoints[j - 1]
            for j in range(1, self.perm.d + 1)
        )
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "breakpoints", tuple(breakpoints))
        object.__setattr__(self, "image_breakpoints", tuple(image_breakpoints))
        object.__setattr__(self, "translations", translations)

    @property
    def d(self) -> int:
        return self.perm.d

    @property
    def total_length(self) -> float:
        return self.breakpoints[-1]

    def contains(self, x: float) -> bool:
        return 0.0 <= x < self.breakpoints[-1]

    def locate(self, x: float) -> int:
        """Index j with x in I_j = [x_{j-1}, x_j)."""
        if not self.contains(x):
            raise OutOfDomainError(f"{x!r} is outside [0, {self.total_length!r})")
        return bisect_right(self.breakpoints, x)

    def near_breakpoint(self, x: float, tol: float = BOUNDARY_TOL) -> bool:
        """True when x is within ``tol`` of some x_j."""
        k = bisect_right(self.breakpoints, x)
        neighbours = self.breakpoints[max(k - 1, 0) : k + 1]
        return any(abs(x - b) < tol for b in neighbours)

    def interval(self, j: int) -> tuple[float, float]:
        return self.breakpoints[j - 1], self.breakpoints[j]

    def image_interval(self, j: int) -> tuple[float, float]:
        """f(I_j) as [a_j, a_j + mu_j)."""
        start = self.image_breakpoints[self.perm.at(j) - 1]
        return start, start + self.lengths[j - 1]

    def apply(self, x: float, direction: Direction = Direction.FORWARD) -> float:
        """f(x), or the unique preimage f^{-1}(x) when ``direction`` is INVERSE."""
        if direction is Direction.INVERSE:
            return self.preimage(x)
        return x + self.translations[self.locate(x) - 1]

    def preimage(self, y: float) -> float:
        if not self.contains(y):
            raise OutOfDomainError(f"{y!r} is outside [0, {self.total_length!r})")
        position = bisect_right(self.image_breakpoints, y)
        j = self.perm.inverse_at(position)
        return y - self.translations[j - 1]

    def orbit(self, x: float, n: int) -> list[float]:
        """[x, f(x), ..., f^n(x)]."""
        points = [x]
        for _ in range(n):
            x = self.apply(x)
            points.append(x)
        return points

    def itinerary(self, x: float, n: int) -> Itinerary:
        """Symbols of x, f(x), ..., f^{n-1}(x)."""
        if n < 0:
            raise ValueError(f"Itinerary length must be non-negative, got {n}")
        symbols = []
        for _ in range(n):
            j = self.locate(x)
            symbols.append(j)
            x = x + self.translations[j - 1]
        if n == 0:
            self.locate(x)
        return Itinerary(tuple(symbols))

    def scaled(self, factor: float) -> "Iet":
        """The same exchange with every length multiplied by ``factor``."""
        return Iet(self.perm, tuple(mu * factor for mu in self.lengths))


def make_iet(
    lengths: Sequence[float],
    perm: Permutation | Sequence[int],
    require_irreducible: bool = True,
) -> Iet:
    """Build a d-IET from lengths mu and a permutation in one-line notation.

    Raises:
        NonBijectiveError: If ``perm`` is not a bijection of {1..d}.
        NonPositiveLengthError: If a length is not a positive real.
        ReducibleError: If ``require_irreducible`` and pi is reducible.
    """
    if not isinstance(perm, Permutation):
        perm = Permutation(tuple(perm))
    if require_irreducible:
        perm.require_irreducible()
    return Iet(perm, tuple(lengths))
