"""First returns to a subinterval, return-time cocycles and the orbit of 0."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from pwilab.errors import CapExceededError, OutOfDomainError
from pwilab.iet.transformation import Iet
from pwilab.numerics import DEFAULT_CAP

log = logging.getLogger(__name__)


class ReturnRule(Enum):
    """Which iterates count as a return.

    STRICT takes the smallest k > 1 with f^k(x) in I_j, STANDARD the
    smallest k >= 1.
    """

    STRICT = "strict"
    STANDARD = "standard"

    @property
    def first_allowed(self) -> int:
        return 2 if self is ReturnRule.STRICT else 1


class Return(NamedTuple):
    time: int
    point: float


def _coerce_rule(rule: ReturnRule | str) -> ReturnRule:
    return rule if isinstance(rule, ReturnRule) else ReturnRule(rule)


def first_return(
    iet: Iet,
    j: int,
    x: float,
    rule: ReturnRule | str = ReturnRule.STRICT,
    cap: int = DEFAULT_CAP,
) -> Return:
    """Return time n and point f^n(x) of x in I_j back to I_j.

    Raises:
        OutOfDomainError: If x is not in I_j.
        CapExceededError: If no return happens within ``cap`` steps.
    """
    rule = _coerce_rule(rule)
    if iet.locate(x) != j:
        raise OutOfDomainError(f"{x!r} is not in I_{j} = {iet.interval(j)}")
    lo, hi = iet.interval(j)
    y = x
    for k in range(1, cap + 1):
        y = iet.apply(y)
        if k >= rule.first_allowed and lo <= y < hi:
            return Return(k, y)
    raise CapExceededError(f"No return of {x!r} to I_{j} within {cap} steps", cap=cap)


def return_cocycle(
    iet: Iet,
    j: int,
    x: float,
    k: int,
    rule: ReturnRule | str = ReturnRule.STRICT,
    cap: int = DEFAULT_CAP,
) -> Return:
    """N_j^{(k)}(x) together with the k-th iterate of the induced map.

    N_j^{(0)}(x) = 0. For k < 0 the time is -N_j^{(-k)}(x), and the point is
    still the forward iterate f'_j^{|k|}(x); the inverse orbit is never walked.
    """
    rule = _coerce_rule(rule)
    if iet.locate(x) != j:
        raise OutOfDomainError(f"{x!r} is not in I_{j} = {iet.interval(j)}")
    total = 0
    y = x
    for _ in range(abs(k)):
        n, y = first_return(iet, j, y, rule, cap)
        total += n
    return Return(total if k >= 0 else -total, y)


class ZeroOrbit:
    """Lazily extended orbit 0, f(0), f^2(0), ... with its itinerary.

    Iterates are produced on demand and cached, so several statistics can
    walk the same orbit without recomputing it.
    """

    def __init__(self, iet: Iet, cap: int = DEFAULT_CAP) -> None:
        self._iet = iet
        self._cap = cap
        self._points: list[float] = [0.0]
        self._symbols: list[int] = [iet.locate(0.0)]

    @property
    def iet(self) -> Iet:
        return self._iet

    @property
    def cap(self) -> int:
        return self._cap

    def __len__(self) -> int:
        return len(self._points)

    def _extend_to(self, t: int) -> None:
        if t > self._cap:
            raise CapExceededError(
                f"Orbit of 0 requested at step {t}, beyond cap {self._cap}", cap=self._cap
            )
        while len(self._points) <= t:
            x = self._points[-1] + self._iet.translations[self._symbols[-1] - 1]
            self._points.append(x)
            self._symbols.append(self._iet.locate(x))

    def point(self, t: int) -> float:
        self._extend_to(t)
        return self._points[t]

    def symbol(self, t: int) -> int:
        self._extend_to(t)
        return self._symbols[t]


@dataclass(frozen=True)
class ZeroOrbitStatistics:
    """Statistics of the orbit of 0 up to ``n_max``.

    ``p`` lists every record time p(1) < p(2) < ... not exceeding ``n_max``.
    ``m[j - 1]`` counts iterates f^k(0) in I_j for k in 1..n_max;
    ``k[j - 1]`` is the first hitting time of I_j and ``xprime[j - 1]`` the
    point f^{k_j}(0).
    """

    n_max: int
    p: tuple[int, ...]
    m: tuple[int, ...]
    k: tuple[int, ...]
    xprime: tuple[float, ...]


def record_times(orbit: ZeroOrbit, count: int) -> list[int]:
    """p(1), ..., p(count): first time in I_1, then successive new minima."""
    t = 1
    while orbit.symbol(t) != 1:
        t += 1
    times = [t]
    while len(times) < count:
        best = orbit.point(times[-1])
        t = times[-1] + 1
        while orbit.point(t) >= best:
            t += 1
        times.append(t)
    return times


def zero_orbit_statistics(iet: Iet, n_max: int) -> ZeroOrbitStatistics:
    """Record times, visit counts and first hits of the orbit of 0.

    Raises:
        ValueError: If ``n_max`` < 1.
        CapExceededError: If p(1) or some first hitting time exceeds ``n_max``.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    orbit = ZeroOrbit(iet, cap=n_max)
    d = iet.d
    counts = [0] * d
    first_hit: list[int | None] = [None] * d
    first_hit[orbit.symbol(0) - 1] = 0
    for t in range(1, n_max + 1):
        j = orbit.symbol(t)
        counts[j - 1] += 1
        if first_hit[j - 1] is None:
            first_hit[j - 1] = t

    missing = [j + 1 for j, t in enumerate(first_hit) if t is None]
    if missing:
        raise CapExceededError(
            f"Orbit of 0 does not reach I_{missing} within {n_max} steps", cap=n_max
        )

    records: list[int] = []
    best = float("inf")
    for t in range(1, n_max + 1):
        x = orbit.point(t)
        if not records:
            if orbit.symbol(t) == 1:
                records.append(t)
                best = x
        elif x < best:
            records.append(t)
            best = x
    if not records:
        raise CapExceededError(f"Orbit of 0 does not return to I_1 within {n_max} steps", cap=n_max)

    log.debug("orbit of 0: %d record times up to %d", len(records), n_max)
    return ZeroOrbitStatistics(
        n_max=n_max,
        p=tuple(records),
        m=tuple(counts),
        k=tuple(t for t in first_hit if t is not None),
        xprime=tuple(orbit.point(t) for t in first_hit if t is not None),
    )
