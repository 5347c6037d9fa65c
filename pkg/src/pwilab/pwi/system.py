"""Piecewise isometries: atoms, maps, orbits and first returns."""

import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from pwilab.errors import CapExceededError, DynamicsError, EscapedError, NoAtomError
from pwilab.iet.transformation import Itinerary
from pwilab.numerics import BOUNDARY_TOL, DEFAULT_CAP
from pwilab.pwi.isometry import Isometry
from pwilab.pwi.regions import ConvexRegion

log = logging.getLogger(__name__)


class Piece(NamedTuple):
    region: ConvexRegion
    iso: Isometry
    symbol: int


@dataclass(frozen=True)
class Pwi:
    """A planar piecewise isometry T with T = ``maps[k]`` on ``atoms[k]``.

    Atoms are resolved in declaration order, so the first atom containing a
    point wins. ``symbols[k]`` is the itinerary letter of atom k; it defaults
    to k + 1, and several convex atoms may share a letter when one symbolic
    atom is a union of convex pieces.

    Example:
        T = Pwi(
            atoms=(ConvexRegion.rectangle(0, 0.6, 0, 1), ConvexRegion.rectangle(0.6, 1, 0, 1)),
            maps=(Isometry.translation(0.4), Isometry.translation(-0.6)),
        )
        T.apply(0.1 + 0.5j)   # ((0.5+0.5j), 1)
    """

    atoms: tuple[ConvexRegion, ...]
    maps: tuple[Isometry, ...]
    name: str = ""
    symbols: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        atoms = tuple(self.atoms)
        maps = tuple(self.maps)
        if len(atoms) != len(maps):
            raise ValueError(f"{len(atoms)} atoms but {len(maps)} maps")
        if not atoms:
            raise ValueError("A piecewise isometry needs at least one atom")
        symbols = tuple(self.symbols) or tuple(range(1, len(atoms) + 1))
        if len(symbols) != len(atoms):
            raise ValueError(f"{len(atoms)} atoms but {len(symbols)} symbols")
        if min(symbols) < 1:
            raise ValueError(f"Atom symbols must be positive, got {symbols}")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "symbols", symbols)

    @property
    def d(self) -> int:
        """Number of distinct atom symbols."""
        return len(set(self.symbols))

    def pieces(self) -> Iterator[Piece]:
        for region, iso, symbol in zip(self.atoms, self.maps, self.symbols):
            yield Piece(region, iso, symbol)

    def locate(self, z: complex) -> int:
        """Position of the first atom containing z.

        Raises:
            NoAtomError: If z lies in no atom.
        """
        for k, region in enumerate(self.atoms):
            if region.contains(z):
                return k
        raise NoAtomError(f"{z!r} lies in no atom of {self.name or 'pwi'}", point=z)

    def symbol_at(self, z: complex) -> int:
        return self.symbols[self.locate(z)]

    def contains(self, z: complex) -> bool:
        return any(region.contains(z) for region in self.atoms)

    def apply(self, z: complex) -> tuple[complex, int]:
        """T(z) and the symbol of the atom that was used."""
        k = self.locate(z)
        return self.maps[k].apply(z), self.symbols[k]


@dataclass(frozen=True)
class OrbitRecord:
    """Recorded stretch of an orbit after the transient.

    ``points[k]`` lies in the atom with symbol ``atom_trace[k]``, so both
    have the same length and the first entry is the first kept point.
    ``escaped_at`` is the step, counted from the original seed, at which the
    orbit reached a point in no atom.
    """

    points: tuple[complex, ...]
    atom_trace: Itinerary
    boundary_flags: tuple[bool, ...]
    escaped_at: int | None = None
    transient: int = 0

    @property
    def escaped(self) -> bool:
        return self.escaped_at is not None

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.complex128)


def pwi_orbit(
    pwi: Pwi,
    z0: complex,
    n: int,
    transient: int = 0,
    cap: int = DEFAULT_CAP,
    tol: float = BOUNDARY_TOL,
) -> OrbitRecord:
    """Iterate T from ``z0``, drop ``transient`` steps and record n more.

    Escape is data: the record stops at the last point that had an atom.
    """
    if n < 0 or transient < 0:
        raise ValueError(f"Steps must be non-negative, got n={n}, transient={transient}")
    if n + 1 > cap:
        raise CapExceededError(f"Orbit of {n + 1} points exceeds cap {cap}", cap=cap)

    points: list[complex] = []
    trace: list[int] = []
    flags: list[bool] = []
    escaped_at = None
    z = complex(z0)
    for step in range(transient + n + 1):
        try:
            k = pwi.locate(z)
        except NoAtomError:
            escaped_at = step
            log.debug("orbit of %r escaped at step %d", z0, step)
            break
        if step >= transient:
            points.append(z)
            trace.append(pwi.symbols[k])
            flags.append(pwi.atoms[k].near_boundary(z, tol))
        if step < transient + n:
            z = pwi.maps[k].apply(z)

    grazing = sum(flags)
    if grazing:
        log.warning("orbit of %r passes within %g of an atom edge %d times", z0, tol, grazing)
    return OrbitRecord(tuple(points), Itinerary(tuple(trace)), tuple(flags), escaped_at, transient)


def _in_section(section: Sequence[ConvexRegion], z: complex) -> bool:
    return any(region.contains(z) for region in section)


def pwi_first_return(
    pwi: Pwi,
    section: ConvexRegion | Sequence[ConvexRegion],
    z: complex,
    cap: int = DEFAULT_CAP,
) -> tuple[int, complex]:
    """k = min{k >= 1 : T^k(z) in section} and T^k(z).

    ``section`` is one convex region or a union given as a sequence.

    Raises:
        DynamicsError: If z is not in the section.
        EscapedError: If the orbit leaves the atoms before returning.
        CapExceededError: If no return happens within ``cap`` steps.
    """
    regions = (section,) if isinstance(section, ConvexRegion) else tuple(section)
    if not _in_section(regions, z):
        raise DynamicsError(f"{z!r} is not in the return section")
    w = complex(z)
    for k in range(1, cap + 1):
        try:
            w, _ = pwi.apply(w)
        except NoAtomError as exc:
            raise EscapedError(f"Orbit of {z!r} escaped at step {k - 1}", step=k - 1) from exc
        if _in_section(regions, w):
            return k, w
    raise CapExceededError(f"No return of {z!r} within {cap} steps", cap=cap)


def batch_orbits(
    pwi: Pwi,
    seeds: Sequence[complex],
    n: int,
    transient: int = 0,
    threads: int | None = None,
) -> list[OrbitRecord]:
    """Orbits of many seeds, computed over a thread pool; order follows ``seeds``."""
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda z: pwi_orbit(pwi, z, n, transient), seeds))


def check_disjoint(
    pwi: Pwi,
    box: tuple[float, float, float, float],
    samples: int = 10_000,
    seed: int = 0,
) -> list[complex]:
    """Sample points of ``box`` = (xmin, xmax, ymin, ymax) lying in two or more atoms."""
    rng = np.random.default_rng(seed)
    xs = rng.uniform(box[0], box[1], samples)
    ys = rng.uniform(box[2], box[3], samples)
    overlaps = []
    for x, y in zip(xs, ys):
        z = complex(x, y)
        if sum(region.contains(z) for region in pwi.atoms) > 1:
            overlaps.append(z)
    return overlaps


def annulus_excursion(
    pwi: Pwi,
    seeds: Sequence[complex],
    steps: int,
    center: complex = 0j,
) -> tuple[float, float]:
    """Smallest and largest |z - center| over the orbits of ``seeds``.

    Raises:
        EscapedError: If an orbit leaves the atoms.
    """
    lo, hi = np.inf, 0.0
    for record in batch_orbits(pwi, seeds, steps):
        if record.escaped:
            raise EscapedError(f"Orbit escaped at step {record.escaped_at}", step=record.escaped_at)
        radii = np.abs(record.as_array() - center)
        lo = min(lo, float(radii.min()))
        hi = max(hi, float(radii.max()))
    return lo, hi
