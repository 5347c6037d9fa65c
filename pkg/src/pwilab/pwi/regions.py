"""Convex regions as finite intersections of open or closed half-planes."""

import math
from dataclasses import dataclass
from enum import Enum

from pwilab.numerics import BOUNDARY_TOL, CLIP_BOUND, SLIVER_TOL, unit
from pwilab.pwi.isometry import Isometry


class Sense(Enum):
    """Sign condition on Im(e^{i phi}(z - anchor))."""

    GT = "gt"
    GE = "ge"
    LT = "lt"
    LE = "le"

    def holds(self, value: float) -> bool:
        if self is Sense.GT:
            return value > 0.0
        if self is Sense.GE:
            return value >= 0.0
        if self is Sense.LT:
            return value < 0.0
        return value <= 0.0

    def negated(self) -> "Sense":
        return _NEGATION[self]


_NEGATION = {Sense.GT: Sense.LE, Sense.GE: Sense.LT, Sense.LT: Sense.GE, Sense.LE: Sense.GT}


@dataclass(frozen=True)
class HalfPlane:
    """{z : sense(Im(e^{i phi}(z - anchor)))}.

    The boundary is the line through ``anchor`` with direction e^{-i phi};
    the signed value is the distance to that line.
    """

    phi: float
    anchor: complex = 0j
    sense: Sense = Sense.GE

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", float(self.phi))
        object.__setattr__(self, "anchor", complex(self.anchor))
        if not isinstance(self.sense, Sense):
            object.__setattr__(self, "sense", Sense(self.sense))

    def value(self, z: complex) -> float:
        return (unit(self.phi) * (z - self.anchor)).imag

    def depth(self, z: complex) -> float:
        """Signed distance to the boundary line, positive on the inside."""
        value = self.value(z)
        return value if self.sense in (Sense.GE, Sense.GT) else -value

    def contains(self, z: complex) -> bool:
        return self.sense.holds(self.value(z))

    def complement(self) -> "HalfPlane":
        return HalfPlane(self.phi, self.anchor, self.sense.negated())

    def image(self, iso: Isometry) -> "HalfPlane":
        """The half-plane T(H): z in H iff T(z) in T(H)."""
        return HalfPlane(self.phi - iso.theta, iso.apply(self.anchor), self.sense)


def clip_polygon(polygon: list[complex], h: HalfPlane) -> list[complex]:
    """Clip a convex polygon to the closure of ``h`` (one Sutherland-Hodgman pass)."""
    out: list[complex] = []
    if not polygon:
        return out
    prev = polygon[-1]
    prev_depth = h.depth(prev)
    for cur in polygon:
        cur_depth = h.depth(cur)
        if (cur_depth >= 0.0) != (prev_depth >= 0.0):
            out.append(prev + (cur - prev) * prev_depth / (prev_depth - cur_depth))
        if cur_depth >= 0.0:
            out.append(cur)
        prev, prev_depth = cur, cur_depth
    return out


def polygon_width(polygon: list[complex]) -> float:
    """2 area / perimeter: the thickness of a sliver, zero for fewer than three vertices."""
    if len(polygon) < 3:
        return 0.0
    origin = polygon[0]
    area = 0.0
    perimeter = 0.0
    for k, a in enumerate(polygon):
        b = polygon[(k + 1) % len(polygon)]
        area += ((a - origin).conjugate() * (b - origin)).imag
        perimeter += abs(b - a)
    return abs(area) / perimeter if perimeter > 0.0 else 0.0


def _box(bound: float) -> list[complex]:
    return [complex(-bound, -bound), complex(bound, -bound), complex(bound, bound), complex(-bound, bound)]


@dataclass(frozen=True)
class ConvexRegion:
    """Intersection of ``constraints``, plus finitely many extra points.

    A region with no constraints is the whole plane.
    """

    constraints: tuple[HalfPlane, ...] = ()
    special_points: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(
            self, "special_points", tuple(complex(p) for p in self.special_points)
        )

    @classmethod
    def full(cls) -> "ConvexRegion":
        return cls()

    @classmethod
    def rectangle(cls, x0: float, x1: float, y0: float, y1: float) -> "ConvexRegion":
        """[x0, x1) x [y0, y1)."""
        quarter = math.pi / 2
        return cls(
            (
                HalfPlane(quarter, complex(x0, 0.0), Sense.GE),
                HalfPlane(quarter, complex(x1, 0.0), Sense.LT),
                HalfPlane(0.0, complex(0.0, y0), Sense.GE),
                HalfPlane(0.0, complex(0.0, y1), Sense.LT),
            )
        )

    @classmethod
    def cone(cls, start: float, stop: float, apex: complex = 0j) -> "ConvexRegion":
        """Points with arg(z - apex) in [start, stop), apex excluded.

        Requires 0 < stop - start < pi.
        """
        width = stop - start
        if not 0.0 < width < math.pi:
            raise ValueError(f"Cone width {width!r} must lie in (0, pi)")
        return cls(
            (
                HalfPlane(-start, apex, Sense.GE),
                HalfPlane(-stop, apex, Sense.LT),
            )
        )

    def contains(self, z: complex) -> bool:
        if z in self.special_points:
            return True
        return all(h.contains(z) for h in self.constraints)

    def near_boundary(self, z: complex, tol: float = BOUNDARY_TOL) -> bool:
        """True when z is within ``tol`` of one of the constraint lines."""
        return any(abs(h.value(z)) < tol for h in self.constraints)

    def intersect(self, other: "ConvexRegion") -> "ConvexRegion":
        points = tuple(p for p in self.special_points if other.contains(p)) + tuple(
            p for p in other.special_points if self.contains(p) and p not in self.special_points
        )
        return ConvexRegion(self.constraints + other.constraints, points)

    def image(self, iso: Isometry) -> "ConvexRegion":
        return ConvexRegion(
            tuple(h.image(iso) for h in self.constraints),
            tuple(iso.apply(p) for p in self.special_points),
        )

    def polygon(self, bound: float = CLIP_BOUND) -> list[complex]:
        """Vertices of the closure of the region cut to the square of half-width ``bound``."""
        polygon = _box(bound)
        for h in self.constraints:
            polygon = clip_polygon(polygon, h)
        return polygon

    def is_empty(self, tol: float = SLIVER_TOL) -> bool:
        """True when the region has no special points and no piece thicker than ``tol``."""
        return not self.special_points and polygon_width(self.polygon()) < tol

    def simplified(self, tol: float = SLIVER_TOL) -> "ConvexRegion":
        """The same region with constraints implied by the others removed.

        A constraint goes when every vertex of the polygon cut by the
        remaining constraints lies within ``tol`` of its inside. Of two
        constraints on one line only the later survives.
        """
        kept = list(self.constraints)
        k = 0
        while k < len(kept):
            others = kept[:k] + kept[k + 1 :]
            polygon = ConvexRegion(tuple(others)).polygon()
            if polygon and all(kept[k].depth(v) >= -tol for v in polygon):
                kept = others
            else:
                k += 1
        return ConvexRegion(tuple(kept), self.special_points)

    def complement_pieces(self) -> list["ConvexRegion"]:
        """Disjoint convex pieces covering the complement of the constraints.

        Piece k is H_1 n ... n H_{k-1} n not H_k. Special points are ignored.
        """
        pieces = []
        for k, h in enumerate(self.constraints):
            pieces.append(ConvexRegion(self.constraints[:k] + (h.complement(),)))
        return pieces

    def difference(self, other: "ConvexRegion") -> list["ConvexRegion"]:
        """Disjoint convex pieces covering self minus other's constraint set.

        Empty pieces are dropped and the rest simplified. Special points of
        self outside other ride on the first piece.
        """
        candidates = [
            ConvexRegion(self.constraints + piece.constraints)
            for piece in other.complement_pieces()
        ]
        pieces = [region.simplified() for region in candidates if not region.is_empty()]
        kept = tuple(p for p in self.special_points if not other.contains(p))
        if kept:
            first = pieces[0] if pieces else candidates[0]
            pieces[:1] = [ConvexRegion(first.constraints, kept)]
        return pieces
