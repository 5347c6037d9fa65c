"""Tolerances, default caps and angle helpers shared across pwilab."""

import math

TWO_PI = 2.0 * math.pi

BOUNDARY_TOL = 1e-12
"""Distance below which a point is flagged as grazing a breakpoint or atom edge."""

DEGENERACY_TOL = 1e-12
"""Rauzy-Veech steps with competing lengths closer than this are undefined."""

RESONANCE_TOL = 1e-9
"""Rotation sums with |Θ| at or below this are treated as zero."""

CLIP_BOUND = 1e4
"""Half-width of the square that stands in for the plane when clipping convex regions."""

SLIVER_TOL = 1e-10
"""Convex pieces thinner than this are treated as empty."""

IDOC_DEPTH = 10_000
DEFAULT_CAP = 1_000_000

_SNAP = 1e-15


def unit(phi: float) -> complex:
    """Return e^{i phi}, with components of quarter turns snapped to exact 0/±1.

    Keeps axis-aligned half-planes exact: Im(unit(pi/2) * w) == w.real.
    """
    c = math.cos(phi)
    s = math.sin(phi)
    if abs(c) < _SNAP:
        c = 0.0
        s = 1.0 if s > 0 else -1.0
    elif abs(s) < _SNAP:
        s = 0.0
        c = 1.0 if c > 0 else -1.0
    return complex(c, s)


def normalize_angle(angle: float) -> float:
    """Reduce an angle into [0, 2pi)."""
    reduced = math.fmod(angle, TWO_PI)
    if reduced < 0.0:
        reduced += TWO_PI
    if reduced >= TWO_PI:
        reduced = 0.0
    return reduced


def reduce_angle(angle: float) -> float:
    """Reduce an angle into (-pi, pi]."""
    reduced = normalize_angle(angle)
    if reduced > math.pi:
        reduced -= TWO_PI
    return reduced


def angle_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle."""
    return abs(reduce_angle(a - b))
