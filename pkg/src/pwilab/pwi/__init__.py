"""Planar piecewise isometries."""

from pwilab.pwi.induction import induced_pwi
from pwilab.pwi.isometry import Isometry
from pwilab.pwi.regions import ConvexRegion, HalfPlane, Sense
from pwilab.pwi.system import (
    OrbitRecord,
    Piece,
    Pwi,
    annulus_excursion,
    batch_orbits,
    check_disjoint,
    pwi_first_return,
    pwi_orbit,
)

__all__ = [
    "ConvexRegion",
    "HalfPlane",
    "Isometry",
    "OrbitRecord",
    "Piece",
    "Pwi",
    "Sense",
    "annulus_excursion",
    "batch_orbits",
    "check_disjoint",
    "induced_pwi",
    "pwi_first_return",
    "pwi_orbit",
]
