"""Constructors for the reference systems: the 3-atom map, the cone family and its return strip."""

import cmath
import dataclasses
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from pwilab.errors import ParameterOutOfRangeError
from pwilab.experiments import constants as C
from pwilab.iet.transformation import Iet, make_iet
from pwilab.pwi.isometry import Isometry
from pwilab.pwi.regions import ConvexRegion, HalfPlane, Sense
from pwilab.pwi.system import Pwi


@dataclass(frozen=True)
class PaperSystem:
    """A reference system with its candidate embedded exchange.

    ``theta`` and ``lam`` list the rotation and translation of each atom
    symbol. ``anchor`` is the candidate h(0). ``section`` holds the regions
    used for first returns, when the system defines one. ``alignment[s - 1]``
    is the subinterval carried by atom symbol s, 0 for symbols off the
    embedded exchange; None means the identity.
    """

    name: str
    pwi: Pwi
    theta: tuple[float, ...]
    lam: tuple[complex, ...]
    iet: Iet | None = None
    anchor: complex | None = None
    section: tuple[ConvexRegion, ...] = ()
    alignment: tuple[int, ...] | None = None
    published: dict[str, object] = field(default_factory=dict)

    def interval_maps(
        self, alignment: Sequence[int] | None = None
    ) -> tuple[list[float], list[complex]]:
        """Rotation and translation of each subinterval I_1..I_d under ``alignment``."""
        if self.iet is None:
            raise ValueError(f"{self.name} carries no exchange")
        aligned = alignment or self.alignment or tuple(range(1, len(self.theta) + 1))
        theta = [0.0] * self.iet.d
        lam = [0j] * self.iet.d
        for symbol, interval in enumerate(aligned, start=1):
            if interval:
                theta[interval - 1] = self.theta[symbol - 1]
                lam[interval - 1] = self.lam[symbol - 1]
        return theta, lam


def build_paper_3pwi() -> PaperSystem:
    """T' on Q'_1..Q'_3, with the 3-IET of lengths l'_j and pi' = 3,2,1 anchored at z'_0."""
    alpha, beta = C.PAPER_3PWI_ALPHA, C.PAPER_3PWI_BETA
    z0, z1, z2, z3 = C.PAPER_3PWI_POINTS

    def side_a(sense: Sense) -> HalfPlane:
        return HalfPlane(alpha, z1, sense)

    def side_b(sense: Sense) -> HalfPlane:
        return HalfPlane(-beta, z2, sense)

    atoms = (
        ConvexRegion((side_a(Sense.LT),)),
        ConvexRegion((side_b(Sense.GT), side_a(Sense.GE))),
        ConvexRegion((side_b(Sense.LE), side_a(Sense.GE))),
    )
    theta = C.PAPER_3PWI_THETA
    e1, e2, e3 = (cmath.exp(1j * t) for t in theta)
    lam = (
        z3 - e1 * z1,
        e3 * (z3 - z2) - e2 * z1,
        -e3 * z2,
    )
    maps = tuple(Isometry(t, l) for t, l in zip(theta, lam))
    return PaperSystem(
        name="paper-3pwi",
        pwi=Pwi(atoms, maps, name="paper-3pwi"),
        theta=theta,
        lam=lam,
        iet=make_iet(C.PAPER_3PWI_LENGTHS, C.PAPER_3PWI_PERM),
        anchor=z0,
        published={
            "points": C.PAPER_3PWI_POINTS,
            "xi": C.PAPER_3PWI_XI,
            "residual": C.PAPER_3PWI_RESIDUAL,
            "match_length": C.PAPER_3PWI_MATCH,
        },
    )


def build_cone_family(alpha: float, beta: float, ratio: float) -> PaperSystem:
    """The four-cone map T(alpha, beta, lambda = ratio).

    Symbols 1..4 are the cones P_0..P_3. P_3, a closed-open half-plane, is
    stored as an open half-plane plus its boundary ray, both with symbol 4.
    The attached exchange is the baseline swap of lengths 1 and ``ratio``
    on [-1, ratio), shifted to start at 0; interval 1 is carried by P_3 and
    interval 2 by P_0.

    Raises:
        ParameterOutOfRangeError: Unless 0 < beta < pi/2,
            0 < alpha < pi - 2 beta and ratio > 0.
    """
    if not 0.0 < beta < math.pi / 2:
        raise ParameterOutOfRangeError(f"beta={beta!r} must lie in (0, pi/2)")
    if not 0.0 < alpha < math.pi - 2 * beta:
        raise ParameterOutOfRangeError(f"alpha={alpha!r} must lie in (0, pi - 2 beta)")
    if not ratio > 0.0:
        raise ParameterOutOfRangeError(f"ratio={ratio!r} must be positive")

    vartheta1 = math.pi - 2 * beta - alpha
    vartheta2 = -alpha
    shift = -(1.0 - ratio)
    edge = math.pi - beta

    p0 = dataclasses.replace(ConvexRegion.cone(-beta, beta), special_points=(0j,))
    p1 = ConvexRegion.cone(beta, alpha + beta)
    p2 = ConvexRegion.cone(alpha + beta, edge)
    p3_open = ConvexRegion((HalfPlane(-edge, 0j, Sense.GT),))
    p3_ray = ConvexRegion(
        (
            HalfPlane(-edge, 0j, Sense.GE),
            HalfPlane(-edge, 0j, Sense.LE),
            HalfPlane(math.pi / 2 - edge, 0j, Sense.GT),
        )
    )
    theta = (0.0, vartheta1, vartheta2, 0.0)
    lam = (-1 + 0j, complex(shift), complex(shift), complex(ratio))
    maps = (
        Isometry.translation(lam[0]),
        Isometry(vartheta1, lam[1]),
        Isometry(vartheta2, lam[2]),
        Isometry.translation(lam[3]),
        Isometry.translation(lam[3]),
    )
    return PaperSystem(
        name="cone-family",
        pwi=Pwi((p0, p1, p2, p3_open, p3_ray), maps, name="cone-family", symbols=(1, 2, 3, 4, 4)),
        theta=theta,
        lam=lam,
        iet=make_iet((1.0, ratio), (2, 1)),
        anchor=-1 + 0j,
        section=(p1, p2),
        alignment=(2, 0, 0, 1),
        published={"alpha": alpha, "beta": beta, "ratio": ratio},
    )


def build_return_strip() -> PaperSystem:
    """S on Q_1..Q_4, acting as the first return of the cone map to P_1 u P_2.

    Q_2 and Q_3 also carry the constraints that keep them out of Q_1 and
    Q_4, so the four atoms partition the plane.
    """
    alpha, beta, g = C.RETURN_STRIP_ALPHA, C.RETURN_STRIP_BETA, C.RETURN_STRIP_RATIO
    vartheta1 = math.pi - 2 * beta - alpha
    vartheta2 = -alpha
    tilt = cmath.exp(1j * alpha)

    def side_a(sense: Sense) -> HalfPlane:
        return HalfPlane(-(alpha + beta), -(2 * g - 1) * tilt, sense)

    def side_b(sense: Sense) -> HalfPlane:
        return HalfPlane(beta - alpha, (1 - g) * tilt, sense)

    def side_c(sense: Sense) -> HalfPlane:
        return HalfPlane(-(alpha + beta), 0j, sense)

    atoms = (
        ConvexRegion((side_a(Sense.GT),)),
        ConvexRegion((side_a(Sense.LE), side_b(Sense.LT), side_c(Sense.GT))),
        ConvexRegion((side_a(Sense.LE), side_b(Sense.GE), side_c(Sense.GT))),
        ConvexRegion((side_c(Sense.LE),)),
    )
    theta = (vartheta2, vartheta2, vartheta2, vartheta1)
    lam = (complex(g**3), complex(-(g**4)), complex(-(g**2)), complex(g**3))
    maps = tuple(Isometry(t, l) for t, l in zip(theta, lam))
    return PaperSystem(
        name="return-strip",
        pwi=Pwi(atoms, maps, name="return-strip"),
        theta=theta,
        lam=lam,
        iet=make_iet(C.RETURN_STRIP_LENGTHS, C.RETURN_STRIP_PERM),
        anchor=C.RETURN_STRIP_ANCHOR,
        published={
            "xi": C.RETURN_STRIP_XI,
            "residual": C.RETURN_STRIP_RESIDUAL,
            "match_length": C.RETURN_STRIP_MATCH,
            "frequency_seed": C.RETURN_STRIP_FREQUENCY_SEED,
            "boundary_radii": C.RETURN_STRIP_BOUNDARY_RADII,
        },
    )
