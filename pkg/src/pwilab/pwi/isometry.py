"""Orientation-preserving planar isometries z -> e^{i theta} z + lambda."""

import cmath
from dataclasses import dataclass

from pwilab.errors import ResonantThetaError
from pwilab.numerics import RESONANCE_TOL, normalize_angle, reduce_angle, unit


@dataclass(frozen=True)
class Isometry:
    """A rotation by ``theta`` followed by translation by ``lam``.

    ``theta`` is stored reduced into [0, 2pi).

    Example:
        quarter = Isometry(math.pi / 2, 1)
        quarter.apply(1)               # 1+1j
        quarter.compose(quarter.inverse()).is_identity()   # True
    """

    theta: float = 0.0
    lam: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", normalize_angle(float(self.theta)))
        object.__setattr__(self, "lam", complex(self.lam))

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(0.0, 0j)

    @classmethod
    def translation(cls, lam: complex) -> "Isometry":
        return cls(0.0, lam)

    @property
    def rotation(self) -> complex:
        return unit(self.theta)

    def apply(self, z: complex) -> complex:
        return self.rotation * z + self.lam

    def compose(self, other: "Isometry") -> "Isometry":
        """self o other: apply ``other`` first."""
        return Isometry(self.theta + other.theta, self.rotation * other.lam + self.lam)

    def inverse(self) -> "Isometry":
        return Isometry(-self.theta, -unit(-self.theta) * self.lam)

    def is_identity(self, tol: float = 1e-13) -> bool:
        return abs(reduce_angle(self.theta)) <= tol and abs(self.lam) <= tol

    def is_close(self, other: "Isometry", tol: float = 1e-13) -> bool:
        return (
            abs(reduce_angle(self.theta - other.theta)) <= tol
            and abs(self.lam - other.lam) <= tol
        )

    def fixed_point(self, tol: float = RESONANCE_TOL) -> complex:
        """The centre lam / (1 - e^{i theta}) of a genuine rotation.

        Raises:
            ResonantThetaError: If theta is within ``tol`` of 0 mod 2pi.
        """
        if abs(reduce_angle(self.theta)) <= tol:
            raise ResonantThetaError(
                f"Rotation angle {self.theta!r} is zero mod 2pi; no unique fixed point"
            )
        return self.lam / (1 - cmath.exp(1j * self.theta))
