"""Linear and arc embeddings of an exchange into a companion piecewise isometry."""

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from pwilab.iet.transformation import Iet
from pwilab.pwi.isometry import Isometry
from pwilab.pwi.regions import ConvexRegion
from pwilab.pwi.system import Pwi


class EmbeddingKind(Enum):
    LINEAR = "linear"
    ARC = "arc"


@dataclass(frozen=True)
class TrivialEmbedding:
    """h with h|I_j(x) = z_j + v_j x (linear) or z_j + r_j e^{i(a_j x + b_j)} (arc).

    Per-atom parameters not used by ``kind`` are empty tuples.
    """

    kind: EmbeddingKind
    iet: Iet
    pwi: Pwi
    z: tuple[complex, ...]
    v: tuple[complex, ...] = ()
    r: tuple[float, ...] = ()
    a: tuple[float, ...] = ()
    b: tuple[float, ...] = ()

    @property
    def anchor(self) -> complex:
        return self.h(0.0)

    def h(self, x: float) -> complex:
        j = self.iet.locate(x) - 1
        if self.kind is EmbeddingKind.LINEAR:
            return self.z[j] + self.v[j] * x
        return self.z[j] + self.r[j] * cmath.exp(1j * (self.a[j] * x + self.b[j]))

    def conjugacy_defect(self, samples: int = 1000, seed: int = 0) -> float:
        """max |h(f(x)) - T(h(x))| over uniform samples of I."""
        rng = np.random.default_rng(seed)
        worst = 0.0
        for x in rng.uniform(0.0, self.iet.total_length, samples):
            image, _ = self.pwi.apply(self.h(x))
            worst = max(worst, abs(self.h(self.iet.apply(x)) - image))
        return worst


def trivial_linear_embedding(iet: Iet, height: float = 1.0) -> TrivialEmbedding:
    """h(x) = x + i height/2 into T(x + iy) = f(x) + iy on I x [0, height)."""
    if height <= 0.0:
        raise ValueError(f"height must be positive, got {height}")
    d = iet.d
    atoms = tuple(
        ConvexRegion.rectangle(*iet.interval(j), 0.0, height) for j in range(1, d + 1)
    )
    maps = tuple(Isometry.translation(tau) for tau in iet.translations)
    return TrivialEmbedding(
        kind=EmbeddingKind.LINEAR,
        iet=iet,
        pwi=Pwi(atoms, maps, name="linear"),
        z=(complex(0.0, height / 2),) * d,
        v=(1 + 0j,) * d,
    )


def trivial_arc_embedding(iet: Iet, radius: float = 1.0) -> TrivialEmbedding:
    """h(x) = r e^{i s x} into rotations about 0, with s = pi / (2 |I|).

    Atom j is the open-apex cone of arguments [s x_{j-1}, s x_j) and T_j is
    the rotation by s tau_j.
    """
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    d = iet.d
    scale = math.pi / (2 * iet.total_length)
    atoms = tuple(
        ConvexRegion.cone(scale * lo, scale * hi)
        for lo, hi in (iet.interval(j) for j in range(1, d + 1))
    )
    maps = tuple(Isometry(scale * tau, 0j) for tau in iet.translations)
    return TrivialEmbedding(
        kind=EmbeddingKind.ARC,
        iet=iet,
        pwi=Pwi(atoms, maps, name="arc"),
        z=(0j,) * d,
        r=(float(radius),) * d,
        a=(scale,) * d,
        b=(0.0,) * d,
    )
