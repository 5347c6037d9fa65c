"""Tests for planar isometries."""

import cmath
import math

import pytest

from pwilab.errors import ResonantThetaError
from pwilab.pwi import Isometry


@pytest.fixture
def isometries(rng):
    return [
        Isometry(float(t), complex(a, b))
        for t, a, b in zip(
            rng.uniform(-10, 10, 20), rng.uniform(-2, 2, 20), rng.uniform(-2, 2, 20)
        )
    ]


class TestIsometry:
    def test_apply(self):
        quarter = Isometry(math.pi / 2, 1)
        assert quarter.apply(1) == pytest.approx(1 + 1j)

    def test_theta_is_normalised(self):
        assert Isometry(-math.pi / 2).theta == pytest.approx(3 * math.pi / 2)
        assert Isometry(5 * math.pi).theta == pytest.approx(math.pi)

    def test_identity(self):
        assert Isometry.identity().is_identity()
        assert Isometry.identity().apply(2 - 3j) == 2 - 3j

    def test_translation(self):
        assert Isometry.translation(0.5j).apply(1) == 1 + 0.5j

    def test_compose_applies_right_first(self):
        rotate = Isometry(math.pi / 2)
        shift = Isometry.translation(1)
        assert rotate.compose(shift).apply(0) == pytest.approx(1j)
        assert shift.compose(rotate).apply(0) == pytest.approx(1)

    def test_inverse(self, isometries):
        for iso in isometries:
            assert iso.compose(iso.inverse()).is_identity(tol=1e-12)
            assert iso.inverse().compose(iso).is_identity(tol=1e-12)

    def test_compose_is_associative(self, isometries):
        for f, g, h in zip(isometries, isometries[1:], isometries[2:]):
            assert f.compose(g).compose(h).is_close(f.compose(g.compose(h)), tol=1e-12)

    def test_compose_matches_pointwise(self, isometries):
        z = 0.3 - 0.7j
        for f, g in zip(isometries, isometries[1:]):
            assert f.compose(g).apply(z) == pytest.approx(f.apply(g.apply(z)))

    def test_is_close_wraps_angles(self):
        assert Isometry(1e-15).is_close(Isometry(2 * math.pi - 1e-15))


class TestFixedPoint:
    def test_rotation_centre(self):
        centre = 0.5 + 0.25j
        iso = Isometry(1.0, centre - cmath.exp(1j) * centre)
        assert iso.fixed_point() == pytest.approx(centre)
        assert iso.apply(iso.fixed_point()) == pytest.approx(iso.fixed_point())

    def test_translation_has_none(self):
        with pytest.raises(ResonantThetaError, match="zero mod 2pi"):
            Isometry.translation(1).fixed_point()
