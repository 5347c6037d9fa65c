"""Tests for connecting maps, relations and forced anchors."""

import cmath

import pytest

from pwilab.connecting import (
    arc_center,
    build_graph,
    connecting_map,
    connecting_relations,
    forced_anchor,
    parametric_coefficients,
    parametric_residual,
)
from pwilab.embedding import trivial_arc_embedding, trivial_linear_embedding
from pwilab.errors import ResonantThetaError
from pwilab.iet import Permutation, irreducible_permutations

CENTRE = 0.3 - 0.4j


def _linear_data(iet):
    return [0.0] * iet.d, [complex(tau) for tau in iet.translations]


def _arc_data(iet, centre=CENTRE):
    """Rotation angles and translations of the arc embedding moved to rotate about ``centre``."""
    embedding = trivial_arc_embedding(iet)
    theta = [iso.theta for iso in embedding.pwi.maps]
    lam = [centre * (1 - cmath.exp(1j * t)) for t in theta]
    return theta, lam


def _arc_points(iet, centre=CENTRE):
    embedding = trivial_arc_embedding(iet)
    scale = embedding.a[0]
    return [centre + cmath.exp(1j * scale * x) for x in iet.breakpoints]


def e(angle):
    return cmath.exp(1j * angle)


class TestConnectingMap:
    def test_translations_have_zero_rotation(self, random_iets):
        for f in random_iets(20):
            theta, lam = _linear_data(f)
            for p0 in range(f.d + 1):
                assert connecting_map(theta, lam, f.perm, p0).theta_sum == 0.0

    def test_rotation_of_map_is_theta_sum(self, rng):
        perm = Permutation((4, 2, 1, 3))
        theta = list(rng.uniform(-3, 3, 4))
        lam = [complex(a, b) for a, b in rng.uniform(-1, 1, (4, 2))]
        for p0 in range(5):
            F, theta_sum = connecting_map(theta, lam, perm, p0)
            assert cmath.exp(1j * F.theta) == pytest.approx(cmath.exp(1j * theta_sum))

    def test_fixes_breakpoint_images_of_an_arc(self, random_iets):
        for f in random_iets(20):
            theta, lam = _arc_data(f)
            points = _arc_points(f)
            for p0 in range(f.d + 1):
                F, _ = connecting_map(theta, lam, f.perm, p0)
                assert F.apply(points[p0]) == pytest.approx(points[p0], abs=1e-9)

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="Expected 2 per-atom values"):
            connecting_map([0.0], [0j, 0j], Permutation((2, 1)), 0)


class TestParametric:
    def test_coefficients_are_linear_in_lambda(self, rng):
        perm = Permutation((4, 2, 1, 3))
        theta = list(rng.uniform(-3, 3, 4))
        lam = [complex(a, b) for a, b in rng.uniform(-1, 1, (4, 2))]
        for p0 in range(5):
            coefficients = parametric_coefficients(theta, perm, p0)
            F, theta_sum = connecting_map(theta, lam, perm, p0)
            assert coefficients.evaluate(lam) == pytest.approx(F.lam)
            assert coefficients.theta_sum == pytest.approx(theta_sum)

    def test_linear_embedding_has_zero_residual(self, random_iets):
        for f in random_iets(20, dims=(2, 3, 4, 5)):
            theta, lam = _linear_data(f)
            for p0 in range(f.d + 1):
                assert abs(parametric_residual(theta, lam, f.perm, p0)) < 1e-12

    def test_arc_embedding_has_zero_residual(self, random_iets):
        for f in random_iets(20):
            theta, lam = _arc_data(f)
            graph = build_graph(f.perm)
            for cycle in graph.cycles:
                assert abs(parametric_residual(theta, lam, f.perm, cycle[0])) < 1e-9

    def test_connected_graphs_have_zero_rotation_sum(self, rng):
        for d in range(2, 7):
            for perm in irreducible_permutations(d):
                if not build_graph(perm).connected:
                    continue
                for _ in range(20):
                    theta = list(rng.uniform(0, 2 * cmath.pi, d))
                    assert abs(connecting_map(theta, [0j] * d, perm, 0).theta_sum) < 1e-12


class TestClosedForms:
    def test_two_interval_swap(self, rng):
        perm = Permutation((2, 1))
        for _ in range(100):
            t1, t2 = rng.uniform(0, 2 * cmath.pi, 2)
            r = parametric_coefficients([t1, t2], perm, 0).r
            assert r[0] == pytest.approx(e(-t1) - e(t2 - t1), abs=1e-12)
            assert r[1] == pytest.approx(1 - e(-t1), abs=1e-12)

    def test_two_interval_swap_balances_translations(self, rng):
        perm = Permutation((2, 1))
        for _ in range(100):
            t1, t2 = rng.uniform(0, 2 * cmath.pi, 2)
            lam1 = complex(*rng.uniform(-1, 1, 2))
            r = parametric_coefficients([t1, t2], perm, 0).r
            # lam_2 (1 - e^{i t1}) = lam_1 (1 - e^{i t2}) solves the equation
            lam2 = lam1 * (1 - cmath.exp(1j * t2)) / (1 - cmath.exp(1j * t1))
            assert abs(lam1 * r[0] + lam2 * r[1]) < 1e-9

    def test_four_interval(self, rng):
        perm = Permutation((4, 2, 1, 3))
        for _ in range(100):
            t1, t2, t3, t4 = rng.uniform(0, 2 * cmath.pi, 4)
            r = parametric_coefficients([t1, t2, t3, t4], perm, 0).r
            expected = (
                e(-t1) - e(t4 - t1),
                e(t4 - t2) - e(t3 - t2),
                1 - e(t4 - t2),
                e(t3 - t2) - e(-t1),
            )
            for got, want in zip(r, expected):
                assert got == pytest.approx(want, abs=1e-12)


class TestForcedAnchor:
    def test_is_fixed_point(self, rng):
        perm = Permutation((3, 2, 1))
        theta = [0.4, 1.1, -0.9]
        lam = [complex(a, b) for a, b in rng.uniform(-1, 1, (3, 2))]
        anchor = forced_anchor(theta, lam, perm, 0)
        F, _ = connecting_map(theta, lam, perm, 0)
        assert F.apply(anchor) == pytest.approx(anchor)

    def test_connected_graph_is_resonant(self, golden_iet):
        theta, lam = _arc_data(golden_iet)
        with pytest.raises(ResonantThetaError, match="vanishes"):
            forced_anchor(theta, lam, golden_iet.perm, 0)


class TestConnectingRelations:
    def test_linear_embedding(self, random_iets):
        for f in random_iets(20, dims=(2, 3, 4, 5)):
            theta, lam = _linear_data(f)
            points = [complex(x, 0.5) for x in f.breakpoints]
            residuals = connecting_relations(theta, lam, f.perm, points)
            assert len(residuals) == f.d + 1
            assert max(abs(r) for r in residuals) < 1e-12

    def test_arc_embedding(self, random_iets):
        for f in random_iets(20):
            theta, lam = _arc_data(f)
            residuals = connecting_relations(theta, lam, f.perm, _arc_points(f))
            assert max(abs(r) for r in residuals) < 1e-9

    def test_wrong_point_count(self, swap_iet):
        theta, lam = _linear_data(swap_iet)
        with pytest.raises(ValueError, match="Expected 3 breakpoint images"):
            connecting_relations(theta, lam, swap_iet.perm, [0j, 1 + 0j])

    def test_displaced_point_breaks_a_relation(self, swap_iet):
        theta, lam = _linear_data(swap_iet)
        points = [complex(x, 0.5) for x in swap_iet.breakpoints]
        points[1] += 0.1j
        residuals = connecting_relations(theta, lam, swap_iet.perm, points)
        assert max(abs(r) for r in residuals) == pytest.approx(0.1)


class TestArcCenter:
    def test_common_centre(self, four_iet):
        theta, lam = _arc_data(four_iet)
        assert arc_center(theta, lam) == pytest.approx((CENTRE,) * 4)

    def test_translations_have_no_centre(self, swap_iet):
        theta, lam = _linear_data(swap_iet)
        assert arc_center(theta, lam) is None
