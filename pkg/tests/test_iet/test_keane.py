"""Tests for the breakpoint-orbit screens."""

import pytest

from pwilab.iet import discontinuous_embedding_predicate, idoc_check, make_iet


class TestIdocCheck:
    def test_golden_passes(self, golden_iet):
        assert idoc_check(golden_iet, depth=2000)

    def test_periodic_fails(self, periodic_iet):
        assert not idoc_check(periodic_iet, depth=10)

    def test_fixed_middle_interval_fails(self):
        assert not idoc_check(make_iet((0.3, 0.4, 0.3), (3, 2, 1)), depth=10)

    def test_depth_must_be_positive(self, golden_iet):
        with pytest.raises(ValueError, match="depth"):
            idoc_check(golden_iet, depth=0)


class TestDiscontinuousEmbeddingPredicate:
    def test_golden(self, golden_iet):
        assert not discontinuous_embedding_predicate(golden_iet)

    def test_fixed_middle_interval(self):
        assert discontinuous_embedding_predicate(make_iet((0.3, 0.4, 0.3), (3, 2, 1)))

    def test_half_swap_maps_breakpoint_to_origin(self):
        # f^{-1}(1/2) = 0, which is not an interior breakpoint
        assert not discontinuous_embedding_predicate(make_iet((0.5, 0.5), (2, 1)))
