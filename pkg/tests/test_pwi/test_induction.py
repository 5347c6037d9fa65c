"""Tests for the induced piecewise isometry of one Rauzy-Veech step."""

import pytest

from pwilab.embedding import trivial_arc_embedding, trivial_linear_embedding
from pwilab.errors import DegenerateStepError
from pwilab.iet import RauzyType, make_iet, rauzy_induction, rauzy_step
from pwilab.pwi import Pwi, induced_pwi

HEIGHT = 0.5j
PHI_INVERSE = (5**0.5 - 1) / 2


def _assert_matches_step(iet, points):
    embedding = trivial_linear_embedding(iet)
    induced = induced_pwi(embedding.pwi, iet)
    step = rauzy_step(iet)
    for x in points:
        z, symbol = induced.apply(x + HEIGHT)
        assert symbol == step.iet.locate(x)
        assert z == pytest.approx(step.iet.apply(x) + HEIGHT, abs=1e-9)


class TestInducedPwi:
    def test_bottom_step(self, golden_iet, rng):
        assert rauzy_step(golden_iet).type is RauzyType.BOTTOM
        _assert_matches_step(golden_iet, rng.uniform(0.0, PHI_INVERSE, 500))

    def test_top_step(self, periodic_iet, rng):
        assert rauzy_step(periodic_iet).type is RauzyType.TOP
        _assert_matches_step(periodic_iet, rng.uniform(0.0, 0.6, 500))

    def test_random_exchanges(self, random_iets, rng):
        for f in random_iets(30):
            shrunk = rauzy_step(f).iet.total_length
            _assert_matches_step(f, rng.uniform(0.0, shrunk, 100))

    def test_removed_strip_has_no_atom(self, random_iets, rng):
        for f in random_iets(30):
            induced = induced_pwi(trivial_linear_embedding(f).pwi, f)
            shrunk = rauzy_step(f).iet.total_length
            for x in rng.uniform(shrunk, f.total_length, 50):
                assert not induced.contains(x + HEIGHT)

    def test_symbols_follow_induced_exchange(self, four_iet):
        induced = induced_pwi(trivial_linear_embedding(four_iet).pwi, four_iet)
        assert set(induced.symbols) == set(range(1, four_iet.d + 1))
        assert list(induced.symbols) == sorted(induced.symbols)

    def test_iterated_induction_tracks_the_path(self, golden_iet, rng):
        pwi = trivial_linear_embedding(golden_iet).pwi
        current = golden_iet
        for step in rauzy_induction(golden_iet, 4):
            pwi = induced_pwi(pwi, current)
            current = step.iet
        for x in rng.uniform(0.0, current.total_length, 200):
            z, symbol = pwi.apply(x + HEIGHT)
            assert symbol == current.locate(x)
            assert z == pytest.approx(current.apply(x) + HEIGHT, abs=1e-9)

    @pytest.mark.parametrize("name", ["golden_iet", "four_iet"])
    def test_iterated_induction_stays_small(self, name, request):
        current = request.getfixturevalue(name)
        pwi = trivial_linear_embedding(current).pwi
        for step in rauzy_induction(current, 8):
            pwi = induced_pwi(pwi, current)
            current = step.iet
            assert len(pwi.atoms) == current.d
            assert max(len(atom.constraints) for atom in pwi.atoms) <= 4

    def test_arc_induction_stays_small(self, four_iet):
        pwi = trivial_arc_embedding(four_iet).pwi
        current = four_iet
        for step in rauzy_induction(four_iet, 5):
            pwi = induced_pwi(pwi, current)
            current = step.iet
            assert len(pwi.atoms) == current.d

    def test_cyclic_alignment(self, swap_iet, rng):
        # relabel the atoms so that I_2 is carried by symbol 1
        base = trivial_linear_embedding(swap_iet).pwi
        relabelled = Pwi(base.atoms, base.maps, symbols=(2, 1))
        induced = induced_pwi(relabelled, swap_iet, atom_for_d=1)
        step = rauzy_step(swap_iet)
        for x in rng.uniform(0.0, step.iet.total_length, 100):
            _, symbol = induced.apply(x + HEIGHT)
            assert symbol == step.iet.locate(x)

    def test_degenerate(self):
        f = make_iet((0.5, 0.5), (2, 1))
        with pytest.raises(DegenerateStepError):
            induced_pwi(trivial_linear_embedding(f).pwi, f)
