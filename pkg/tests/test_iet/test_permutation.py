"""Tests for permutations in one-line notation."""

import pytest

from pwilab.errors import NonBijectiveError, PermutationError, ReducibleError
from pwilab.iet import Permutation, irreducible_permutations


class TestPermutation:
    def test_at_and_inverse(self):
        pi = Permutation((4, 2, 1, 3))
        assert pi.at(1) == 4
        assert pi.at(3) == 1
        assert pi.inverse_at(4) == 1
        assert pi.inverse_at(3) == 4

    def test_zero_is_fixed(self):
        pi = Permutation((3, 1, 2))
        assert pi.at(0) == 0
        assert pi.inverse_at(0) == 0

    def test_inverse_round_trip(self):
        pi = Permutation((4, 2, 1, 3))
        for j in range(pi.d + 1):
            assert pi.inverse_at(pi.at(j)) == j

    def test_bracket_wraps_mod_d_plus_one(self):
        pi = Permutation((2, 1))
        assert pi.bracket(2) == 2
        assert pi.bracket(3) == 0
        assert pi.bracket(4) == 1
        assert pi.bracket(-1) == 2

    def test_str_is_one_line(self):
        assert str(Permutation((4, 2, 1, 3))) == "4,2,1,3"

    def test_from_sequence(self):
        assert Permutation.from_sequence([2, 1]) == Permutation((2, 1))

    def test_values_coerced_to_int(self):
        assert Permutation((2.0, 1.0)).mapping == (2, 1)


class TestPermutationValidation:
    @pytest.mark.parametrize("mapping", [(1, 1), (1, 3), (0, 1), (2, 3, 4)])
    def test_non_bijective(self, mapping):
        with pytest.raises(NonBijectiveError, match="not a bijection"):
            Permutation(mapping)

    def test_too_short(self):
        with pytest.raises(NonBijectiveError, match="d >= 2"):
            Permutation((1,))

    def test_errors_are_permutation_errors(self):
        with pytest.raises(PermutationError):
            Permutation((1, 1))


class TestIrreducibility:
    @pytest.mark.parametrize(
        "mapping, expected",
        [
            ((2, 1), True),
            ((1, 2), False),
            ((3, 2, 1), True),
            ((2, 1, 3), False),
            ((2, 3, 1), True),
            ((4, 2, 1, 3), True),
            ((2, 1, 4, 3), False),
        ],
    )
    def test_flag(self, mapping, expected):
        assert Permutation(mapping).irreducible is expected

    def test_require_irreducible_raises(self):
        with pytest.raises(ReducibleError, match="reducible"):
            Permutation((1, 2)).require_irreducible()

    def test_require_irreducible_returns_self(self):
        pi = Permutation((3, 2, 1))
        assert pi.require_irreducible() is pi

    @pytest.mark.parametrize("d, count", [(2, 1), (3, 3), (4, 13), (5, 71), (6, 461)])
    def test_enumeration_counts(self, d, count):
        assert sum(1 for _ in irreducible_permutations(d)) == count

    def test_enumeration_only_yields_irreducible(self):
        assert all(pi.irreducible for pi in irreducible_permutations(4))

    def test_enumeration_is_lexicographic(self):
        mappings = [pi.mapping for pi in irreducible_permutations(4)]
        assert mappings == sorted(mappings)
