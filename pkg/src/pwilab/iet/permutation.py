"""Permutations of {1..d} in one-line notation."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import permutations

from pwilab.errors import NonBijectiveError, ReducibleError


@dataclass(frozen=True)
class Permutation:
    """A permutation pi of {1..d}; ``mapping[j - 1]`` is pi(j).

    pi(j) is the position of the j-th subinterval after the exchange.
    The extension pi(0) = 0 is available through ``at`` and
    ``inverse_at``, and ``bracket`` reduces indices mod d + 1.

    Example:
        pi = Permutation((4, 2, 1, 3))   # (2)(143) in cycle notation
        pi.at(1)          # 4
        pi.inverse_at(4)  # 1
    """

    mapping: tuple[int, ...]
    irreducible: bool = field(init=False)
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        mapping = tuple(int(v) for v in self.mapping)
        d = len(mapping)
        if d < 2:
            raise NonBijectiveError(f"Permutation needs d >= 2, got d={d}")
        if sorted(mapping) != list(range(1, d + 1)):
            raise NonBijectiveError(f"{list(mapping)} is not a bijection of 1..{d}")
        inverse = [0] * d
        for j, image in enumerate(mapping, start=1):
            inverse[image - 1] = j
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "_inverse", tuple(inverse))
        object.__setattr__(self, "irreducible", _is_irreducible(mapping))

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> "Permutation":
        return cls(tuple(values))

    @property
    def d(self) -> int:
        return len(self.mapping)

    def at(self, j: int) -> int:
        """pi(j) for j in 0..d, with pi(0) = 0."""
        return 0 if j == 0 else self.mapping[j - 1]

    def inverse_at(self, i: int) -> int:
        """pi^{-1}(i) for i in 0..d, with pi^{-1}(0) = 0."""
        return 0 if i == 0 else self._inverse[i - 1]

    def bracket(self, j: int) -> int:
        """[j] = j mod (d + 1)."""
        return j % (self.d + 1)

    def require_irreducible(self) -> "Permutation":
        if not self.irreducible:
            raise ReducibleError(f"Permutation {list(self.mapping)} is reducible")
        return self

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.mapping)


def _is_irreducible(mapping: tuple[int, ...]) -> bool:
    d = len(mapping)
    top = 0
    for k in range(1, d):
        top = max(top, mapping[k - 1])
        if top == k:
            return False
    return True


def irreducible_permutations(d: int) -> Iterator[Permutation]:
    """All irreducible permutations of {1..d}, in lexicographic order."""
    for mapping in permutations(range(1, d + 1)):
        if _is_irreducible(mapping):
            yield Permutation(mapping)
