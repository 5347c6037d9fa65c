"""Screening a candidate embedding by comparing itineraries."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from pwilab.errors import EscapedError, NoAtomError
from pwilab.iet.transformation import Iet
from pwilab.pwi.system import Pwi

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchResult:
    """Outcome of a symbolic comparison.

    ``length`` is the number of leading steps whose symbols agree; it equals
    the requested steps when ``mismatch_at`` is None.
    """

    length: int
    mismatch_at: int | None
    alignment: tuple[int, ...]

    @property
    def full(self) -> bool:
        return self.mismatch_at is None


def identity_alignment(d: int) -> tuple[int, ...]:
    return tuple(range(1, d + 1))


def cyclic_alignments(d: int) -> list[tuple[int, ...]]:
    """Identity first, then the other cyclic relabellings of 1..d."""
    return [tuple((s - 1 + shift) % d + 1 for s in range(1, d + 1)) for shift in range(d)]


def symbolic_match(
    iet: Iet,
    pwi: Pwi,
    z0: complex,
    n: int,
    alignment: Sequence[int] | None = None,
) -> MatchResult:
    """Compare the atom trace of z0 under T with the itinerary of 0 under f.

    ``alignment[s - 1]`` is the subinterval matched to atom symbol s.

    Raises:
        EscapedError: If the orbit of z0 leaves the atoms before step n.
    """
    aligned = tuple(alignment) if alignment is not None else identity_alignment(pwi.d)
    x = 0.0
    z = complex(z0)
    for k in range(n):
        try:
            z, symbol = pwi.apply(z)
        except NoAtomError as exc:
            raise EscapedError(f"Orbit of {z0!r} escaped at step {k}", step=k) from exc
        j = iet.locate(x)
        if aligned[symbol - 1] != j:
            log.debug("itineraries differ at step %d: atom %d vs I_%d", k, symbol, j)
            return MatchResult(k, k, aligned)
        x = x + iet.translations[j - 1]
    return MatchResult(n, None, aligned)


def best_alignment(iet: Iet, pwi: Pwi, z0: complex, n: int) -> MatchResult:
    """symbolic_match under the identity alignment, falling back to cyclic ones.

    Returns the first full match, or else the longest partial one.
    """
    best: MatchResult | None = None
    for k, alignment in enumerate(cyclic_alignments(pwi.d)):
        result = symbolic_match(iet, pwi, z0, n, alignment)
        if result.full:
            if k:
                log.warning("%s matched only under alignment %s", pwi.name, alignment)
            return result
        if best is None or result.length > best.length:
            best = result
    assert best is not None
    return best
