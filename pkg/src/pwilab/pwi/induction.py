"""The induced map S(T) matching one Rauzy-Veech step of an embedded exchange."""

import logging

from pwilab.iet.induction import RauzyType, rauzy_step
from pwilab.iet.transformation import Iet
from pwilab.pwi.regions import ConvexRegion
from pwilab.pwi.system import Piece, Pwi

log = logging.getLogger(__name__)


def _subtract(regions: list[ConvexRegion], removed: list[ConvexRegion]) -> list[ConvexRegion]:
    for cut in removed:
        regions = [piece for region in regions for piece in region.difference(cut)]
    return regions


def _cut(region: ConvexRegion, other: ConvexRegion) -> list[ConvexRegion]:
    """region n other as a list: empty, or the simplified intersection."""
    meet = region.intersect(other)
    return [] if meet.is_empty() else [meet.simplified()]


def induced_pwi(pwi: Pwi, iet: Iet, atom_for_d: int | None = None) -> Pwi:
    """First return of T to X', the region carrying the induced exchange.

    Atom symbols of ``pwi`` are matched to subintervals by the cyclic
    alignment sending I_d to the atom with symbol ``atom_for_d`` (default d).
    The result is labelled by the subintervals of ``rauzy_step(iet).iet``.
    Type 0 keeps X_d minus T(X_b) and sends X_b through T_d o T_b; type 1
    splits X_b at T_b^{-1}(X_d) and drops X_d.

    Raises:
        DegenerateStepError: If the Rauzy step of ``iet`` is undefined.
    """
    step = rauzy_step(iet)
    d = iet.d
    b = iet.perm.inverse_at(d)
    shift = (atom_for_d if atom_for_d is not None else d) - d

    by_interval: dict[int, list[Piece]] = {j: [] for j in range(1, d + 1)}
    for piece in pwi.pieces():
        j = (piece.symbol - 1 - shift) % d + 1
        by_interval[j].append(piece)

    out: list[Piece] = []
    last = by_interval[d]
    if step.type is RauzyType.TOP:
        for j in range(1, d):
            if j == b:
                continue
            out.extend(Piece(p.region, p.iso, j) for p in by_interval[j])
        for p in by_interval[b]:
            for q in last:
                for region in _cut(p.region, q.region.image(p.iso.inverse())):
                    out.append(Piece(region, q.iso.compose(p.iso), b))
        images = [p.region.image(p.iso) for p in by_interval[b]]
        for q in last:
            out.extend(Piece(region, q.iso, d) for region in _subtract([q.region], images))
    else:
        for j in range(1, b):
            out.extend(Piece(p.region, p.iso, j) for p in by_interval[j])
        for p in by_interval[b]:
            preimages = [q.region.image(p.iso.inverse()) for q in last]
            out.extend(Piece(region, p.iso, b) for region in _subtract([p.region], preimages))
            for q, pre in zip(last, preimages):
                for region in _cut(p.region, pre):
                    out.append(Piece(region, q.iso.compose(p.iso), b + 1))
        for j in range(b + 1, d):
            out.extend(Piece(p.region, p.iso, j + 1) for p in by_interval[j])

    out.sort(key=lambda piece: piece.symbol)
    log.debug("induced %s: type %d, %d convex atoms", pwi.name, step.type, len(out))
    return Pwi(
        atoms=tuple(p.region for p in out),
        maps=tuple(p.iso for p in out),
        name=f"induced({pwi.name})" if pwi.name else "induced",
        symbols=tuple(p.symbol for p in out),
    )
