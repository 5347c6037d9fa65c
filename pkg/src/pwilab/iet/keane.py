"""Numerical screens on the breakpoint orbits of an exchange."""

import logging

from pwilab.iet.transformation import Iet
from pwilab.numerics import BOUNDARY_TOL, IDOC_DEPTH

log = logging.getLogger(__name__)


def _hits_interior_breakpoint(iet: Iet, x: float, tol: float) -> bool:
    return any(abs(x - b) < tol for b in iet.breakpoints[1:-1])


def idoc_check(iet: Iet, depth: int = IDOC_DEPTH, tol: float = BOUNDARY_TOL) -> bool:
    """Heuristic infinite-distinct-orbit test on backward breakpoint orbits.

    True when no f^{-k}(x_i), 1 <= k <= ``depth``, lands within ``tol`` of an
    interior breakpoint. Two backward orbits can only meet if one of them
    hits the other's breakpoint, so this also covers pairwise distinctness.
    Passing is evidence of minimality, not a proof.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    for i, start in enumerate(iet.breakpoints[1:-1], start=1):
        x = start
        for k in range(1, depth + 1):
            x = iet.preimage(x)
            if _hits_interior_breakpoint(iet, x, tol):
                log.debug("f^-%d(x_%d) = %r hits a breakpoint", k, i, x)
                return False
    return True


def discontinuous_embedding_predicate(iet: Iet, tol: float = BOUNDARY_TOL) -> bool:
    """True iff f^{-1}{x_1..x_{d-1}} meets {x_1..x_{d-1}}."""
    return any(
        _hits_interior_breakpoint(iet, iet.preimage(x), tol)
        for x in iet.breakpoints[1:-1]
    )
