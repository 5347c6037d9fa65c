"""Interval exchange transformations."""

from pwilab.iet.induction import RauzyStep, RauzyType, rauzy_induction, rauzy_step, type_path
from pwilab.iet.keane import discontinuous_embedding_predicate, idoc_check
from pwilab.iet.permutation import Permutation, irreducible_permutations
from pwilab.iet.returns import (
    Return,
    ReturnRule,
    ZeroOrbit,
    ZeroOrbitStatistics,
    first_return,
    record_times,
    return_cocycle,
    zero_orbit_statistics,
)
from pwilab.iet.transformation import Direction, Iet, Itinerary, make_iet

__all__ = [
    "Direction",
    "Iet",
    "Itinerary",
    "Permutation",
    "RauzyStep",
    "RauzyType",
    "Return",
    "ReturnRule",
    "ZeroOrbit",
    "ZeroOrbitStatistics",
    "discontinuous_embedding_predicate",
    "first_return",
    "idoc_check",
    "irreducible_permutations",
    "make_iet",
    "rauzy_induction",
    "rauzy_step",
    "record_times",
    "return_cocycle",
    "type_path",
    "zero_orbit_statistics",
]
