"""Connecting graphs and connecting equations."""

from pwilab.connecting.equations import (
    ConnectingMap,
    ParametricCoefficients,
    arc_center,
    connecting_map,
    connecting_relations,
    forced_anchor,
    parametric_coefficients,
    parametric_residual,
)
from pwilab.connecting.graph import (
    ConnectingGraph,
    ConnectingSequence,
    build_graph,
    connecting_sequence,
)

__all__ = [
    "ConnectingGraph",
    "ConnectingMap",
    "ConnectingSequence",
    "ParametricCoefficients",
    "arc_center",
    "build_graph",
    "connecting_map",
    "connecting_relations",
    "connecting_sequence",
    "forced_anchor",
    "parametric_coefficients",
    "parametric_residual",
]
