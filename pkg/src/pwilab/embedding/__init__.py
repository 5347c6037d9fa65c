"""Embeddings of interval exchanges into piecewise isometries."""

from pwilab.embedding.ergodic import (
    ErgodicEstimate,
    corollary_xi,
    ergodic_residual,
    resonance_check,
    resonant_theta,
    rotation_average,
    xi_estimates,
)
from pwilab.embedding.symbolic import (
    MatchResult,
    best_alignment,
    cyclic_alignments,
    symbolic_match,
)
from pwilab.embedding.tangent import TangentState, rotational_cocycle, tangent_orbit
from pwilab.embedding.trivial import (
    EmbeddingKind,
    TrivialEmbedding,
    trivial_arc_embedding,
    trivial_linear_embedding,
)

__all__ = [
    "EmbeddingKind",
    "ErgodicEstimate",
    "MatchResult",
    "TangentState",
    "TrivialEmbedding",
    "best_alignment",
    "corollary_xi",
    "cyclic_alignments",
    "ergodic_residual",
    "resonance_check",
    "resonant_theta",
    "rotation_average",
    "rotational_cocycle",
    "symbolic_match",
    "tangent_orbit",
    "trivial_arc_embedding",
    "trivial_linear_embedding",
    "xi_estimates",
]
