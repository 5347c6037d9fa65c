"""Pwilab - interval exchanges, planar piecewise isometries and their embeddings."""

from pwilab.cli import RunConfig, parse_permutation, run_command
from pwilab.connecting import (
    ConnectingGraph,
    ConnectingMap,
    ConnectingSequence,
    ParametricCoefficients,
    arc_center,
    build_graph,
    connecting_map,
    connecting_relations,
    connecting_sequence,
    forced_anchor,
    parametric_coefficients,
    parametric_residual,
)
from pwilab.display import PlotStyle, render_plot
from pwilab.embedding import (
    EmbeddingKind,
    ErgodicEstimate,
    MatchResult,
    TangentState,
    TrivialEmbedding,
    best_alignment,
    corollary_xi,
    cyclic_alignments,
    ergodic_residual,
    resonance_check,
    resonant_theta,
    rotation_average,
    rotational_cocycle,
    symbolic_match,
    tangent_orbit,
    trivial_arc_embedding,
    trivial_linear_embedding,
    xi_estimates,
)
from pwilab.errors import (
    AtomNeverVisitedError,
    CapExceededError,
    ConfigError,
    ConnectingError,
    DegenerateStepError,
    DynamicsError,
    EmbeddingError,
    EmptyInputError,
    EscapedError,
    ExperimentError,
    IetError,
    NoAtomError,
    NonBijectiveError,
    NonPositiveLengthError,
    OutOfDomainError,
    ParameterOutOfRangeError,
    PermutationError,
    PersistenceError,
    PwilabError,
    ReducibleError,
    RenderError,
    ResonantThetaError,
)
from pwilab.experiments import (
    Case,
    PaperSystem,
    ReproductionReport,
    build_cone_family,
    build_paper_3pwi,
    build_return_strip,
    estimate_lengths,
    reproduce,
    reproduce_many,
    system_for,
)
from pwilab.iet import (
    Direction,
    Iet,
    Itinerary,
    Permutation,
    RauzyStep,
    RauzyType,
    Return,
    ReturnRule,
    ZeroOrbit,
    ZeroOrbitStatistics,
    discontinuous_embedding_predicate,
    first_return,
    idoc_check,
    irreducible_permutations,
    make_iet,
    rauzy_induction,
    rauzy_step,
    record_times,
    return_cocycle,
    type_path,
    zero_orbit_statistics,
)
from pwilab.persistence import (
    export_orbit,
    load_iet,
    load_pwi,
    read_orbit,
    save_iet,
    save_pwi,
    write_report,
)
from pwilab.pwi import (
    ConvexRegion,
    HalfPlane,
    Isometry,
    OrbitRecord,
    Piece,
    Pwi,
    Sense,
    annulus_excursion,
    batch_orbits,
    check_disjoint,
    induced_pwi,
    pwi_first_return,
    pwi_orbit,
)

__all__ = [
    "AtomNeverVisitedError",
    "CapExceededError",
    "Case",
    "ConfigError",
    "ConnectingError",
    "ConnectingGraph",
    "ConnectingMap",
    "ConnectingSequence",
    "ConvexRegion",
    "DegenerateStepError",
    "Direction",
    "DynamicsError",
    "EmbeddingError",
    "EmbeddingKind",
    "EmptyInputError",
    "ErgodicEstimate",
    "EscapedError",
    "ExperimentError",
    "HalfPlane",
    "Iet",
    "IetError",
    "Isometry",
    "Itinerary",
    "MatchResult",
    "NoAtomError",
    "NonBijectiveError",
    "NonPositiveLengthError",
    "OrbitRecord",
    "OutOfDomainError",
    "PaperSystem",
    "ParameterOutOfRangeError",
    "ParametricCoefficients",
    "Permutation",
    "PermutationError",
    "PersistenceError",
    "Piece",
    "PlotStyle",
    "Pwi",
    "PwilabError",
    "RauzyStep",
    "RauzyType",
    "ReducibleError",
    "RenderError",
    "ReproductionReport",
    "ResonantThetaError",
    "Return",
    "ReturnRule",
    "RunConfig",
    "Sense",
    "TangentState",
    "TrivialEmbedding",
    "ZeroOrbit",
    "ZeroOrbitStatistics",
    "annulus_excursion",
    "arc_center",
    "batch_orbits",
    "best_alignment",
    "build_cone_family",
    "build_graph",
    "build_paper_3pwi",
    "build_return_strip",
    "check_disjoint",
    "connecting_map",
    "connecting_relations",
    "connecting_sequence",
    "corollary_xi",
    "cyclic_alignments",
    "discontinuous_embedding_predicate",
    "ergodic_residual",
    "estimate_lengths",
    "export_orbit",
    "first_return",
    "forced_anchor",
    "idoc_check",
    "induced_pwi",
    "irreducible_permutations",
    "load_iet",
    "load_pwi",
    "make_iet",
    "parametric_coefficients",
    "parametric_residual",
    "parse_permutation",
    "pwi_first_return",
    "pwi_orbit",
    "rauzy_induction",
    "rauzy_step",
    "read_orbit",
    "record_times",
    "render_plot",
    "reproduce",
    "reproduce_many",
    "resonance_check",
    "resonant_theta",
    "return_cocycle",
    "rotation_average",
    "rotational_cocycle",
    "run_command",
    "save_iet",
    "save_pwi",
    "symbolic_match",
    "system_for",
    "tangent_orbit",
    "trivial_arc_embedding",
    "trivial_linear_embedding",
    "type_path",
    "write_report",
    "xi_estimates",
    "zero_orbit_statistics",
]
