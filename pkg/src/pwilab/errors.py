"""Pwilab error hierarchy."""


class PwilabError(Exception):
    """Base exception for all pwilab errors."""


class ConfigError(PwilabError):
    """Raised when a run configuration or command-line value is invalid."""


class PermutationError(PwilabError):
    """Raised when a permutation is malformed or unsuitable."""


class NonBijectiveError(PermutationError):
    """Raised when a permutation mapping is not a bijection of {1..d}."""


class ReducibleError(PermutationError):
    """Raised when an irreducible permutation is required but not given."""


class IetError(PwilabError):
    """Raised when interval exchange operations fail."""


class NonPositiveLengthError(IetError):
    """Raised when a subinterval length is not strictly positive."""


class OutOfDomainError(IetError):
    """Raised when a point lies outside the half-open interval [0, |I|)."""


class DegenerateStepError(IetError):
    """Raised when a Rauzy-Veech step is undefined (equal competing lengths)."""

    def __init__(self, message: str, steps: list | None = None) -> None:
        super().__init__(message)
        self.steps = steps if steps is not None else []


class DynamicsError(PwilabError):
    """Raised when iterating a map fails to produce the requested data."""


class CapExceededError(DynamicsError):
    """Raised when a return or hitting time is not found within the step cap."""

    def __init__(self, message: str, cap: int | None = None) -> None:
        super().__init__(message)
        self.cap = cap


class NoAtomError(DynamicsError):
    """Raised when a point lies in no atom of a piecewise isometry."""

    def __init__(self, message: str, point: complex | None = None) -> None:
        super().__init__(message)
        self.point = point


class EscapedError(DynamicsError):
    """Raised when an orbit leaves the domain of a piecewise isometry."""

    def __init__(self, message: str, step: int | None = None) -> None:
        super().__init__(message)
        self.step = step


class ConnectingError(PwilabError):
    """Raised when connecting-equation computations fail."""


class ResonantThetaError(ConnectingError):
    """Raised when the rotation sum vanishes and no anchor is forced."""


class EmbeddingError(PwilabError):
    """Raised when embedding constructions or estimates fail."""


class AtomNeverVisitedError(EmbeddingError):
    """Raised when the orbit of 0 never enters some subinterval."""


class ExperimentError(PwilabError):
    """Raised when a reference system cannot be built or reproduced."""


class ParameterOutOfRangeError(ExperimentError):
    """Raised when family parameters fall outside their admissible range."""


class RenderError(PwilabError):
    """Raised when plot rendering fails."""


class EmptyInputError(RenderError):
    """Raised when there is nothing to plot."""


class PersistenceError(PwilabError):
    """Raised when reading or writing artifacts fails."""
