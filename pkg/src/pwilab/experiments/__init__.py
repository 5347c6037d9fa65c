"""Reference systems and the reproduction pipeline."""

from pwilab.experiments.reproduce import (
    Case,
    ReproductionReport,
    estimate_lengths,
    reproduce,
    reproduce_many,
    system_for,
)
from pwilab.experiments.systems import (
    PaperSystem,
    build_cone_family,
    build_paper_3pwi,
    build_return_strip,
)

__all__ = [
    "Case",
    "PaperSystem",
    "ReproductionReport",
    "build_cone_family",
    "build_paper_3pwi",
    "build_return_strip",
    "estimate_lengths",
    "reproduce",
    "reproduce_many",
    "system_for",
]
