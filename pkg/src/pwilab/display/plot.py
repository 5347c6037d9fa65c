"""SVG rendering of orbits in the plane and of tangent orbits on the cylinder."""

import logging
import math
from collections.abc import Sequence
from enum import Enum
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from pwilab.embedding.tangent import TangentState  # noqa: E402
from pwilab.errors import EmptyInputError, RenderError  # noqa: E402
from pwilab.numerics import TWO_PI, unit  # noqa: E402
from pwilab.pwi.system import OrbitRecord, Pwi  # noqa: E402

log = logging.getLogger(__name__)

DEFAULT_MARKER_RADIUS = 0.3
PLANE_MARGIN = 0.05


class PlotStyle(Enum):
    SCATTER = "scatter"
    CYLINDER = "cylinder"


def _scatter_points(record: OrbitRecord | Sequence[complex]) -> np.ndarray:
    if isinstance(record, OrbitRecord):
        return record.as_array()
    return np.asarray(list(record), dtype=np.complex128)


def _cylinder_points(states: Sequence[TangentState]) -> np.ndarray:
    return np.asarray([complex(s.x, s.y) for s in states], dtype=np.complex128)


def _draw_atom_edges(ax, pwi: Pwi) -> None:
    seen = set()
    for region in pwi.atoms:
        for h in region.constraints:
            phi = h.phi % math.pi
            key = (round(phi, 12), round((unit(phi) * h.anchor).imag, 12))
            if key in seen:
                continue
            seen.add(key)
            start = h.anchor
            stop = h.anchor + unit(-h.phi)
            ax.axline(
                (start.real, start.imag),
                (stop.real, stop.imag),
                color="0.6",
                linewidth=0.5,
                gid="atom-edge",
            )


def render_plot(
    records: Sequence,
    out: str | Path,
    style: PlotStyle | str = PlotStyle.SCATTER,
    marker_radius: float = DEFAULT_MARKER_RADIUS,
    pwi: Pwi | None = None,
    domain_length: float | None = None,
    title: str | None = None,
) -> Path:
    """Write a standalone SVG with one marker per orbit point.

    ``scatter`` takes OrbitRecords or sequences of complex points and draws
    the atom edges of ``pwi`` when one is given. ``cylinder`` takes
    sequences of TangentState and fixes the axes to [0, domain_length] x
    [0, 2pi). Each record becomes one group with id ``orbit-points-<k>``.

    Raises:
        EmptyInputError: If there are no points to draw.
        RenderError: If ``cylinder`` lacks ``domain_length`` or writing fails.
    """
    style = style if isinstance(style, PlotStyle) else PlotStyle(style)
    if style is PlotStyle.CYLINDER:
        if domain_length is None:
            raise RenderError("Cylinder plots need the exchange length domain_length")
        arrays = [_cylinder_points(states) for states in records]
    else:
        arrays = [_scatter_points(record) for record in records]
    total = sum(len(a) for a in arrays)
    if total == 0:
        raise EmptyInputError("Nothing to plot: no orbit points given")

    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        for k, points in enumerate(arrays):
            ax.plot(
                points.real,
                points.imag,
                linestyle="none",
                marker="o",
                markersize=2 * marker_radius,
                markeredgewidth=0,
                gid=f"orbit-points-{k}",
            )
        if style is PlotStyle.CYLINDER:
            ax.set_xlim(0.0, domain_length)
            ax.set_ylim(0.0, TWO_PI)
            ax.set_xlabel("x")
            ax.set_ylabel("y")
        else:
            stacked = np.concatenate(arrays)
            xmin, xmax = float(stacked.real.min()), float(stacked.real.max())
            ymin, ymax = float(stacked.imag.min()), float(stacked.imag.max())
            pad = PLANE_MARGIN * max(xmax - xmin, ymax - ymin, 1e-6)
            if pwi is not None:
                _draw_atom_edges(ax, pwi)
            ax.set_xlim(xmin - pad, xmax + pad)
            ax.set_ylim(ymin - pad, ymax + pad)
            ax.set_aspect("equal")
        if title:
            ax.set_title(title)

        p = Path(out)
        p.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(p, format="svg")
    except OSError as exc:
        raise RenderError(f"Failed to write plot: {exc}") from exc
    finally:
        plt.close(fig)

    log.debug("rendered %d points in %d records to %s", total, len(arrays), out)
    return p
