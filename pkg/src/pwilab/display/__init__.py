"""Plot rendering."""

from pwilab.display.plot import PlotStyle, render_plot

__all__ = ["PlotStyle", "render_plot"]
