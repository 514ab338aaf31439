"""Figure rendering for floqssh sweep outputs.

Figures are pure views of the CSV tables written by the simulator: no
physics is recomputed here, and identical inputs render byte-identical
images.
"""

__version__ = "0.1.0"

from .io import SchemaError, read_table
from .render import FigureSpec, RenderResult, render

__all__ = ["SchemaError", "read_table", "FigureSpec", "RenderResult", "render", "__version__"]
