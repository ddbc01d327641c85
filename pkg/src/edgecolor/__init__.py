"""(Delta+1) edge coloring toolkit.

A compiled kernel (`edgecolor._core_cy`, Cython) is preferred when it built;
otherwise the pure-Python twin is used.  Set EDGECOLOR_BACKEND=py|c to force
a backend (forcing `c` raises if the extension is unavailable).
"""

import os as _os

from . import _core_py

_forced = _os.environ.get("EDGECOLOR_BACKEND", "").strip().lower()
if _forced in ("py", "python", "pure"):
    _core = _core_py
elif _forced in ("c", "cy", "cython", "compiled"):
    from . import _core_cy as _core
else:
    try:
        from . import _core_cy as _core
    except ImportError:
        _core = _core_py

COMPILED = _core is not _core_py


def core_backend() -> str:
    """Name of the kernel backend in use ('compiled' or 'python')."""
    return "compiled" if COMPILED else "python"


from .graph import Graph, GraphError, build_graph, read_graph, write_graph
from .errors import (ColoringError, InternalInvariantError, PlanRejectedError,
                     StalePathError)
from .coloring import PartialColoring, new_coloring, read_coloring, write_coloring
from .altpath import AltPath, flip_path, path_length_census, trace_path
from .vizing import Fan, build_fan, color_all_vizing, extend_edge_vizing, rotate_fan
from .euler import Partition, euler_partition, slack_color
from .baseline import color_divide_conquer, color_random_sampling
from .fast import FastConfig, color_fast, split_and_sample
from .metrics import RunMetrics
from .gen import generate

__all__ = [
    "Graph", "GraphError", "build_graph", "read_graph", "write_graph",
    "ColoringError", "StalePathError", "InternalInvariantError",
    "PlanRejectedError",
    "PartialColoring", "new_coloring", "read_coloring", "write_coloring",
    "AltPath", "trace_path", "flip_path", "path_length_census",
    "Fan", "build_fan", "rotate_fan", "extend_edge_vizing", "color_all_vizing",
    "Partition", "euler_partition", "slack_color",
    "color_random_sampling", "color_divide_conquer",
    "FastConfig", "split_and_sample", "color_fast",
    "RunMetrics", "generate",
    "COMPILED", "core_backend",
]
