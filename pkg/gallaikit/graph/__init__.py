"""
GALLAIKIT Graph

图、多重图模式、路径/圈代数与文本 I/O
"""

from gallaikit.graph.graph import Graph
from gallaikit.graph.paths import (
    CycleSeq,
    PathSeq,
    complement_arc,
    concat_paths,
    cycle_distance,
    distance,
    longer_arc,
    make_cycle,
    make_path,
    path_segment,
)
from gallaikit.graph.pattern import MultigraphPattern, cut_edges

__all__ = [
    "Graph",
    "MultigraphPattern",
    "PathSeq",
    "CycleSeq",
    "make_path",
    "make_cycle",
    "distance",
    "cycle_distance",
    "longer_arc",
    "concat_paths",
    "path_segment",
    "complement_arc",
    "cut_edges",
]
