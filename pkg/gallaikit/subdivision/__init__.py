"""
GALLAIKIT Subdivision Engine

最大 M-细分的建模、验证与穷举
"""

from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.subdivision.models import Subdivision, SubdivisionFamily
from gallaikit.subdivision.paths import longest_cycles, longest_paths
from gallaikit.subdivision.verify import SubdivisionCheck, is_subdivision

__all__ = [
    "Subdivision",
    "SubdivisionFamily",
    "SubdivisionCheck",
    "is_subdivision",
    "enumerate_maximum",
    "longest_paths",
    "longest_cycles",
]
