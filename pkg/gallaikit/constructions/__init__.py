"""
GALLAIKIT Constructions

图目录与生成器
"""

from gallaikit.constructions.catalog import (
    CatalogEntry,
    catalog_entries,
    get_graph,
    get_pattern,
    modified_petersen,
    petersen,
)
from gallaikit.constructions.generators import (
    all_connected_graphs,
    all_trees,
    canonical_form,
    random_connected,
)

__all__ = [
    "CatalogEntry",
    "catalog_entries",
    "get_graph",
    "get_pattern",
    "petersen",
    "modified_petersen",
    "all_connected_graphs",
    "all_trees",
    "canonical_form",
    "random_connected",
]
