"""
GALLAIKIT Menger

连接器、分隔集与点连通度
"""

from gallaikit.menger.flow import (
    Connector,
    Separator,
    connectivity,
    local_connectivity,
    max_connector,
    min_separator,
    separates,
    validate_connector,
)

__all__ = [
    "Connector",
    "Separator",
    "max_connector",
    "min_separator",
    "connectivity",
    "local_connectivity",
    "separates",
    "validate_connector",
]
