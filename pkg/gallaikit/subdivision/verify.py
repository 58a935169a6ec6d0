"""
GALLAIKIT Subdivision Verifier

逐条检查 M-细分的结构不变量，返回第一个被违反的不变量名称。
"""

from typing import Optional

from pydantic import BaseModel, Field

from gallaikit.graph.graph import Graph
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.subdivision.models import Subdivision


class SubdivisionCheck(BaseModel):
    """验证结论

    Attributes:
        ok: 是否通过
        violation: 第一个被违反的不变量（通过时为 None）
        detail: 补充说明
    """
    ok: bool = Field(description="是否通过")
    violation: Optional[str] = Field(default=None, description="违反的不变量")
    detail: str = Field(default="", description="补充说明")

    model_config = {"frozen": True}

    def __bool__(self) -> bool:
        return self.ok


def _fail(violation: str, detail: str) -> SubdivisionCheck:
    return SubdivisionCheck(ok=False, violation=violation, detail=detail)


def _is_trivial_path(graph: Graph, pattern: MultigraphPattern, sub: Subdivision) -> bool:
    # 无边宿主图中唯一的 K2-细分是单顶点路径
    return (
        graph.m == 0
        and pattern.w == 2
        and pattern.edges == ((0, 1),)
        and len(sub.branch_map) == 2
        and sub.branch_map[0] == sub.branch_map[1]
        and sub.edge_paths == ((sub.branch_map[0],),)
        and 0 <= sub.branch_map[0] < graph.n
    )


def is_subdivision(graph: Graph, pattern: MultigraphPattern, sub: Subdivision) -> SubdivisionCheck:
    """检查 sub 是否为 graph 中的 M-细分

    依次检查：shape、branch injectivity、endpoint match、edge count、
    route simplicity、host adjacency、interior disjointness、edge distinctness。

    Example:
        >>> from gallaikit.constructions.catalog import complete_graph, c1
        >>> s = Subdivision(branch_map=(0,), edge_paths=((0, 1, 2, 0),))
        >>> is_subdivision(complete_graph(4), c1(), s).ok
        True
    """
    if len(sub.branch_map) != pattern.w or len(sub.edge_paths) != pattern.m:
        return _fail(
            "shape",
            f"expected {pattern.w} branch vertices and {pattern.m} routes, "
            f"got {len(sub.branch_map)} and {len(sub.edge_paths)}",
        )

    if _is_trivial_path(graph, pattern, sub):
        return SubdivisionCheck(ok=True, detail="trivial one-vertex path")

    for v in sub.branch_map:
        if not 0 <= v < graph.n:
            return _fail("branch injectivity", f"branch vertex {v} not in host graph")
    if len(set(sub.branch_map)) != len(sub.branch_map):
        return _fail("branch injectivity", f"branch map {list(sub.branch_map)} repeats a vertex")

    branch_set = set(sub.branch_map)
    interiors: dict[int, int] = {}
    used_edges: set[tuple[int, int]] = set()

    for e, (u, v) in enumerate(pattern.edges):
        route = sub.edge_paths[e]
        if not route or route[0] != sub.branch_map[u] or route[-1] != sub.branch_map[v]:
            return _fail("endpoint match", f"route {e} does not run between its branch images")

        loop = u == v
        if len(route) - 1 < (3 if loop else 1):
            return _fail("edge count", f"route {e} has {len(route) - 1} edges")

        inner = route[1:-1]
        if len(set(inner)) != len(inner) or (not loop and route[0] in inner) or (
            not loop and route[-1] in inner
        ) or (loop and route[0] in inner):
            return _fail("route simplicity", f"route {e} repeats a vertex")

        for a, b in zip(route, route[1:]):
            if not graph.has_edge(a, b):
                return _fail("host adjacency", f"route {e} uses non-edge ({a}, {b})")

        for x in inner:
            if x in branch_set:
                return _fail("interior disjointness", f"route {e} passes through branch vertex {x}")
            if x in interiors:
                return _fail(
                    "interior disjointness",
                    f"routes {interiors[x]} and {e} share interior vertex {x}",
                )
            interiors[x] = e

        for a, b in zip(route, route[1:]):
            key = (min(a, b), max(a, b))
            if key in used_edges:
                return _fail("edge distinctness", f"host edge {key} used twice")
            used_edges.add(key)

    return SubdivisionCheck(ok=True)
