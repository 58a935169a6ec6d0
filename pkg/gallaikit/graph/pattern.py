"""
GALLAIKIT Multigraph Pattern

模式多重图 M=(W,F)：允许自环与重边，每条边有稳定编号 0..m-1。
"""

from collections import Counter

import networkx as nx
from pydantic import BaseModel, Field, field_validator, model_validator

from gallaikit.exceptions import DisconnectedPatternError


class MultigraphPattern(BaseModel):
    """连通多重图模式

    Attributes:
        w: 顶点数 |W|
        edges: 边序列（下标即稳定编号），自环 (u, u) 与重复对允许
        name: 可选名称（K2、C1 等）

    Example:
        >>> k2 = MultigraphPattern(w=2, edges=((0, 1),), name="K2")
        >>> k2.m
        1
    """
    w: int = Field(ge=1, description="顶点数")
    edges: tuple[tuple[int, int], ...] = Field(min_length=1, description="边序列")
    name: str = Field(default="", description="名称")

    model_config = {"frozen": True}

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, v) -> tuple[tuple[int, int], ...]:
        out = []
        for edge in v:
            a, b = tuple(edge)
            out.append((min(a, b), max(a, b)))
        return tuple(out)

    @model_validator(mode="after")
    def _in_range_and_connected(self) -> "MultigraphPattern":
        for u, v in self.edges:
            if u < 0 or v >= self.w:
                raise ValueError(f"pattern edge ({u}, {v}) out of range for w={self.w}")
        if not _connected(self.w, self.edges):
            raise ValueError("pattern multigraph must be connected")
        return self

    @property
    def m(self) -> int:
        """‖M‖"""
        return len(self.edges)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def degree(self, u: int) -> int:
        """度数（自环计 2）"""
        return sum((a == u) + (b == u) for a, b in self.edges)

    def incident_edges(self, u: int) -> tuple[int, ...]:
        """与 u 关联的边编号（升序）"""
        return tuple(e for e, (a, b) in enumerate(self.edges) if u in (a, b))

    def multiplicity(self, e: int) -> int:
        return Counter(self.edges)[self.edges[e]]

    def is_star(self) -> bool:
        """K_{1,k}：一个中心，k ≥ 1 条到不同叶子的边，无自环无重边"""
        if any(self.is_loop(e) for e in range(self.m)) or len(set(self.edges)) != self.m:
            return False
        if self.w != self.m + 1:
            return False
        return any(self.degree(c) == self.m for c in range(self.w))

    def leaf_edges(self) -> frozenset[int]:
        """与叶子（度 1 顶点）关联的边"""
        return frozenset(
            e for e, (a, b) in enumerate(self.edges)
            if a != b and (self.degree(a) == 1 or self.degree(b) == 1)
        )

    def side_of_cut(self, e: int, endpoint: int) -> frozenset[int]:
        """删除割边 e 后 endpoint 所在分量的边编号集合（不含 e）"""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.w))
        for f, (a, b) in enumerate(self.edges):
            if f != e:
                g.add_edge(a, b, key=f)
        comp = nx.node_connected_component(g, endpoint)
        return frozenset(
            f for f, (a, b) in enumerate(self.edges)
            if f != e and a in comp
        )


def _connected(w: int, edges: tuple[tuple[int, int], ...]) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(w))
    g.add_edges_from(edges)
    return nx.is_connected(g)


def cut_edges(pattern: MultigraphPattern) -> frozenset[int]:
    """M 的割边（桥）编号集合

    自环与重边永不为桥；其余边为桥当且仅当其端点对在底图中是桥。

    Raises:
        DisconnectedPatternError: M 不连通（仅在绕过校验构造时可能）
    """
    if not _connected(pattern.w, pattern.edges):
        raise DisconnectedPatternError("cut_edges requires a connected pattern")
    counts = Counter(pattern.edges)
    simple = nx.Graph()
    simple.add_nodes_from(range(pattern.w))
    simple.add_edges_from((a, b) for a, b in counts if a != b)
    bridges = {(min(a, b), max(a, b)) for a, b in nx.bridges(simple)}
    return frozenset(
        e for e, pair in enumerate(pattern.edges)
        if pair[0] != pair[1] and counts[pair] == 1 and pair in bridges
    )
