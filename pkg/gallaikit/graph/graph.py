"""
GALLAIKIT Graph

不可变简单无向图；顶点为 0..n-1 的整数。
"""

from collections import deque
from typing import Iterable

import networkx as nx
from pydantic import BaseModel, Field, PrivateAttr, field_validator, model_validator

from gallaikit.exceptions import InvalidVertexError


class Graph(BaseModel):
    """简单无向图 G=(V,E)

    边以 (u, v)、u < v 的形式规范化并排序存储；邻接位掩码和邻居元组
    作为私有属性在构造时计算，供搜索内核使用。

    Attributes:
        n: 顶点数 |G|
        edges: 规范化边集合

    Example:
        >>> g = Graph(n=3, edges=((0, 1), (1, 2)))
        >>> g.m
        2
        >>> g.has_edge(2, 1)
        True
    """
    n: int = Field(ge=0, description="顶点数")
    edges: tuple[tuple[int, int], ...] = Field(default=(), description="规范化边集合")

    model_config = {"frozen": True}

    _adj: list[int] = PrivateAttr(default_factory=list)
    _nbrs: tuple[tuple[int, ...], ...] = PrivateAttr(default=())

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, v: Iterable[Iterable[int]]) -> tuple[tuple[int, int], ...]:
        pairs = []
        for edge in v:
            a, b = tuple(edge)
            pairs.append((min(a, b), max(a, b)))
        return tuple(sorted(pairs))

    @model_validator(mode="after")
    def _simple_and_in_range(self) -> "Graph":
        prev = None
        for u, v in self.edges:
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if (u, v) == prev:
                raise ValueError(f"duplicate edge ({u}, {v})")
            prev = (u, v)
        return self

    def model_post_init(self, __context: object) -> None:
        adj = [0] * self.n
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._adj = adj
        self._nbrs = tuple(tuple(sorted(x)) for x in nbrs)

    # ------------------------------------------------------------------
    # 基本查询
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        """边数 ‖G‖"""
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int) -> None:
        """验证顶点编号"""
        if not isinstance(v, int) or v < 0 or v >= self.n:
            raise InvalidVertexError(f"vertex {v} not in 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        if u < 0 or v < 0 or u >= self.n or v >= self.n:
            return False
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def min_degree(self) -> int:
        return min((len(x) for x in self._nbrs), default=0)

    def reachable_mask(self, start: int, allowed: int) -> int:
        """在 allowed 掩码内从 start 出发可达的顶点掩码（含 start）"""
        seen = 1 << start
        frontier = seen
        adj = self._adj
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.reachable_mask(0, self.full_mask) == self.full_mask

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        """删除 removed 后的连通分量（按最小顶点排序）"""
        allowed = self.full_mask
        for v in removed:
            allowed &= ~(1 << v)
        comps = []
        rest = allowed
        while rest:
            low = rest & -rest
            comp = self.reachable_mask(low.bit_length() - 1, allowed)
            comps.append(frozenset(_bits(comp)))
            rest &= ~comp
        return comps

    def shortest_path(self, x: int, y: int, allowed: int | None = None) -> list[int] | None:
        """BFS 最短路（在 allowed 掩码内，x、y 必须在其中）"""
        if allowed is None:
            allowed = self.full_mask
        parent = {x: x}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            if u == y:
                path = [y]
                while path[-1] != x:
                    path.append(parent[path[-1]])
                return path[::-1]
            for w in self._nbrs[u]:
                if w not in parent and allowed >> w & 1:
                    parent[w] = u
                    queue.append(w)
        return None

    # ------------------------------------------------------------------
    # 派生图
    # ------------------------------------------------------------------

    def without(self, removed: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """删除顶点集后的导出子图 G - X

        Returns:
            (子图, 新编号 → 原编号 的映射)
        """
        removed_set = set(removed)
        keep = tuple(v for v in range(self.n) if v not in removed_set)
        index = {v: i for i, v in enumerate(keep)}
        edges = tuple(
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        )
        return Graph(n=len(keep), edges=edges), keep

    def with_edge(self, u: int, v: int) -> "Graph":
        """添加一条边（已存在时原样返回）"""
        if self.has_edge(u, v):
            return self
        return Graph(n=self.n, edges=self.edges + ((u, v),))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    """顶点集 → 位掩码"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> list[int]:
    """位掩码 → 升序顶点列表"""
    return _bits(mask)
