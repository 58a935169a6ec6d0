"""
GALLAIKIT Menger

A,B-连接器、最小 A,B-分隔集与点连通度。

内部归约：拆点单位容量最大流
- 每个顶点 v 拆为 (v, "in") → (v, "out")，容量 1
- 宿主边 uv 变为 (u, "out") → (v, "in") 与 (v, "out") → (u, "in")，容量无限
- 源点连向 A 的 in 端，B 的 out 端连向汇点
"""

from typing import Iterable

import networkx as nx
import structlog
from pydantic import BaseModel, Field

from gallaikit.exceptions import (
    DualityViolationError,
    EmptyTerminalSetError,
    InvalidConnectorError,
)
from gallaikit.graph.graph import Graph, mask_of
from gallaikit.graph.paths import PathSeq

logger = structlog.get_logger(__name__)

_SOURCE = "source"
_SINK = "sink"


class Connector(BaseModel):
    """A,B-连接器：两两不交的 A,B-路集合

    Attributes:
        paths: 按首顶点排序的路径
    """
    paths: tuple[PathSeq, ...] = Field(default=(), description="不交 A,B-路")

    model_config = {"frozen": True}

    @property
    def size(self) -> int:
        return len(self.paths)

    def vertex_set(self) -> frozenset[int]:
        out: set[int] = set()
        for p in self.paths:
            out.update(p.vertices)
        return frozenset(out)

    def path_starting_at(self, v: int) -> PathSeq | None:
        for p in self.paths:
            if p.first == v:
                return p
        return None


class Separator(BaseModel):
    """A,B-分隔集

    Attributes:
        vertices: 升序顶点
    """
    vertices: tuple[int, ...] = Field(default=(), description="分隔顶点")

    model_config = {"frozen": True}

    @property
    def size(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def _check_terminals(graph: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    a_set, b_set = frozenset(a), frozenset(b)
    if not a_set or not b_set:
        raise EmptyTerminalSetError("A and B must both be nonempty")
    for v in a_set | b_set:
        graph.check_vertex(v)
    return a_set, b_set


def _flow_network(
    graph: Graph,
    a: frozenset[int],
    b: frozenset[int],
    removed: frozenset[int] = frozenset(),
) -> nx.DiGraph:
    net = nx.DiGraph()
    net.add_node(_SOURCE)
    net.add_node(_SINK)
    for v in range(graph.n):
        if v not in removed:
            net.add_edge((v, "in"), (v, "out"), capacity=1)
    for u, v in graph.edges:
        if u in removed or v in removed:
            continue
        net.add_edge((u, "out"), (v, "in"))
        net.add_edge((v, "out"), (u, "in"))
    for v in a - removed:
        net.add_edge(_SOURCE, (v, "in"))
    for v in b - removed:
        net.add_edge((v, "out"), _SINK)
    return net


def _flow_value(
    graph: Graph,
    a: frozenset[int],
    b: frozenset[int],
    removed: frozenset[int] = frozenset(),
) -> int:
    if not (a - removed) or not (b - removed):
        return 0
    value, _ = nx.maximum_flow(_flow_network(graph, a, b, removed), _SOURCE, _SINK)
    return int(value)


def _trim(walk: list[int], a: frozenset[int], b: frozenset[int]) -> tuple[int, ...]:
    """截成 A,B-路：从最后一个 A 顶点到其后第一个 B 顶点"""
    i = max(k for k, v in enumerate(walk) if v in a)
    j = next(k for k in range(i, len(walk)) if walk[k] in b)
    return tuple(walk[i:j + 1])


def max_connector(
    graph: Graph,
    a: Iterable[int],
    b: Iterable[int],
    check_duality: bool = False,
) -> Connector:
    """最大 A,B-连接器

    Args:
        graph: 宿主图
        a, b: 非空顶点集（可相交，公共顶点构成单顶点路径）
        check_duality: 同时计算最小分隔集并断言两者大小相等

    Raises:
        EmptyTerminalSetError: A 或 B 为空
        DualityViolationError: check_duality 时大小不一致

    Example:
        >>> from gallaikit.constructions.catalog import complete_bipartite
        >>> max_connector(complete_bipartite(3, 3), {0, 1, 2}, {3, 4, 5}).size
        3
    """
    a_set, b_set = _check_terminals(graph, a, b)
    net = _flow_network(graph, a_set, b_set)
    value, flow = nx.maximum_flow(net, _SOURCE, _SINK)

    paths = []
    for start in sorted(a_set):
        if flow[_SOURCE].get((start, "in"), 0) <= 0:
            continue
        walk = [start]
        node = (start, "out")
        while True:
            out = flow[node]
            if out.get(_SINK, 0) > 0:
                out[_SINK] -= 1
                break
            nxt = next(w for w, f in sorted(out.items(), key=lambda kv: str(kv[0])) if f > 0)
            out[nxt] -= 1
            walk.append(nxt[0])
            node = (nxt[0], "out")
        paths.append(PathSeq(vertices=_trim(walk, a_set, b_set)))

    connector = Connector(paths=tuple(sorted(paths, key=lambda p: p.vertices)))
    if connector.size != int(value):
        raise DualityViolationError(
            f"flow value {value} but {connector.size} paths were extracted"
        )
    if check_duality:
        sep = min_separator(graph, a_set, b_set)
        if sep.size != connector.size:
            raise DualityViolationError(
                f"connector size {connector.size} differs from separator size {sep.size}"
            )
        logger.debug("menger_duality_checked", size=connector.size)
    return connector


def min_separator(
    graph: Graph,
    a: Iterable[int],
    b: Iterable[int],
    check_duality: bool = False,
) -> Separator:
    """字典序最小的最小 A,B-分隔集

    逐个选择最小的顶点 v，使删除 v 后连接器规模恰好减 1。

    Raises:
        EmptyTerminalSetError: A 或 B 为空
        DualityViolationError: check_duality 时分隔失败或大小不一致

    Example:
        >>> from gallaikit.constructions.catalog import path_graph
        >>> min_separator(path_graph(3), {0}, {2}).vertices
        (1,)
    """
    a_set, b_set = _check_terminals(graph, a, b)
    k = _flow_value(graph, a_set, b_set)

    chosen: list[int] = []
    removed: frozenset[int] = frozenset()
    remaining = k
    for v in range(graph.n):
        if remaining == 0:
            break
        trial = removed | {v}
        if _flow_value(graph, a_set, b_set, trial) == remaining - 1:
            chosen.append(v)
            removed = trial
            remaining -= 1

    sep = Separator(vertices=tuple(chosen))
    if check_duality and (sep.size != k or not separates(graph, sep.vertices, a_set, b_set)):
        raise DualityViolationError(
            f"separator {list(sep.vertices)} does not certify connector size {k}"
        )
    return sep


def separates(graph: Graph, s: Iterable[int], a: Iterable[int], b: Iterable[int]) -> bool:
    """S 是否与每条 A,B-路相交（删除并检查可达性）"""
    s_set = frozenset(s)
    a_rest = frozenset(a) - s_set
    b_mask = mask_of(frozenset(b) - s_set)
    allowed = graph.full_mask & ~mask_of(s_set)
    for v in a_rest:
        if graph.reachable_mask(v, allowed) & b_mask:
            return False
    return True


def validate_connector(
    graph: Graph,
    paths: Iterable[PathSeq],
    a: Iterable[int],
    b: Iterable[int],
) -> Connector:
    """检查给定路径集合是否为 A,B-连接器

    Raises:
        InvalidConnectorError: 缺边、与 A/B 的交不在端点、或路径相交
    """
    a_set, b_set = frozenset(a), frozenset(b)
    seen: set[int] = set()
    checked = []
    for p in paths:
        for x, y in zip(p.vertices, p.vertices[1:]):
            if not graph.has_edge(x, y):
                raise InvalidConnectorError(f"{x} and {y} are not adjacent")
        if p.vertex_set() & a_set != {p.first} or p.vertex_set() & b_set != {p.last}:
            raise InvalidConnectorError(
                f"path {list(p.vertices)} must meet A only at its start and B only at its end"
            )
        if seen & p.vertex_set():
            raise InvalidConnectorError(f"path {list(p.vertices)} meets another path")
        seen |= p.vertex_set()
        checked.append(p)
    return Connector(paths=tuple(sorted(checked, key=lambda p: p.vertices)))


def local_connectivity(graph: Graph, u: int, v: int) -> int:
    """非相邻顶点 u, v 之间内部不交 u,v-路的最大条数"""
    graph.check_vertex(u)
    graph.check_vertex(v)
    nu, nv = frozenset(graph.neighbors(u)), frozenset(graph.neighbors(v))
    if not nu or not nv:
        return 0
    return _flow_value(graph, nu, nv, frozenset({u, v}))


def connectivity(graph: Graph) -> int:
    """点连通度 κ(G)

    κ(K_n) = n-1；不连通或 |G| = 1 时为 0；其余情况为非相邻顶点对
    局部连通度的最小值。

    Example:
        >>> from gallaikit.constructions.catalog import complete_graph
        >>> connectivity(complete_graph(5))
        4
    """
    n = graph.n
    if n <= 1 or not graph.is_connected():
        return 0
    if graph.m == n * (n - 1) // 2:
        return n - 1

    best = graph.min_degree()
    for u in range(n):
        for v in range(u + 1, n):
            if graph.has_edge(u, v):
                continue
            best = min(best, local_connectivity(graph, u, v))
            if best <= 1:
                return best
    return best
