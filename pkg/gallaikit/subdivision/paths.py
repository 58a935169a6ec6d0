"""
GALLAIKIT Longest Paths / Cycles

K2 与 C1 的专用精确搜索：位掩码 DFS + 可达性上界剪枝。

- 路径按 起点 < 终点 去掉方向重复
- 圈从其最小顶点 s 出发、只走 > s 的顶点，按 第二个顶点 < 最后一个顶点 去掉方向重复
"""

import multiprocessing
from typing import Optional

import structlog

from gallaikit.exceptions import SearchBudgetExceededError, SearchException
from gallaikit.graph.graph import Graph
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.subdivision.models import Subdivision, SubdivisionFamily, assemble_family

logger = structlog.get_logger(__name__)

DEFAULT_NODE_BUDGET = 100_000_000

_K2 = MultigraphPattern(w=2, edges=((0, 1),), name="K2")
_C1 = MultigraphPattern(w=1, edges=((0, 0),), name="C1")


class _BudgetExhausted(Exception):
    """工作进程内部信号，不跨进程传播"""


class _PathSearch:
    """从给定起点集合出发的最长路 DFS"""

    def __init__(self, graph: Graph, node_budget: int, best: int = 0) -> None:
        self.graph = graph
        self.adj = [graph.adjacency_mask(v) for v in range(graph.n)]
        self.node_budget = node_budget
        self.best = best
        self.found: dict[tuple[int, ...], None] = {}
        self.nodes = 0

    def run(self, starts: list[int]) -> None:
        full = self.graph.full_mask
        for s in starts:
            if not self.adj[s]:
                continue
            self._extend([s], full & ~(1 << s))

    def _extend(self, path: list[int], free: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExhausted()

        x = path[-1]
        options = self.adj[x] & free
        if not options:
            length = len(path) - 1
            if length >= self.best and path[0] < x:
                if length > self.best:
                    self.best = length
                    self.found.clear()
                self.found[tuple(path)] = None
            return

        reach = self.graph.reachable_mask(x, free | (1 << x)) & free
        if len(path) - 1 + reach.bit_count() < self.best:
            return

        while options:
            low = options & -options
            y = low.bit_length() - 1
            path.append(y)
            self._extend(path, free & ~low)
            path.pop()
            options ^= low


def _search_starts(
    n: int,
    edges: tuple[tuple[int, int], ...],
    starts: list[int],
    node_budget: int,
) -> tuple[bool, int, list[tuple[int, ...]], int]:
    """工作进程入口：返回 (是否耗尽预算, 最优长度, 路径, 节点数)"""
    search = _PathSearch(Graph(n=n, edges=edges), node_budget)
    try:
        search.run(starts)
    except _BudgetExhausted:
        return True, search.best, [], search.nodes
    return False, search.best, list(search.found), search.nodes


def _path_member(path: tuple[int, ...]) -> Subdivision:
    return Subdivision(branch_map=(path[0], path[-1]), edge_paths=(path,))


def longest_paths(
    graph: Graph,
    limit: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
) -> SubdivisionFamily:
    """全部最长路 L(K2, G)

    Args:
        graph: 非空宿主图
        limit: members 截断上限（vertex_sets 不截断）
        node_budget: 搜索节点预算
        jobs: 并行进程数（按起点轮转分片，结果按规范顺序合并）

    Raises:
        SearchException: 宿主图为空
        SearchBudgetExceededError: 超出节点预算
    """
    if graph.n == 0:
        raise SearchException("longest_paths needs a nonempty host graph")

    if graph.m == 0:
        trivial = [Subdivision(branch_map=(v, v), edge_paths=((v,),)) for v in range(graph.n)]
        return assemble_family(_K2, trivial, limit, nodes=graph.n)

    starts = list(range(graph.n))
    if jobs > 1:
        chunks = [starts[i::jobs] for i in range(jobs)]
        share = max(1, node_budget // jobs)
        with multiprocessing.Pool(processes=jobs) as pool:
            results = pool.starmap(
                _search_starts,
                [(graph.n, graph.edges, chunk, share) for chunk in chunks],
            )
        nodes = sum(r[3] for r in results)
        best = max(r[1] for r in results)
        if any(r[0] for r in results):
            raise SearchBudgetExceededError("longest path search exceeded node budget", best, nodes)
        paths = [p for r in results if r[1] == best for p in r[2]]
    else:
        search = _PathSearch(graph, node_budget)
        try:
            search.run(starts)
        except _BudgetExhausted:
            raise SearchBudgetExceededError(
                "longest path search exceeded node budget", search.best, search.nodes
            ) from None
        nodes = search.nodes
        best = search.best
        paths = list(search.found)

    family = assemble_family(_K2, [_path_member(p) for p in paths], limit, nodes)
    logger.info(
        "longest_paths_done",
        n=graph.n,
        edge_size=best,
        members=family.member_count,
        nodes=nodes,
        jobs=jobs,
    )
    return family


class _CycleSearch:
    """最长圈 DFS，圈以其最小顶点为起点"""

    def __init__(self, graph: Graph, node_budget: int) -> None:
        self.graph = graph
        self.adj = [graph.adjacency_mask(v) for v in range(graph.n)]
        self.node_budget = node_budget
        self.best = 0
        self.found: dict[tuple[int, ...], None] = {}
        self.nodes = 0

    def run(self) -> None:
        full = self.graph.full_mask
        for s in range(self.graph.n):
            allowed = full & ~((1 << (s + 1)) - 1)
            reach = self.graph.reachable_mask(s, allowed | (1 << s)) & allowed
            if 1 + reach.bit_count() < max(self.best, 3):
                continue
            self._extend([s], allowed)

    def _extend(self, path: list[int], free: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceededError(
                "longest cycle search exceeded node budget", self.best, self.nodes
            )

        s, x = path[0], path[-1]
        if len(path) >= 3 and self.adj[x] >> s & 1 and path[1] < x:
            length = len(path)
            if length >= self.best:
                if length > self.best:
                    self.best = length
                    self.found.clear()
                self.found[tuple(path)] = None

        options = self.adj[x] & free
        if not options:
            return
        reach = self.graph.reachable_mask(x, free | (1 << x)) & free
        if len(path) + reach.bit_count() < self.best:
            return

        while options:
            low = options & -options
            y = low.bit_length() - 1
            path.append(y)
            self._extend(path, free & ~low)
            path.pop()
            options ^= low


def longest_cycles(
    graph: Graph,
    limit: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SubdivisionFamily:
    """全部最长圈 L(C1, G)；无圈时返回 status="acyclic" 的空族

    Raises:
        SearchException: 宿主图为空
        SearchBudgetExceededError: 超出节点预算
    """
    if graph.n == 0:
        raise SearchException("longest_cycles needs a nonempty host graph")

    search = _CycleSearch(graph, node_budget)
    search.run()
    members = [
        Subdivision(branch_map=(c[0],), edge_paths=(c + (c[0],),))
        for c in search.found
    ]
    family = assemble_family(_C1, members, limit, search.nodes, empty_status="acyclic")
    logger.info(
        "longest_cycles_done",
        n=graph.n,
        edge_size=family.edge_size,
        members=family.member_count,
        nodes=search.nodes,
        status=family.status,
    )
    return family
