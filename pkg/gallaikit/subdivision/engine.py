"""
GALLAIKIT Subdivision Engine

任意连通模式 M 的最大 M-细分穷举。

流程：
1. 按度数降序为模式顶点回溯分配分支顶点（宿主度数 ≥ 模式度数）
2. 依次为每条模式边布线：DFS 简单路径，内部顶点避开已用顶点
3. 对总边数做迭代加深：从上界 T 开始逐级下降，首个非空层即为最大值

重边之间按路线字典序严格递增规范化；自环路线为闭合路，按
第二个顶点 < 倒数第二个顶点 去掉方向重复。
"""

from typing import Literal, Optional

import structlog

from gallaikit.exceptions import SearchBudgetExceededError, SearchException
from gallaikit.graph.graph import Graph
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.subdivision.models import Subdivision, SubdivisionFamily, assemble_family
from gallaikit.subdivision.paths import DEFAULT_NODE_BUDGET, longest_cycles, longest_paths

logger = structlog.get_logger(__name__)

Strategy = Literal["auto", "generic"]


def is_k2(pattern: MultigraphPattern) -> bool:
    return pattern.w == 2 and pattern.edges == ((0, 1),)


def is_c1(pattern: MultigraphPattern) -> bool:
    return pattern.w == 1 and pattern.edges == ((0, 0),)


class _GenericSearch:
    """固定目标边数 target 的细分搜索"""

    def __init__(self, graph: Graph, pattern: MultigraphPattern, node_budget: int) -> None:
        self.graph = graph
        self.pattern = pattern
        self.node_budget = node_budget
        self.adj = [graph.adjacency_mask(v) for v in range(graph.n)]
        self.full = graph.full_mask
        self.pdeg = [pattern.degree(u) for u in range(pattern.w)]
        self.order = sorted(range(pattern.w), key=lambda u: (-self.pdeg[u], u))

        self.parallel_prev: list[Optional[int]] = []
        for e, pair in enumerate(pattern.edges):
            prev = None
            for f in range(e):
                if pattern.edges[f] == pair:
                    prev = f
            self.parallel_prev.append(prev)

        self.branch = [-1] * pattern.w
        self.routes: list[Optional[tuple[int, ...]]] = [None] * pattern.m
        self.nodes = 0
        self.best_seen = 0
        self.target = 0
        self.found: list[Subdivision] = []

    def upper_bound(self) -> int:
        """‖Q‖ ≤ m + 内部顶点数；内部顶点度数 ≥ 2 且不是分支顶点"""
        graph, m = self.graph, self.pattern.m
        if self.pattern.w > graph.n:
            return -1
        deg2 = sum(1 for v in range(graph.n) if graph.degree(v) >= 2)
        return min(m + min(graph.n - self.pattern.w, deg2), graph.m)

    def search_level(self, target: int) -> list[Subdivision]:
        self.target = target
        self.found = []
        self._assign(0, 0)
        return self.found

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceededError(
                f"subdivision search for {self.pattern.name or 'pattern'} exceeded node budget",
                self.best_seen,
                self.nodes,
            )

    # ------------------------------------------------------------------
    # 分支顶点
    # ------------------------------------------------------------------

    def _assign(self, i: int, used: int) -> None:
        self._tick()
        if i == self.pattern.w:
            self._route(0, used, 0)
            return
        u = self.order[i]
        for v in range(self.graph.n):
            if used >> v & 1 or self.graph.degree(v) < self.pdeg[u]:
                continue
            self.branch[u] = v
            self._assign(i + 1, used | (1 << v))
        self.branch[u] = -1

    # ------------------------------------------------------------------
    # 布线
    # ------------------------------------------------------------------

    def _route(self, e: int, used: int, interior: int) -> None:
        m = self.pattern.m
        if e == m:
            self._record(interior)
            return
        free = self.full & ~used
        if m + interior + free.bit_count() < self.target:
            return
        a, b = self.pattern.edges[e]
        s = self.branch[a]
        if a == b:
            self._walk_loop(e, [s], used, interior)
        else:
            self._walk(e, [s], self.branch[b], used, interior)

    def _bound(self, e: int, x: int, used: int, interior: int) -> int:
        free = self.full & ~used
        if e == self.pattern.m - 1:
            free = self.graph.reachable_mask(x, free | (1 << x)) & free
        return self.pattern.m + interior + free.bit_count()

    def _canonical(self, e: int, route: tuple[int, ...]) -> bool:
        prev = self.parallel_prev[e]
        return prev is None or route > self.routes[prev]

    def _close(self, e: int, route: tuple[int, ...], used: int, interior: int) -> None:
        if not self._canonical(e, route):
            return
        self.routes[e] = route
        self._route(e + 1, used, interior)
        self.routes[e] = None

    def _walk(self, e: int, path: list[int], t: int, used: int, interior: int) -> None:
        self._tick()
        x = path[-1]
        if self._bound(e, x, used, interior) < self.target:
            return
        if self.adj[x] >> t & 1:
            self._close(e, tuple(path) + (t,), used, interior)
        options = self.adj[x] & self.full & ~used
        while options:
            low = options & -options
            path.append(low.bit_length() - 1)
            self._walk(e, path, t, used | low, interior + 1)
            path.pop()
            options ^= low

    def _walk_loop(self, e: int, path: list[int], used: int, interior: int) -> None:
        self._tick()
        s, x = path[0], path[-1]
        if self._bound(e, x, used, interior) < self.target:
            return
        if len(path) >= 3 and self.adj[x] >> s & 1 and path[1] < x:
            self._close(e, tuple(path) + (s,), used, interior)
        options = self.adj[x] & self.full & ~used
        while options:
            low = options & -options
            path.append(low.bit_length() - 1)
            self._walk_loop(e, path, used | low, interior + 1)
            path.pop()
            options ^= low

    def _record(self, interior: int) -> None:
        total = self.pattern.m + interior
        self.best_seen = max(self.best_seen, total)
        if total != self.target:
            return
        self.found.append(
            Subdivision(
                branch_map=tuple(self.branch),
                edge_paths=tuple(r for r in self.routes if r is not None),
            )
        )


def enumerate_maximum(
    graph: Graph,
    pattern: MultigraphPattern,
    limit: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    strategy: Strategy = "auto",
    jobs: int = 1,
) -> SubdivisionFamily:
    """穷举 G 中全部最大 M-细分

    Args:
        graph: 非空宿主图
        pattern: 连通多重图模式
        limit: members 截断上限
        node_budget: 搜索节点预算
        strategy: auto（K2/C1 走专用搜索）或 generic（始终走通用搜索）
        jobs: K2 专用搜索的并行进程数

    Returns:
        SubdivisionFamily；不存在 M-细分时为 status="empty"（C1 为 "acyclic"）

    Raises:
        SearchException: 宿主图为空
        SearchBudgetExceededError: 超出节点预算，附带已见最好下界
    """
    if graph.n == 0:
        raise SearchException("enumerate_maximum needs a nonempty host graph")

    if strategy == "auto":
        if is_k2(pattern):
            family = longest_paths(graph, limit=limit, node_budget=node_budget, jobs=jobs)
            return family.model_copy(update={"pattern": pattern})
        if is_c1(pattern):
            family = longest_cycles(graph, limit=limit, node_budget=node_budget)
            return family.model_copy(update={"pattern": pattern})

    search = _GenericSearch(graph, pattern, node_budget)
    ub = search.upper_bound()
    for target in range(ub, pattern.m - 1, -1):
        found = search.search_level(target)
        logger.debug(
            "subdivision_level_searched",
            pattern=pattern.name,
            target=target,
            found=len(found),
            nodes=search.nodes,
        )
        if found:
            family = assemble_family(pattern, found, limit, search.nodes)
            logger.info(
                "subdivision_search_done",
                pattern=pattern.name,
                edge_size=family.edge_size,
                mu=family.mu,
                members=family.member_count,
                nodes=search.nodes,
            )
            return family

    empty_status: Literal["empty", "acyclic"] = "acyclic" if is_c1(pattern) else "empty"
    logger.info("subdivision_search_empty", pattern=pattern.name, nodes=search.nodes)
    return assemble_family(pattern, [], limit, search.nodes, empty_status=empty_status)
