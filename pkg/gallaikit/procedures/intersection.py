"""
GALLAIKIT Intersection Multigraph

两个不交的最大细分 Q、R 之间，最大 Q,R-连接器诱导的二部多重图：
每条连接器路径连接其两端所在的模式边 (e, e′)。

最大性给出三条性质：
- 多重图是简单的
- 对割边 e：(e, e) 不出现；e′ ≠ e 时 (e, e′) 与 (e′, e) 至多出现一个
- M 为星时，两条与叶子关联的边之间没有边

因此边数不超过 m² - c·m + C(c, 2)（c 为割边数），这也是 L(M,G)
不两两相交时 κ(G) 的上界。
"""

from typing import Optional

import structlog
from pydantic import BaseModel, Field

from gallaikit.exceptions import InvalidConnectorError, ProcedureInputError
from gallaikit.graph.graph import Graph
from gallaikit.graph.paths import PathSeq
from gallaikit.graph.pattern import MultigraphPattern, cut_edges
from gallaikit.menger.flow import Connector, Separator, connectivity, max_connector, min_separator
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.subdivision.models import Subdivision
from gallaikit.subdivision.paths import DEFAULT_NODE_BUDGET
from gallaikit.transversal.tau import is_pairwise_intersecting
from gallaikit.utils.exact import binomial2

logger = structlog.get_logger(__name__)


class IntersectionMultigraph(BaseModel):
    """Q,R 之间的二部交叉多重图

    Attributes:
        pattern: 模式 M
        edges: 每条连接器路径一条边 (Q 侧模式边, R 侧模式边)，按连接器顺序
        cut: M 的割边编号
    """
    pattern: MultigraphPattern
    edges: tuple[tuple[int, int], ...] = Field(default=())
    cut: frozenset[int] = Field(default=frozenset())

    model_config = {"frozen": True}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def cut_edge_violations(self) -> list[tuple[int, int]]:
        """违反割边规则的边对"""
        present = set(self.edges)
        out = set()
        for e in self.cut:
            if (e, e) in present:
                out.add((e, e))
            for f in range(self.pattern.m):
                if f != e and (e, f) in present and (f, e) in present:
                    out.add((min(e, f), max(e, f)))
        return sorted(out)

    def leaf_violations(self) -> list[tuple[int, int]]:
        """M 为星时连接两条叶边的边（非星时为空）"""
        if not self.pattern.is_star():
            return []
        leaves = self.pattern.leaf_edges()
        return sorted({(e, f) for e, f in self.edges if e in leaves and f in leaves})


def _orient(path: PathSeq, q_set: frozenset[int], r_set: frozenset[int]) -> PathSeq:
    if path.first in q_set and path.last in r_set:
        return path
    if path.first in r_set and path.last in q_set:
        return path.reversed()
    raise InvalidConnectorError(f"path {list(path.vertices)} does not join Q to R")


def intersection_multigraph(
    q: Subdivision,
    r: Subdivision,
    connector: Connector,
    pattern: MultigraphPattern,
    graph: Optional[Graph] = None,
) -> IntersectionMultigraph:
    """构造交叉多重图

    分支顶点上的端点归入编号最小的关联模式边。给出 graph 时同时检查
    路径的边都在宿主图中。

    Raises:
        ProcedureInputError: Q 与 R 相交
        InvalidConnectorError: 连接器不合法
    """
    q_set, r_set = q.vertex_set(), r.vertex_set()
    if q_set & r_set:
        raise ProcedureInputError(f"Q and R share vertices {sorted(q_set & r_set)}")

    seen: set[int] = set()
    edges = []
    for raw in connector.paths:
        path = _orient(raw, q_set, r_set)
        if path.vertex_set() & q_set != {path.first} or path.vertex_set() & r_set != {path.last}:
            raise InvalidConnectorError(
                f"path {list(path.vertices)} must meet Q and R only at its ends"
            )
        if seen & path.vertex_set():
            raise InvalidConnectorError(f"path {list(path.vertices)} meets another path")
        seen |= path.vertex_set()
        if graph is not None:
            for a, b in zip(path.vertices, path.vertices[1:]):
                if not graph.has_edge(a, b):
                    raise InvalidConnectorError(f"{a} and {b} are not adjacent")
        edges.append((q.edge_of_vertex(path.first, pattern), r.edge_of_vertex(path.last, pattern)))

    return IntersectionMultigraph(pattern=pattern, edges=tuple(edges), cut=cut_edges(pattern))


def prop1_bound(pattern: MultigraphPattern) -> int:
    """m² - c·m + C(c, 2)

    Raises:
        DisconnectedPatternError: M 不连通

    Example:
        >>> from gallaikit.constructions.catalog import k2
        >>> prop1_bound(k2())
        0
    """
    m = pattern.m
    c = len(cut_edges(pattern))
    return m * m - c * m + binomial2(c)


def coarse_connectivity_bound(pattern: MultigraphPattern) -> int:
    """(m² + 1)-连通即两两相交"""
    return pattern.m ** 2 + 1


class Prop1Report(BaseModel):
    """连通度上界检查报告

    Attributes:
        pattern: 模式名
        n: |G|
        pairwise_intersecting: L(M,G) 是否两两相交（是则上界命题不适用）
        witness: 一对不交成员的顶点集
        connectivity: κ(G)（仅在不两两相交时计算）
        bound: m² - c·m + C(c, 2)
        coarse_bound: m² + 1
        separator: 见证对之间的最小分隔集
        pairs_checked: 检查过交叉多重图的不交成员对数
        violations: 违反的性质
    """
    pattern: str
    n: int = Field(ge=0)
    pairwise_intersecting: bool
    witness: Optional[tuple[frozenset[int], frozenset[int]]] = None
    connectivity: Optional[int] = None
    bound: int = Field(ge=0)
    coarse_bound: int = Field(ge=1)
    separator: Optional[Separator] = None
    pairs_checked: int = Field(default=0, ge=0)
    violations: tuple[str, ...] = ()

    model_config = {"frozen": True}

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary_line(self) -> str:
        if self.pairwise_intersecting:
            return f"prop1 pattern={self.pattern} n={self.n} pairwise_intersecting=true vacuous"
        return (
            f"prop1 pattern={self.pattern} n={self.n} pairwise_intersecting=false "
            f"kappa={self.connectivity} bound={self.bound} pairs={self.pairs_checked} "
            f"ok={str(self.ok).lower()}"
        )


def _pair_violations(
    graph: Graph,
    pattern: MultigraphPattern,
    q: Subdivision,
    r: Subdivision,
    bound: int,
) -> list[str]:
    connector = max_connector(graph, q.vertex_set(), r.vertex_set())
    hgraph = intersection_multigraph(q, r, connector, pattern, graph)
    tag = f"Q={sorted(q.vertex_set())} R={sorted(r.vertex_set())}"
    out = []
    if not hgraph.is_simple():
        out.append(f"not simple: {tag} edges={list(hgraph.edges)}")
    if hgraph.edge_count > bound:
        out.append(f"edge count {hgraph.edge_count} > {bound}: {tag}")
    for e, f in hgraph.cut_edge_violations():
        out.append(f"cut edge rule ({e},{f}): {tag}")
    for e, f in hgraph.leaf_violations():
        out.append(f"star leaf rule ({e},{f}): {tag}")
    return out


def verify_prop1(
    graph: Graph,
    pattern: MultigraphPattern,
    max_pairs: int = 200,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Prop1Report:
    """检查：L(M,G) 不两两相交时 κ(G) ≤ m² - c·m + C(c, 2)

    同时检查 κ(G) < m² + 1，以及至多 max_pairs 对不交成员的交叉多重图性质。

    Raises:
        SearchBudgetExceededError: 枚举超出预算
    """
    family = enumerate_maximum(graph, pattern, node_budget=node_budget)
    bound = prop1_bound(pattern)
    coarse = coarse_connectivity_bound(pattern)
    name = pattern.name or f"m{pattern.m}"

    check = is_pairwise_intersecting(family)
    if check.ok:
        logger.debug("prop1_vacuous", pattern=name, n=graph.n, members=len(family.vertex_sets))
        return Prop1Report(
            pattern=name, n=graph.n, pairwise_intersecting=True, bound=bound, coarse_bound=coarse
        )

    violations: list[str] = []
    kappa = connectivity(graph)
    if kappa > bound:
        violations.append(f"connectivity {kappa} > bound {bound}")
    if kappa >= coarse:
        violations.append(f"connectivity {kappa} >= coarse bound {coarse}")

    q_set, r_set = check.witness  # type: ignore[misc]
    separator = min_separator(graph, q_set, r_set)
    if separator.size > bound:
        violations.append(f"separator size {separator.size} > bound {bound}")

    pairs = 0
    members = family.members
    for i, q in enumerate(members):
        for r in members[i + 1:]:
            if pairs >= max_pairs:
                break
            if q.vertex_set() & r.vertex_set():
                continue
            pairs += 1
            violations.extend(_pair_violations(graph, pattern, q, r, bound))

    report = Prop1Report(
        pattern=name,
        n=graph.n,
        pairwise_intersecting=False,
        witness=(q_set, r_set),
        connectivity=kappa,
        bound=bound,
        coarse_bound=coarse,
        separator=separator,
        pairs_checked=pairs,
        violations=tuple(violations),
    )
    if violations:
        logger.error("prop1_violated", pattern=name, n=graph.n, violations=len(violations))
    else:
        logger.debug("prop1_checked", pattern=name, n=graph.n, kappa=kappa, bound=bound, pairs=pairs)
    return report
