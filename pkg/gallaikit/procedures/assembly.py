"""
GALLAIKIT Transversal Assembly

两两相交族的横截集构造：

1. 预横截循环：在 H = G - X 中寻找小分隔集，把 (X, Y) 扩展到不能再扩展
2. 若 G - X 中已无成员，S = Y
3. 否则在 H 中构造基圈，不横截时反复加长，横截后尽量缩短
4. S = Y ∪ V(C)，用 is_transversal 复核

任一步骤的假设不成立时，轨迹保留到该步为止，S 改由精确命中集给出
（fallback=True）。
"""

from typing import Optional

import structlog
from pydantic import BaseModel, Field

from gallaikit.exceptions import InternalProcedureError
from gallaikit.graph.graph import Graph
from gallaikit.graph.paths import CycleSeq
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.menger.flow import max_connector, min_separator
from gallaikit.procedures import reason_codes
from gallaikit.procedures.certificates import (
    ExtensionOutcome,
    Inequality,
    Pretransversal,
    ProcedureCertificate,
    TraceRecord,
)
from gallaikit.procedures.cycles import base_cycle, enlarge_cycle, inner_path_stats, shrink_cycle
from gallaikit.procedures.pretransversal import (
    extend_pretransversal,
    pretransversal_union,
    require_pairwise,
    restrict_family,
)
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.subdivision.models import SubdivisionFamily
from gallaikit.subdivision.paths import DEFAULT_NODE_BUDGET
from gallaikit.transversal.hitting import DEFAULT_SOLVER_BUDGET, HittingInstance, min_hitting_set
from gallaikit.transversal.tau import is_transversal
from gallaikit.utils.exact import Threshold, theorem_bound_holds

logger = structlog.get_logger(__name__)


class TransversalBuild(BaseModel):
    """横截集构造结果

    Attributes:
        vertices: 横截集 S（升序）
        y: 预横截循环累积的 Y
        x_size: 最终 |X|
        cycle: 使用的横截圈（G 的编号）
        fallback: S 是否来自精确命中集
        fallback_reason: 回退原因编码
        certificates: 按调用顺序的过程证书
        n: |G|
        m: ‖M‖
        theta: θ 的来源说明
        within_bound: |S| ≤ max{5n^{2/3}, 2m²n^{1/3}}
    """
    vertices: tuple[int, ...] = ()
    y: tuple[int, ...] = ()
    x_size: int = Field(default=0, ge=0)
    cycle: Optional[CycleSeq] = None
    fallback: bool = False
    fallback_reason: Optional[str] = None
    certificates: tuple[ProcedureCertificate, ...] = ()
    n: int = Field(ge=0)
    m: int = Field(ge=1)
    theta: str
    within_bound: bool = True

    model_config = {"frozen": True}

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def trace(self) -> tuple[TraceRecord, ...]:
        return tuple(c.trace_record() for c in self.certificates)

    def trace_lines(self) -> list[str]:
        return [r.line() for r in self.trace]


class _Fallback(Exception):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


def _candidate_terminals(host: Graph, u: int, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """H - Y0 中分别含 u、v 的分量，Y0 为 u,v 之间的最小分隔集"""
    nu, nv = host.neighbors(u), host.neighbors(v)
    removed = min_separator(host, nu, nv).vertices if nu and nv else ()
    comps = host.components(removed)
    a = next(c for c in comps if u in c)
    b = next(c for c in comps if v in c)
    return a, b


def _best_extension(
    host: Graph,
    family: SubdivisionFamily,
    theta: Threshold,
) -> tuple[Optional[ExtensionOutcome], Optional[ExtensionOutcome]]:
    """所有非相邻顶点对中 |X′| 最大的成功扩展，以及第一次失败"""
    best = None
    first_failure = None
    for u in range(host.n):
        for v in range(u + 1, host.n):
            if host.has_edge(u, v):
                continue
            a, b = _candidate_terminals(host, u, v)
            if a == b:
                continue
            outcome = extend_pretransversal(host, family, a, b, theta)
            if not outcome.ok:
                first_failure = first_failure or outcome
                continue
            if best is None or len(outcome.pretransversal.x) > len(best.pretransversal.x):
                best = outcome
    return best, first_failure


class _Assembly:
    def __init__(
        self,
        graph: Graph,
        family: SubdivisionFamily,
        theta: Threshold,
        max_extension_rounds: int,
    ) -> None:
        self.graph = graph
        self.family = family
        self.pattern = family.pattern
        self.theta = theta
        self.max_extension_rounds = max_extension_rounds
        self.certificates: list[ProcedureCertificate] = []
        self.pre = Pretransversal(theta=theta)
        self.cycle: Optional[CycleSeq] = None

    def record(self, certificate: ProcedureCertificate) -> None:
        self.certificates.append(certificate)
        if not certificate.verify():
            raise InternalProcedureError(f"{certificate.kind} certificate does not recheck")

    def extend(self) -> None:
        for _ in range(self.max_extension_rounds):
            host, keep = self.graph.without(self.pre.x)
            if host.n == 0:
                return
            sub_family = restrict_family(self.family, keep)
            if sub_family.is_empty:
                return
            best, failure = _best_extension(host, sub_family, self.theta)
            if best is None:
                if failure is not None:
                    self.record(failure.certificate)
                return
            self.record(best.certificate)
            merged = pretransversal_union(self.pre, best.pretransversal, keep)
            if not merged.member_condition(self.family.vertex_sets):
                raise InternalProcedureError("merged pretransversal violates the member condition")
            self.pre = merged
            logger.debug("pretransversal_extended", x=len(merged.x), y=len(merged.y))

    def close(self) -> frozenset[int]:
        host, keep = self.graph.without(self.pre.x)
        sub_family = restrict_family(self.family, keep) if host.n else None
        if sub_family is None or sub_family.is_empty:
            return self.pre.y

        outcome = base_cycle(host, sub_family, self.theta)
        self.record(outcome.certificate)
        if not outcome.ok:
            raise _Fallback(outcome.certificate.reason or reason_codes.BASE_CYCLE_TOO_SHORT)
        cycle = outcome.cycle

        rounds = 0
        while not is_transversal(cycle.vertices, sub_family):
            rounds += 1
            if rounds > host.n:
                raise _Fallback(reason_codes.NO_TRANSVERSAL_CYCLE)
            c_set = cycle.vertex_set()
            q = next(
                s for s in sub_family.members if not s.vertex_set() & c_set
            )
            connector = max_connector(host, c_set, q.vertex_set())
            stats = inner_path_stats(q, connector, self.pattern)
            self.record(stats.certificate)
            self.record(self._inner_bound(cycle, stats.inner))
            grown = enlarge_cycle(host, cycle, q, connector, self.pattern)
            self.record(grown.certificate)
            if not grown.ok:
                raise _Fallback(grown.certificate.reason or reason_codes.MAXIMALITY_VIOLATED)
            cycle = grown.cycle

        while True:
            shrunk = shrink_cycle(host, cycle, self.theta)
            self.record(shrunk.certificate)
            if not shrunk.ok or not is_transversal(shrunk.cycle.vertices, sub_family):
                break
            cycle = shrunk.cycle

        self.cycle = CycleSeq(vertices=tuple(keep[v] for v in cycle.vertices))
        return self.pre.y | self.cycle.vertex_set()

    def _inner_bound(self, cycle: CycleSeq, inner) -> ProcedureCertificate:
        """不横截圈 C 的观测：内部路径长于 |C|/2，且 |C| ≤ 2θ²"""
        checks = [
            Inequality.of("|C| < 2||I||", cycle.length, "<", 2 * path.length, required=False)
            for paths in inner for path in paths
        ]
        checks.append(Inequality.of(
            "|C| <= 2*theta^2 (cubed)",
            cycle.length ** 3, "<=", 8 * self.theta.cube ** 2, required=False,
        ))
        return ProcedureCertificate(
            kind="inner_bound",
            status="ok",
            inputs={"cycle_length": cycle.length},
            output=f"inner={sum(len(p) for p in inner)}",
            checks=tuple(checks),
        )


def build_transversal(
    graph: Graph,
    pattern: MultigraphPattern,
    theta: Optional[Threshold] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    solver_budget: int = DEFAULT_SOLVER_BUDGET,
    max_extension_rounds: int = 64,
    jobs: int = 1,
) -> TransversalBuild:
    """按构造性论证求 L(M,G) 的横截集

    Args:
        graph: 宿主图
        pattern: 模式 M
        theta: 阈值，默认 n^{1/3}

    Raises:
        NotPairwiseIntersectingError: 族不是两两相交的（携带见证对）
        SearchBudgetExceededError: 枚举超出预算

    Example:
        >>> from gallaikit.constructions.catalog import path_graph, k2
        >>> build_transversal(path_graph(5), k2()).size
        1
    """
    theta = theta or Threshold.auto(graph.n)
    family = enumerate_maximum(graph, pattern, node_budget=node_budget, jobs=jobs)
    common = {"n": graph.n, "m": pattern.m, "theta": theta.label}
    if family.is_empty:
        return TransversalBuild(**common)
    require_pairwise(family)

    work = _Assembly(graph, family, theta, max_extension_rounds)
    fallback_reason = None
    try:
        work.extend()
        chosen = work.close()
        if not is_transversal(chosen, family):
            raise _Fallback(reason_codes.NO_TRANSVERSAL_CYCLE)
    except _Fallback as stop:
        fallback_reason = stop.reason
        solved = min_hitting_set(
            HittingInstance(universe=frozenset(range(graph.n)), sets=family.vertex_sets),
            node_budget=solver_budget,
        )
        chosen = frozenset(solved.hitting_set)
        logger.info("transversal_fallback", reason=fallback_reason, size=len(chosen))

    vertices = tuple(sorted(chosen))
    result = TransversalBuild(
        vertices=vertices,
        y=tuple(sorted(work.pre.y)),
        x_size=len(work.pre.x),
        cycle=None if fallback_reason else work.cycle,
        fallback=fallback_reason is not None,
        fallback_reason=fallback_reason,
        certificates=tuple(work.certificates),
        within_bound=theorem_bound_holds(len(vertices), graph.n, pattern.m),
        **common,
    )
    logger.info(
        "transversal_built",
        size=result.size,
        fallback=result.fallback,
        steps=len(result.certificates),
        within_bound=result.within_bound,
    )
    return result
