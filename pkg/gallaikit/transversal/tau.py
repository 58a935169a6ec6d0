"""
GALLAIKIT Tau

τ(M,G)、Gal(G) 与两两相交检查。
"""

from typing import Iterable, Optional

import structlog
from pydantic import BaseModel, Field

from gallaikit.exceptions import BoundViolationError, DisconnectedGraphError, NonExhaustiveFamilyError
from gallaikit.graph.graph import Graph, mask_of
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.subdivision.models import SubdivisionFamily
from gallaikit.subdivision.paths import DEFAULT_NODE_BUDGET
from gallaikit.transversal.hitting import (
    DEFAULT_SOLVER_BUDGET,
    HittingCertificate,
    HittingInstance,
    min_hitting_set,
)
from gallaikit.utils.exact import theorem_bound_holds

logger = structlog.get_logger(__name__)

_K2 = MultigraphPattern(w=2, edges=((0, 1),), name="K2")


class IntersectionCheck(BaseModel):
    """两两相交检查结论

    Attributes:
        ok: 是否两两相交
        witness: 不相交时的一对顶点集
    """
    ok: bool
    witness: Optional[tuple[frozenset[int], frozenset[int]]] = None

    model_config = {"frozen": True}

    def __bool__(self) -> bool:
        return self.ok


class TauResult(BaseModel):
    """τ(M,G) 及其见证

    Attributes:
        tau: 最小横截集大小
        witness: 一个最小横截集
        certificate: 下界证书
        n: |G|
        m: ‖M‖
        mu: 族成员顶点数
        members: 族中不同成员数
        pairwise_intersecting: 族是否两两相交
        bound_checked: 是否检查了 τ 的理论上界（两两相交且 m³ < n）
    """
    tau: int = Field(ge=0)
    witness: tuple[int, ...] = ()
    certificate: HittingCertificate
    n: int = Field(ge=0)
    m: int = Field(ge=1)
    mu: int = Field(ge=0)
    members: int = Field(ge=0)
    pairwise_intersecting: bool = True
    bound_checked: bool = False

    model_config = {"frozen": True}

    def report_line(self) -> str:
        """tau=<k> witness=<sorted list> lower_bound_certificate=<kind>"""
        return (
            f"tau={self.tau} witness={list(self.witness)} "
            f"lower_bound_certificate={self.certificate.kind}"
        )


def _require_exhaustive(family: SubdivisionFamily) -> None:
    if not family.exhaustive:
        raise NonExhaustiveFamilyError(
            f"family for {family.pattern.name or 'pattern'} is not exhaustive"
        )


def is_pairwise_intersecting(family: SubdivisionFamily) -> IntersectionCheck:
    """族中任意两个成员是否相交；否则给出第一对不交成员

    Raises:
        NonExhaustiveFamilyError: 族不完整
    """
    _require_exhaustive(family)
    masks = family.vertex_masks()
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if not a & masks[j]:
                return IntersectionCheck(
                    ok=False, witness=(family.vertex_sets[i], family.vertex_sets[j])
                )
    return IntersectionCheck(ok=True)


def is_transversal(vertices: Iterable[int], family: SubdivisionFamily) -> bool:
    """S 是否与族中每个成员相交"""
    mask = mask_of(vertices)
    return all(mask & m for m in family.vertex_masks())


def tau_of_family(
    family: SubdivisionFamily,
    n: int,
    solver_budget: int = DEFAULT_SOLVER_BUDGET,
) -> TauResult:
    """对已穷举的族求 τ

    Raises:
        NonExhaustiveFamilyError: 族不完整
        BoundViolationError: 两两相交时 τ > μ 或违反理论上界
    """
    _require_exhaustive(family)
    instance = HittingInstance(
        universe=frozenset(range(n)),
        sets=family.vertex_sets,
        exhaustive=family.exhaustive,
    )
    solved = min_hitting_set(instance, node_budget=solver_budget)
    check = is_pairwise_intersecting(family)
    m = family.pattern.m

    bound_checked = False
    if check.ok and family.vertex_sets:
        if solved.size > family.mu:
            raise BoundViolationError(f"tau={solved.size} exceeds mu={family.mu}")
        if m ** 3 < n:
            bound_checked = True
            if not theorem_bound_holds(solved.size, n, m):
                raise BoundViolationError(
                    f"tau={solved.size} exceeds max(5n^(2/3), 2m^2 n^(1/3)) for n={n}, m={m}"
                )

    result = TauResult(
        tau=solved.size,
        witness=solved.hitting_set,
        certificate=solved.certificate,
        n=n,
        m=m,
        mu=family.mu,
        members=len(family.vertex_sets),
        pairwise_intersecting=check.ok,
        bound_checked=bound_checked,
    )
    logger.info(
        "tau_computed",
        pattern=family.pattern.name,
        n=n,
        tau=result.tau,
        members=result.members,
        pairwise_intersecting=check.ok,
        certificate=solved.certificate.kind,
    )
    return result


def tau(
    graph: Graph,
    pattern: MultigraphPattern,
    node_budget: int = DEFAULT_NODE_BUDGET,
    solver_budget: int = DEFAULT_SOLVER_BUDGET,
    jobs: int = 1,
) -> TauResult:
    """τ(M,G)：L(M,G) 的最小横截集大小

    Example:
        >>> from gallaikit.constructions.catalog import path_graph, k2
        >>> tau(path_graph(5), k2()).tau
        1
    """
    family = enumerate_maximum(graph, pattern, node_budget=node_budget, jobs=jobs)
    return tau_of_family(family, graph.n, solver_budget=solver_budget)


def gallai(
    graph: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    solver_budget: int = DEFAULT_SOLVER_BUDGET,
    jobs: int = 1,
) -> TauResult:
    """Gal(G) = τ(K2, G)

    Raises:
        DisconnectedGraphError: G 不连通（Gallai 数只对连通图定义）
    """
    if not graph.is_connected():
        raise DisconnectedGraphError(f"graph with n={graph.n} is not connected")
    return tau(graph, _K2, node_budget=node_budget, solver_budget=solver_budget, jobs=jobs)
