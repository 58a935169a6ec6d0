"""
GALLAIKIT Pretransversal

H-预横截 (X, Y) 的扩展与合并。

- extend_pretransversal：A,B 之间若有小分隔集 Y′，则 H - Y′ 中容纳全部
  避开 Y′ 的成员的分量 H′ 给出扩展 (V(H - H′), Y′)；否则返回 Menger 连接器
- pretransversal_union：H = G - X 上的扩展并回 G
- restrict_family：族中落在 G - X 的成员，改用 H 的编号
"""

from typing import Iterable

import structlog

from gallaikit.exceptions import (
    InternalProcedureError,
    NotPairwiseIntersectingError,
    ProcedureInputError,
)
from gallaikit.graph.graph import Graph
from gallaikit.menger.flow import max_connector, min_separator
from gallaikit.procedures import reason_codes
from gallaikit.procedures.certificates import (
    ExtensionOutcome,
    Inequality,
    Pretransversal,
    ProcedureCertificate,
)
from gallaikit.subdivision.models import Subdivision, SubdivisionFamily, assemble_family
from gallaikit.transversal.tau import is_pairwise_intersecting
from gallaikit.utils.exact import Threshold

logger = structlog.get_logger(__name__)


def require_pairwise(family: SubdivisionFamily) -> None:
    """族必须穷举且两两相交

    Raises:
        NonExhaustiveFamilyError: 族不完整
        NotPairwiseIntersectingError: 携带第一对不交成员
    """
    check = is_pairwise_intersecting(family)
    if not check.ok:
        a, b = check.witness  # type: ignore[misc]
        raise NotPairwiseIntersectingError(
            f"members {sorted(a)} and {sorted(b)} are disjoint", witness=(a, b)
        )


def extend_pretransversal(
    host: Graph,
    family: SubdivisionFamily,
    a: Iterable[int],
    b: Iterable[int],
    theta: Threshold,
) -> ExtensionOutcome:
    """由 A,B 之间的小分隔集构造 H-预横截

    Args:
        host: H
        family: L(M,H)（或其中落在 H 内的成员），须穷举且两两相交
        a, b: 不交的非空顶点集
        theta: 阈值

    Returns:
        成功：(X′, Y′) 与分隔集；失败（NO_SMALL_SEPARATOR）：最大连接器，
        其大小满足 θ·|K| ≥ min(|A|,|B|)

    Raises:
        ProcedureInputError: A 或 B 为空或二者相交
        NotPairwiseIntersectingError: 族不是两两相交的
    """
    a_set, b_set = frozenset(a), frozenset(b)
    if not a_set or not b_set:
        raise ProcedureInputError("A and B must both be nonempty")
    if a_set & b_set:
        raise ProcedureInputError(f"A and B share vertices {sorted(a_set & b_set)}")
    require_pairwise(family)

    s = min(len(a_set), len(b_set))
    sep = min_separator(host, a_set, b_set)
    small = Inequality.theta_times("theta*|Y'| < s", theta, sep.size, "<", s)
    inputs = {"n": host.n, "a": sorted(a_set), "b": sorted(b_set), "theta": theta.label}

    if not small.holds:
        connector = max_connector(host, a_set, b_set)
        logger.debug("no_small_separator", separator=sep.size, s=s, connector=connector.size)
        return ExtensionOutcome(
            separator=sep,
            connector=connector,
            certificate=ProcedureCertificate(
                kind="extend_pretransversal",
                status="fail",
                reason=reason_codes.NO_SMALL_SEPARATOR,
                inputs=inputs,
                output=f"connector={connector.size}",
                checks=(
                    small,
                    Inequality.theta_times("s <= theta*|K|", theta, connector.size, ">=", s, False),
                ),
                facts={"separator": sep.size, "s": s, "theta": theta.label},
            ),
        )

    y_new = sep.vertex_set()
    avoiding = [vs for vs in family.vertex_sets if not vs & y_new]
    everything = frozenset(range(host.n))
    if avoiding:
        side = next(c for c in host.components(y_new) if avoiding[0] <= c)
        if any(not vs <= side for vs in avoiding):
            raise InternalProcedureError("members avoiding the separator lie in different components")
        x_new = everything - side
    else:
        x_new = everything

    balanced = Inequality.theta_times("theta*|Y'| <= |X'|", theta, len(y_new), "<=", len(x_new))
    if not balanced.holds:
        raise InternalProcedureError(
            f"separated side too small: |X'|={len(x_new)}, |Y'|={len(y_new)}"
        )
    ext = Pretransversal(x=x_new, y=y_new, theta=theta)
    if not ext.member_condition(family.vertex_sets):
        raise InternalProcedureError("extension violates the member condition")

    return ExtensionOutcome(
        pretransversal=ext,
        separator=sep,
        certificate=ProcedureCertificate(
            kind="extend_pretransversal",
            status="ok",
            inputs=inputs,
            output=f"x={len(x_new)} y={sorted(y_new)}",
            checks=(small, balanced),
            facts={"separator": sep.size, "s": s, "avoiding": len(avoiding)},
        ),
    )


def pretransversal_union(
    base: Pretransversal,
    extension: Pretransversal,
    keep: tuple[int, ...],
) -> Pretransversal:
    """(X ∪ X′, Y ∪ Y′)

    Args:
        base: G 上的 (X, Y)
        extension: H = G - X 上的 (X′, Y′)
        keep: H 的编号 → G 的编号（Graph.without 的返回值）
    """
    x_ext = frozenset(keep[v] for v in extension.x)
    y_ext = frozenset(keep[v] for v in extension.y)
    if x_ext & base.x:
        raise ProcedureInputError("extension must live in G - X")
    return Pretransversal(x=base.x | x_ext, y=base.y | y_ext, theta=base.theta)


def _relabel(sub: Subdivision, index: dict[int, int]) -> Subdivision:
    return Subdivision(
        branch_map=tuple(index[v] for v in sub.branch_map),
        edge_paths=tuple(tuple(index[v] for v in route) for route in sub.edge_paths),
    )


def restrict_family(family: SubdivisionFamily, keep: tuple[int, ...]) -> SubdivisionFamily:
    """族中完全落在 keep 内的成员，按 H 的编号重写

    成员被截断的族无法完整限制。
    """
    if family.truncated:
        raise ProcedureInputError("cannot restrict a truncated family")
    index = {v: i for i, v in enumerate(keep)}
    kept = frozenset(keep)
    inside = [
        _relabel(sub, index) for sub in family.members
        if sub.vertex_set() <= kept
    ]
    return assemble_family(family.pattern, inside, limit=None, nodes=0)
