"""
GALLAIKIT Cycle Lemmas

- reroute_choice：圈分成四段 P1..P4 时，P1 或 P3 比圈的其余部分短
- shorten_cycle：端点在圈上、且短于圈上距离的路径给出更短但超过一半长的圈
"""

import structlog

from gallaikit.exceptions import (
    GraphException,
    InternalProcedureError,
    MalformedPartitionError,
    ProcedureInputError,
)
from gallaikit.graph.graph import Graph
from gallaikit.graph.paths import CycleSeq, PathSeq, cycle_distance, longer_arc, make_cycle, make_path
from gallaikit.procedures import reason_codes
from gallaikit.procedures.certificates import (
    CycleOutcome,
    Inequality,
    ProcedureCertificate,
    RerouteChoice,
)

logger = structlog.get_logger(__name__)


def _arc_lengths(cycle: CycleSeq, cut_points: tuple[int, ...]) -> tuple[int, int, int, int]:
    if len(cut_points) != 4:
        raise MalformedPartitionError(f"need 4 cut points, got {len(cut_points)}")
    try:
        pos = [cycle.position(v) for v in cut_points]
    except GraphException as e:
        raise MalformedPartitionError(str(e)) from e
    size = cycle.length
    for direction in (1, -1):
        lengths = tuple(((pos[(i + 1) % 4] - pos[i]) * direction) % size for i in range(4))
        if all(x >= 1 for x in lengths) and sum(lengths) == size:
            return lengths  # type: ignore[return-value]
    raise MalformedPartitionError(
        f"cut points {list(cut_points)} are not distinct and in cyclic order on the cycle"
    )


def reroute_choice(cycle: CycleSeq, cut_points: tuple[int, ...]) -> RerouteChoice:
    """返回最小的 i ∈ {1, 3}，使 ‖P_i‖ < ‖C‖ - ‖P_i‖

    P_i 为第 i 个切点到第 i+1 个切点的弧（任一绕向均可）。

    Raises:
        MalformedPartitionError: 切点不在圈上、重复或不按圈序排列

    Example:
        >>> c = CycleSeq(vertices=tuple(range(8)))
        >>> reroute_choice(c, (0, 5, 6, 7)).index
        3
    """
    lengths = _arc_lengths(cycle, tuple(cut_points))
    total = cycle.length
    first_ok = lengths[0] < total - lengths[0]
    third_ok = lengths[2] < total - lengths[2]
    if first_ok:
        index = 1
    elif third_ok:
        index = 3
    else:
        raise InternalProcedureError(f"no short arc among {lengths}")

    certificate = ProcedureCertificate(
        kind="reroute_choice",
        status="ok",
        inputs={"cycle_length": total, "cut_points": list(cut_points)},
        output=f"i={index}",
        checks=(
            Inequality.of("||P1|| < ||P2 P3 P4||", lengths[0], "<", total - lengths[0], index == 1),
            Inequality.of("||P3|| < ||P4 P1 P2||", lengths[2], "<", total - lengths[2], index == 3),
        ),
        facts={"lengths": list(lengths)},
    )
    return RerouteChoice(index=index, lengths=lengths, certificate=certificate)


def shorten_cycle(graph: Graph, cycle: CycleSeq, path: PathSeq) -> CycleOutcome:
    """用短路径 P 替换圈上较短的弧，得到 |C|/2 < |C′| < |C| 的圈

    在 P 与 C 的交点处把 P 切成若干段，取第一段比其端点圈上距离短的，
    用它替换 C 上这两点之间的短弧。

    Raises:
        ProcedureInputError: C 不是 G 中的圈、P 不是 G 中的路径或端点不在 C 上
        InternalProcedureError: 前提成立却找不到合格分段
    """
    try:
        make_cycle(graph, cycle.vertices)
        make_path(graph, path.vertices)
    except GraphException as e:
        raise ProcedureInputError(str(e)) from e
    on_cycle = cycle.vertex_set()
    if path.first not in on_cycle or path.last not in on_cycle:
        raise ProcedureInputError("both ends of P must lie on C")

    inputs = {"cycle_length": cycle.length, "path": list(path.vertices)}
    d = cycle_distance(cycle, path.first, path.last)
    premise = Inequality.of("||P|| < d_C(x,y)", path.length, "<", d)
    if not premise.holds:
        logger.warning("shorten_cycle_hypothesis_failed", length=path.length, cycle_distance=d)
        return CycleOutcome(
            certificate=ProcedureCertificate(
                kind="shorten_cycle",
                status="fail",
                reason=reason_codes.SHORTCUT_NOT_SHORTER,
                inputs=inputs,
                checks=(premise,),
                facts={"length": path.length, "cycle_distance": d},
            )
        )

    hits = [i for i, v in enumerate(path.vertices) if v in on_cycle]
    segment = None
    for a, b in zip(hits, hits[1:]):
        seg = path.vertices[a:b + 1]
        if b - a < cycle_distance(cycle, seg[0], seg[-1]):
            segment = seg
            break
    if segment is None:
        raise InternalProcedureError("no segment of P is shorter than its cycle distance")

    start, end = segment[0], segment[-1]
    seg_d = cycle_distance(cycle, start, end)
    arc = longer_arc(cycle, start, end)
    new_cycle = make_cycle(graph, arc.vertices + tuple(reversed(segment[1:-1])))

    certificate = ProcedureCertificate(
        kind="shorten_cycle",
        status="ok",
        inputs=inputs,
        output=f"cycle_length={new_cycle.length}",
        checks=(
            premise,
            Inequality.of("||P_i|| < d_C(x_i-1,x_i)", len(segment) - 1, "<", seg_d),
            Inequality.of("|C| < 2|C'|", cycle.length, "<", 2 * new_cycle.length),
            Inequality.of("|C'| < |C|", new_cycle.length, "<", cycle.length),
        ),
        facts={"segment": list(segment), "segments": len(hits) - 1},
    )
    return CycleOutcome(cycle=new_cycle, certificate=certificate)
