"""
GALLAIKIT Cycle Procedures

基圈、加长、缩短三种圈手术，以及连接器端点对细分边的划分统计。

- base_cycle：τ > m²·θ 时，在最小横截集与某个成员的交里找出长于 m·θ 的圈
- enlarge_cycle：不横截的圈 C 经由最大细分 Q 加长
- inner_path_stats：连接器端点把每条 Q_e 切成内部路径与两条外部路径
- shrink_cycle：四等分圈，找比圈上距离短的横跨路径后用 shorten_cycle 缩短
"""

from typing import Optional

import structlog

from gallaikit.exceptions import GraphException, InternalProcedureError, ProcedureInputError
from gallaikit.graph.graph import Graph, mask_of
from gallaikit.graph.paths import CycleSeq, PathSeq, cycle_distance, longer_arc, make_cycle
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.menger.flow import Connector, max_connector, validate_connector
from gallaikit.procedures import reason_codes
from gallaikit.procedures.certificates import (
    CycleOutcome,
    Inequality,
    InnerPathStats,
    ProcedureCertificate,
)
from gallaikit.procedures.lemmas import reroute_choice, shorten_cycle
from gallaikit.procedures.pretransversal import require_pairwise
from gallaikit.subdivision.models import Subdivision, SubdivisionFamily
from gallaikit.transversal.hitting import HittingInstance, hits_all, min_hitting_set
from gallaikit.utils.exact import Threshold

logger = structlog.get_logger(__name__)


def _check_cycle(graph: Graph, cycle: CycleSeq) -> None:
    try:
        make_cycle(graph, cycle.vertices)
    except GraphException as e:
        raise ProcedureInputError(str(e)) from e


def _fail(kind: str, reason: str, inputs: dict, facts: dict, checks=()) -> CycleOutcome:
    logger.warning(f"{kind}_hypothesis_failed", reason=reason, **facts)
    return CycleOutcome(
        certificate=ProcedureCertificate(
            kind=kind,
            status="fail",
            reason=reason,
            inputs=inputs,
            checks=tuple(checks),
            facts=facts,
        )
    )


# ============================================================================
# 基圈
# ============================================================================

def _window(route: tuple[int, ...], start: int, size: int, closed: bool) -> tuple[int, ...]:
    if closed:
        return tuple(route[(start + i) % len(route)] for i in range(size))
    return route[start:start + size]


def _shortest_window(
    route: tuple[int, ...],
    closed: bool,
    others: frozenset[int],
    vertex_sets: tuple[frozenset[int], ...],
) -> tuple[int, ...]:
    """最短且起点最靠前的子路径 P，使 others ∪ V(P) 仍是横截集"""
    for size in range(1, len(route) + 1):
        starts = range(len(route)) if closed else range(len(route) - size + 1)
        for start in starts:
            window = _window(route, start, size, closed)
            if hits_all(others | frozenset(window), vertex_sets):
                return window
    raise InternalProcedureError("the whole of Q_e does not restore a transversal")


def _isolated_witness(
    vertex_sets: tuple[frozenset[int], ...],
    window: frozenset[int],
    v: int,
) -> Optional[frozenset[int]]:
    for vs in vertex_sets:
        if vs & window == {v}:
            return vs
    return None


def _outer_route(graph: Graph, qi: int, qj: int, allowed: int, direct_ok: bool) -> Optional[list[int]]:
    """allowed 内的 qi,qj-路；direct_ok 为假时不接受直接边"""
    if direct_ok:
        return graph.shortest_path(qi, qj, allowed)
    best = None
    inner = allowed & ~(1 << qi)
    for w in graph.neighbors(qi):
        if w == qj or not inner >> w & 1:
            continue
        tail = graph.shortest_path(w, qj, inner)
        if tail is not None and (best is None or len(tail) + 1 < len(best)):
            best = [qi] + tail
    return best


def base_cycle(host: Graph, family: SubdivisionFamily, theta: Threshold) -> CycleOutcome:
    """τ > m²·θ 时构造 |C0| > m·θ 的圈

    1. 取成员 Q，在 V(Q) 内求最小横截集 S
    2. 取编号最小的模式边 e，使 |Q_e ∩ S| > m·θ
    3. 取 Q_e 上最短的子路径 P（同长取起点最靠前），使 (S∖V(Q_e)) ∪ V(P) 仍横截
    4. 对 P 的两端 q 各取只在 q 处与 P 相交的成员 R(q)
    5. 在 R(q_i) ∪ R(q_j) 中连接 q_i,q_j，与 P 合成 C0

    Raises:
        NotPairwiseIntersectingError: 族不是两两相交的
    """
    m = family.pattern.m
    inputs = {"n": host.n, "m": m, "theta": theta.label}
    if not family.vertex_sets or not family.members:
        return _fail("base_cycle", reason_codes.EMPTY_FAMILY, inputs, {})
    require_pairwise(family)

    universe = frozenset(range(host.n))
    tau_value = min_hitting_set(
        HittingInstance(universe=universe, sets=family.vertex_sets)
    ).size
    hypothesis = Inequality.theta_times("m^2*theta < tau", theta, m * m, "<", tau_value)
    if not hypothesis.holds:
        return _fail(
            "base_cycle",
            reason_codes.TAU_BELOW_THRESHOLD,
            inputs,
            {"tau": tau_value, "m": m, "theta": theta.label},
            (hypothesis,),
        )

    q = family.members[0]
    q_set = q.vertex_set()
    restricted = tuple(vs & q_set for vs in family.vertex_sets)
    s_set = frozenset(
        min_hitting_set(HittingInstance(universe=q_set, sets=restricted)).hitting_set
    )

    edge = next(
        (e for e in range(m)
         if theta.times_compare(m, "<", len(s_set & set(q.route_vertices(e))))),
        None,
    )
    if edge is None:
        raise InternalProcedureError(f"no pattern edge carries more than m*theta of |S|={len(s_set)}")
    route = q.route_vertices(edge)
    closed = family.pattern.is_loop(edge)
    hits_on_edge = len(s_set & set(route))
    edge_check = Inequality.theta_times("m*theta < |Q_e & S|", theta, m, "<", hits_on_edge)

    others = s_set - frozenset(route)
    window = _shortest_window(route, closed, others, family.vertex_sets)
    degenerate = len(window) == 1
    if degenerate:
        if len(route) < 2:
            return _fail(
                "base_cycle", reason_codes.NO_ISOLATED_WITNESS, inputs,
                {"vertex": window[0]}, (hypothesis, edge_check),
            )
        i = route.index(window[0])
        window = (window[0], route[i + 1]) if i + 1 < len(route) else (route[i - 1], window[0])

    qi, qj = window[0], window[-1]
    window_set = frozenset(window)
    witnesses = []
    for v in (qi, qj):
        r = _isolated_witness(family.vertex_sets, window_set, v)
        if r is None:
            return _fail(
                "base_cycle", reason_codes.NO_ISOLATED_WITNESS, inputs,
                {"vertex": v}, (hypothesis, edge_check),
            )
        witnesses.append(r)

    allowed = mask_of(witnesses[0] | witnesses[1])
    outer = _outer_route(host, qi, qj, allowed, direct_ok=len(window) >= 3)
    if outer is None:
        return _fail(
            "base_cycle", reason_codes.NO_ISOLATED_WITNESS, inputs,
            {"vertex": qj}, (hypothesis, edge_check),
        )
    c0 = make_cycle(host, window + tuple(reversed(outer[1:-1])))

    long_enough = Inequality.theta_times("m*theta < |C0|", theta, m, "<", c0.length)
    facts = {
        "tau": tau_value,
        "edge": edge,
        "p_vertices": len(window),
        "qe_hits": hits_on_edge,
        "degenerate": degenerate,
        "length": c0.length,
        "m": m,
        "theta": theta.label,
    }
    checks = (
        hypothesis,
        edge_check,
        Inequality.of("|Q_e & S| <= |P|", hits_on_edge, "<=", len(window), required=False),
        Inequality.of("|Q_e & S| <= ||P||", hits_on_edge, "<=", len(window) - 1, required=False),
        long_enough,
    )
    if not long_enough.holds:
        return _fail("base_cycle", reason_codes.BASE_CYCLE_TOO_SHORT, inputs, facts, checks)

    logger.debug("base_cycle_built", length=c0.length, edge=edge, window=len(window))
    return CycleOutcome(
        cycle=c0,
        certificate=ProcedureCertificate(
            kind="base_cycle",
            status="ok",
            inputs=inputs,
            output=f"cycle_length={c0.length}",
            checks=checks,
            facts=facts,
        ),
    )


# ============================================================================
# 加长
# ============================================================================

def _positions(q: Subdivision, pattern: MultigraphPattern, ends: list[int]) -> dict[int, list[tuple[int, int]]]:
    """模式边 → [(端点在 Q_e 上的位置, 连接器路径下标)]，按位置升序"""
    out: dict[int, list[tuple[int, int]]] = {}
    for k, y in enumerate(ends):
        e = q.edge_of_vertex(y, pattern)
        if e is None:
            raise ProcedureInputError(f"connector endpoint {y} is not on Q")
        out.setdefault(e, []).append((q.route_vertices(e).index(y), k))
    for hits in out.values():
        hits.sort()
    return out


def enlarge_cycle(
    graph: Graph,
    cycle: CycleSeq,
    q: Subdivision,
    connector: Connector,
    pattern: MultigraphPattern,
) -> CycleOutcome:
    """由与 C 不交的最大细分 Q 和 C,Q-连接器得到更长的圈

    要求 |T| > m，否则以 PIGEONHOLE_UNMET 失败。取被连接器击中两次的 Q_e
    （编号最小），两条路径 T1、T2 与 Q_e 的一段以及 C 的较长弧 x2 C x1
    合成 C′。若改道选择落在 Q_e 一段上，Q 就可以被加长，说明 Q 不是最大的。

    Raises:
        ProcedureInputError: C 不是圈、Q 与 C 相交
        InvalidConnectorError: 连接器不合法
    """
    _check_cycle(graph, cycle)
    c_set, q_set = cycle.vertex_set(), q.vertex_set()
    if c_set & q_set:
        raise ProcedureInputError(f"Q meets C at {sorted(c_set & q_set)}")
    paths = validate_connector(graph, connector.paths, c_set, q_set).paths

    m = pattern.m
    inputs = {"cycle_length": cycle.length, "paths": len(paths), "m": m}
    pigeonhole = Inequality.of("m < |T|", m, "<", len(paths))
    if not pigeonhole.holds:
        return _fail(
            "enlarge_cycle", reason_codes.PIGEONHOLE_UNMET, inputs,
            {"paths": len(paths), "m": m}, (pigeonhole,),
        )

    by_edge = _positions(q, pattern, [p.last for p in paths])
    edge = next((e for e in sorted(by_edge) if len(by_edge[e]) >= 2), None)
    if edge is None:
        raise InternalProcedureError(f"{len(paths)} connector paths on {m} edges but no edge hit twice")

    (pos1, k1), (pos2, k2) = by_edge[edge][0], by_edge[edge][1]
    t1, t2 = paths[k1], paths[k2]
    route = q.route_vertices(edge)
    segment = route[pos1:pos2 + 1]
    x1, x2 = t1.first, t2.first
    arc = longer_arc(cycle, x2, x1)
    joined = (
        t1.vertices
        + segment[1:]
        + tuple(reversed(t2.vertices))[1:]
        + arc.vertices[1:-1]
    )
    new_cycle = make_cycle(graph, joined)
    choice = reroute_choice(new_cycle, (segment[0], segment[-1], x2, x1))

    facts = {
        "edge": edge,
        "length": cycle.length,
        "new_length": new_cycle.length,
        "choice": choice.index,
        "lengths": list(choice.lengths),
    }
    checks = (
        pigeonhole,
        *choice.certificate.checks,
        Inequality.of("|C| < |C'|", cycle.length, "<", new_cycle.length),
    )
    if choice.index == 1 or new_cycle.length <= cycle.length:
        logger.error("maximality_violated", **facts)
        return CycleOutcome(
            certificate=ProcedureCertificate(
                kind="enlarge_cycle",
                status="fail",
                reason=reason_codes.MAXIMALITY_VIOLATED,
                inputs=inputs,
                checks=checks,
                facts=facts,
            )
        )
    return CycleOutcome(
        cycle=new_cycle,
        certificate=ProcedureCertificate(
            kind="enlarge_cycle",
            status="ok",
            inputs=inputs,
            output=f"cycle_length={new_cycle.length}",
            checks=checks,
            facts=facts,
        ),
    )


def inner_path_stats(q: Subdivision, connector: Connector, pattern: MultigraphPattern) -> InnerPathStats:
    """每条 Q_e 上的连接器端点数 h_e 与 h_e - 1 条内部路径

    分支顶点上的端点归入编号最小的关联模式边。

    Raises:
        ProcedureInputError: 某个端点不在 Q 上
    """
    by_edge = _positions(q, pattern, [p.last for p in connector.paths])
    hits = tuple(len(by_edge.get(e, [])) for e in range(pattern.m))
    inner = []
    for e in range(pattern.m):
        route = q.route_vertices(e)
        spots = [pos for pos, _ in by_edge.get(e, [])]
        inner.append(tuple(
            PathSeq(vertices=route[a:b + 1]) for a, b in zip(spots, spots[1:])
        ))
    total = sum(max(h - 1, 0) for h in hits)
    hit_edges = sum(1 for h in hits if h >= 1)
    size = len(connector.paths)
    return InnerPathStats(
        hits=hits,
        inner=tuple(inner),
        total_inner=total,
        certificate=ProcedureCertificate(
            kind="inner_path_stats",
            status="ok",
            inputs={"paths": size, "m": pattern.m},
            output=f"hits={list(hits)}",
            checks=(
                Inequality.of("sum(h_e-1) == |T| - #hit", total, "==", size - hit_edges),
                Inequality.of("|T| - m <= sum(h_e-1)", size - pattern.m, "<=", total),
            ),
            facts={"hit_edges": hit_edges},
        ),
    )


# ============================================================================
# 缩短
# ============================================================================

def quarter(cycle: CycleSeq) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """把长 l ≥ 8 的圈分成 P1..P4，顶点数为 (k+1, k-1, k+1, l-3k-1)，k = l // 4"""
    v = cycle.vertices
    k = len(v) // 4
    return v[0:k + 1], v[k + 1:2 * k], v[2 * k:3 * k + 1], v[3 * k + 1:]


def _crossing(graph: Graph, cycle: CycleSeq, pairs) -> Optional[PathSeq]:
    for x, y in pairs:
        if x == y:
            continue
        found = graph.shortest_path(x, y)
        if found is not None and len(found) - 1 < cycle_distance(cycle, x, y):
            return PathSeq(vertices=tuple(found))
    return None


def shrink_cycle(graph: Graph, cycle: CycleSeq, theta: Threshold) -> CycleOutcome:
    """找 l/2 < |C′| < l 的圈

    依次尝试：P1,P3-连接器中比圈上距离短的路径；P1 × P3 顶点对之间的最短路；
    圈上任意顶点对之间的最短路。找到后交给 shorten_cycle。

    Raises:
        ProcedureInputError: C 不是 G 中的圈
    """
    _check_cycle(graph, cycle)
    size = cycle.length
    inputs = {"cycle_length": size, "theta": theta.label}
    if size < 8:
        return _fail("shrink_cycle", reason_codes.CYCLE_TOO_SHORT, inputs, {"length": size})

    p1, _, p3, _ = quarter(cycle)
    connector = max_connector(graph, p1, p3)
    claim_bound = Inequality.theta_times(
        "|P1| <= theta*|T|", theta, connector.size, ">=", len(p1), required=False
    )

    route = "connector"
    crossing = next(
        (t for t in connector.paths if t.length < cycle_distance(cycle, t.first, t.last)),
        None,
    )
    if crossing is None:
        route = "quarter_pairs"
        crossing = _crossing(graph, cycle, ((x, y) for x in p1 for y in p3))
    if crossing is None:
        route = "cycle_pairs"
        vs = cycle.vertices
        crossing = _crossing(
            graph, cycle, ((vs[i], vs[j]) for i in range(size) for j in range(i + 2, size))
        )
    if crossing is None:
        return _fail(
            "shrink_cycle", reason_codes.NO_SHORT_CROSSING, inputs,
            {"length": size}, (claim_bound,),
        )

    shortened = shorten_cycle(graph, cycle, crossing)
    facts = {
        "route": route,
        "crossing": list(crossing.vertices),
        "quarters": [len(part) for part in quarter(cycle)],
        "connector": connector.size,
    }
    if not shortened.ok:
        raise InternalProcedureError("a crossing shorter than its cycle distance was rejected")
    return CycleOutcome(
        cycle=shortened.cycle,
        certificate=ProcedureCertificate(
            kind="shrink_cycle",
            status="ok",
            inputs=inputs,
            output=shortened.certificate.output,
            checks=(claim_bound, *shortened.certificate.checks),
            facts=facts,
        ),
    )
