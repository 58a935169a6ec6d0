"""
GALLAIKIT Verification Suites

可由 CLI 批量运行的性质套件：

- folklore：连通图的最长路两两相交；星模式两两相交；树上两两相交族 τ = 1；
  m³ < n 时 τ 满足理论上界
- prop1：不两两相交时的连通度上界与交叉多重图性质
- lemmas：改道选择、圈缩短（随机与植入实例）、四等分横跨的临界构造
- bounds：Menger 对偶、命中集与暴力解一致、横截集构造的有效性

任一违反记录为 Violation，附带可直接喂回 CLI 的图文本。
"""

import itertools
from fractions import Fraction
from typing import Callable, Optional

import numpy as np
import structlog
from pydantic import BaseModel, Field

from gallaikit.config_loader import AppConfig
from gallaikit.constructions.catalog import (
    c1,
    cycle_graph,
    double_edge,
    k2,
    path_pattern,
    short_crossing,
    star_pattern,
    theta_pattern,
)
from gallaikit.constructions.generators import all_connected_graphs, all_trees, random_connected
from gallaikit.exceptions import GallaiKitException
from gallaikit.graph.graph import Graph
from gallaikit.graph.io import serialize_graph
from gallaikit.graph.paths import CycleSeq, PathSeq, cycle_distance
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.menger.flow import max_connector, min_separator, separates, validate_connector
from gallaikit.procedures.assembly import build_transversal
from gallaikit.procedures.cycles import shrink_cycle
from gallaikit.procedures.intersection import verify_prop1
from gallaikit.procedures.lemmas import reroute_choice, shorten_cycle
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.transversal.hitting import HittingInstance, hits_all, min_hitting_set
from gallaikit.transversal.tau import is_pairwise_intersecting, is_transversal, tau_of_family
from gallaikit.utils.exact import Threshold

logger = structlog.get_logger(__name__)

SUITE_NAMES = ("folklore", "prop1", "lemmas", "bounds")


class Violation(BaseModel):
    """一次性质违反

    Attributes:
        check: 性质名
        detail: 说明
        reproducer: 触发违反的图（Graph 文本格式）
        pattern: 模式名
    """
    check: str
    detail: str
    reproducer: str = ""
    pattern: Optional[str] = None

    model_config = {"frozen": True}


class SuiteReport(BaseModel):
    """套件运行结果"""
    suite: str
    cases: int = Field(default=0, ge=0)
    params: dict[str, int] = Field(default_factory=dict)
    violations: tuple[Violation, ...] = ()

    model_config = {"frozen": True}

    @property
    def ok(self) -> bool:
        return not self.violations

    def minimal_reproducer(self) -> Optional[Violation]:
        """顶点数、边数最小的违反"""
        def size(v: Violation) -> tuple[int, ...]:
            header = v.reproducer.split("\n", 1)[0].split()
            return tuple(int(x) for x in header) if len(header) == 2 else (1 << 30, 0)

        return min(self.violations, key=size, default=None)

    def summary_line(self) -> str:
        return (
            f"suite={self.suite} cases={self.cases} violations={len(self.violations)} "
            f"ok={str(self.ok).lower()}"
        )


class _Collector:
    def __init__(self, suite: str, params: dict[str, int]) -> None:
        self.suite = suite
        self.params = params
        self.cases = 0
        self.violations: list[Violation] = []

    def fail(self, check: str, detail: str, graph: Optional[Graph] = None, pattern: str | None = None) -> None:
        reproducer = serialize_graph(graph) if graph is not None else ""
        self.violations.append(Violation(check=check, detail=detail, reproducer=reproducer, pattern=pattern))
        logger.error("suite_violation", suite=self.suite, check=check, detail=detail)

    def report(self) -> SuiteReport:
        result = SuiteReport(
            suite=self.suite, cases=self.cases, params=self.params, violations=tuple(self.violations)
        )
        logger.info("suite_done", suite=self.suite, cases=self.cases, violations=len(self.violations))
        return result


def _check_tau_bound(col: _Collector, graph: Graph, pattern: MultigraphPattern, node_budget: int) -> None:
    """m³ < n 时 τ ≤ max{5n^{2/3}, 2m²n^{1/3}}（tau_of_family 内部检查并抛出）"""
    if pattern.m ** 3 >= graph.n:
        return
    family = enumerate_maximum(graph, pattern, node_budget=node_budget)
    if family.is_empty:
        return
    try:
        tau_of_family(family, graph.n)
    except GallaiKitException as e:
        col.fail("theorem_bound", str(e), graph, pattern.name)


# ============================================================================
# folklore
# ============================================================================

def run_folklore(n: int, tree_n: int, node_budget: int) -> SuiteReport:
    """最长路、星模式两两相交；树上两两相交族 τ = 1"""
    col = _Collector("folklore", {"n": n, "tree_n": tree_n})
    stars = [star_pattern(k) for k in (1, 2, 3)]
    for size in range(1, n + 1):
        for graph in all_connected_graphs(size):
            col.cases += 1
            for pattern in [k2()] + stars:
                family = enumerate_maximum(graph, pattern, node_budget=node_budget)
                check = is_pairwise_intersecting(family)
                if not check.ok:
                    a, b = check.witness  # type: ignore[misc]
                    col.fail("pairwise_intersecting", f"{sorted(a)} vs {sorted(b)}", graph, pattern.name)
            _check_tau_bound(col, graph, k2(), node_budget)

    for size in range(1, tree_n + 1):
        for tree in all_trees(size):
            col.cases += 1
            for pattern in (k2(), path_pattern(2), star_pattern(3)):
                family = enumerate_maximum(tree, pattern, node_budget=node_budget)
                if family.is_empty or not is_pairwise_intersecting(family).ok:
                    continue
                result = tau_of_family(family, tree.n)
                if result.tau != 1:
                    col.fail("tree_tau_one", f"tau={result.tau}", tree, pattern.name)
    return col.report()


# ============================================================================
# prop1
# ============================================================================

def prop1_patterns(max_m: int) -> list[MultigraphPattern]:
    """K2、C1、P3、K1,3、双边、theta 中 m ≤ max_m 的模式"""
    candidates = [k2(), c1(), path_pattern(2), star_pattern(3), double_edge(), theta_pattern()]
    return [p for p in candidates if p.m <= max_m]


def run_prop1(n: int, max_m: int, max_pairs: int, node_budget: int) -> SuiteReport:
    col = _Collector("prop1", {"n": n, "m": max_m})
    patterns = prop1_patterns(max_m)
    for size in range(1, n + 1):
        for graph in all_connected_graphs(size):
            for pattern in patterns:
                col.cases += 1
                report = verify_prop1(graph, pattern, max_pairs=max_pairs, node_budget=node_budget)
                for detail in report.violations:
                    col.fail("prop1", detail, graph, pattern.name)
    return col.report()


# ============================================================================
# lemmas
# ============================================================================

def _random_cut(rng: np.random.Generator, length: int) -> tuple[CycleSeq, tuple[int, ...]]:
    labels = tuple(int(v) for v in rng.permutation(length))
    cycle = CycleSeq(vertices=labels)
    spots = sorted(int(x) for x in rng.choice(length, size=4, replace=False))
    if rng.integers(2):
        spots = spots[::-1]
    return cycle, tuple(labels[i] for i in spots)


def _planted_shortcut(rng: np.random.Generator) -> tuple[Graph, CycleSeq, PathSeq]:
    """圈 0..l-1 上植入一条比圈上距离短的路径，可能经过圈上的一个中间顶点"""
    length = int(rng.integers(6, 31))
    cycle = CycleSeq(vertices=tuple(range(length)))
    edges = {(min(i, (i + 1) % length), max(i, (i + 1) % length)) for i in range(length)}
    x = int(rng.integers(length))
    d = int(rng.integers(2, length // 2 + 1))
    y = (x + d) % length
    if d >= 6 and rng.integers(2):
        z = (x + d + int(rng.integers(1, length - d))) % length
        pieces = [(x, z, int(rng.integers(0, 2))), (z, y, int(rng.integers(0, 2)))]
    else:
        pieces = [(x, y, int(rng.integers(0, d - 1)))]
    nxt = length
    route = [x]
    for start, end, inner in pieces:
        hops = [start, *range(nxt, nxt + inner), end]
        nxt += inner
        edges.update((min(a, b), max(a, b)) for a, b in zip(hops, hops[1:]))
        route.extend(hops[1:])
    return Graph(n=nxt, edges=tuple(edges)), cycle, PathSeq(vertices=tuple(route))


def run_lemmas(seed: int, cases: int) -> SuiteReport:
    col = _Collector("lemmas", {"seed": seed, "cases": cases})
    rng = np.random.default_rng(seed)

    for _ in range(cases):
        col.cases += 1
        cycle, cuts = _random_cut(rng, int(rng.integers(4, 41)))
        choice = reroute_choice(cycle, cuts)
        arc = choice.lengths[choice.index - 1]
        if not arc < cycle.length - arc or not choice.certificate.verify():
            col.fail("reroute_choice", f"cycle={list(cycle.vertices)} cuts={list(cuts)}")

    done = 0
    while done < cases:
        graph, cycle, path = _planted_shortcut(rng)
        if not path.length < cycle_distance(cycle, path.first, path.last):
            continue
        done += 1
        col.cases += 1
        try:
            out = shorten_cycle(graph, cycle, path)
        except GallaiKitException as e:
            col.fail("shorten_cycle", str(e), graph)
            continue
        new = out.cycle
        if new is None or not (cycle.length < 2 * new.length and new.length < cycle.length):
            col.fail("shorten_cycle", f"path={list(path.vertices)}", graph)
        elif not out.certificate.verify():
            col.fail("shorten_cycle_certificate", out.certificate.output, graph)

    col.cases += 2
    fixture = short_crossing(12)
    shrunk = shrink_cycle(fixture, CycleSeq(vertices=tuple(range(12))), Threshold.rational(1))
    if not shrunk.ok or not 6 < shrunk.cycle.length < 12:
        col.fail("short_crossing_fixture", shrunk.certificate.explain(), fixture)
    chordless = cycle_graph(12)
    flat = shrink_cycle(chordless, CycleSeq(vertices=tuple(range(12))), Threshold.rational(1))
    if flat.ok:
        col.fail("chordless_cycle", "an induced cycle was shortened", chordless)
    return col.report()


# ============================================================================
# bounds
# ============================================================================

def _brute_force_tau(universe: list[int], sets: list[frozenset[int]]) -> int:
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            if hits_all(combo, sets):
                return size
    return len(universe)


def run_bounds(seed: int, cases: int, random_n: int, node_budget: int, solver_budget: int) -> SuiteReport:
    col = _Collector("bounds", {"seed": seed, "cases": cases, "random_n": random_n})
    rng = np.random.default_rng(seed)

    for _ in range(cases):
        col.cases += 1
        n = int(rng.integers(2, random_n + 1))
        graph = random_connected(n, Fraction(int(rng.integers(1, 5)), 10), int(rng.integers(1 << 32)))
        verts = [int(v) for v in rng.permutation(n)]
        cut = int(rng.integers(1, n))
        a = verts[: int(rng.integers(1, cut + 1))]
        b = verts[cut:][: int(rng.integers(1, n - cut + 1))]
        connector = max_connector(graph, a, b)
        separator = min_separator(graph, a, b)
        if connector.size != separator.size or not separates(graph, separator.vertices, a, b):
            col.fail("menger_duality", f"A={a} B={b}", graph)
            continue
        try:
            validate_connector(graph, connector.paths, a, b)
        except GallaiKitException as e:
            col.fail("menger_connector", str(e), graph)

    for _ in range(cases):
        col.cases += 1
        size = int(rng.integers(1, 17))
        universe = list(range(size))
        sets = [
            frozenset(int(v) for v in rng.choice(size, size=int(rng.integers(1, min(size, 4) + 1)), replace=False))
            for _ in range(int(rng.integers(1, 13)))
        ]
        solved = min_hitting_set(
            HittingInstance(universe=frozenset(universe), sets=tuple(sets)), node_budget=solver_budget
        )
        expected = _brute_force_tau(universe, sets)
        if solved.size != expected or not hits_all(solved.hitting_set, sets):
            col.fail("hitting_set_oracle", f"sets={[sorted(s) for s in sets]} got={solved.size} want={expected}")

    for _ in range(max(1, cases // 5)):
        col.cases += 1
        n = int(rng.integers(4, 15))
        graph = random_connected(n, Fraction(1, 4), int(rng.integers(1 << 32)))
        try:
            build = build_transversal(graph, k2(), node_budget=node_budget, solver_budget=solver_budget)
        except GallaiKitException as e:
            col.fail("build_transversal", str(e), graph, "K2")
            continue
        family = enumerate_maximum(graph, k2(), node_budget=node_budget)
        if not is_transversal(build.vertices, family):
            col.fail("build_transversal", f"not a transversal: {list(build.vertices)}", graph, "K2")
        if not all(c.verify() for c in build.certificates):
            col.fail("build_transversal_certificate", "a recorded inequality does not recheck", graph, "K2")
        _check_tau_bound(col, graph, k2(), node_budget)
    return col.report()


def run_suite(name: str, config: AppConfig) -> SuiteReport:
    """按名称运行套件

    Raises:
        ValueError: 未知套件
    """
    v = config.verify
    runners: dict[str, Callable[[], SuiteReport]] = {
        "folklore": lambda: run_folklore(v.n, v.tree_n, config.search.node_budget),
        "prop1": lambda: run_prop1(
            v.n, v.m, config.procedures.max_prop1_pairs, config.search.node_budget
        ),
        "lemmas": lambda: run_lemmas(v.seed, v.cases),
        "bounds": lambda: run_bounds(
            v.seed, v.cases, v.random_n, config.search.node_budget, config.solver.node_budget
        ),
    }
    if name not in runners:
        raise ValueError(f"unknown suite '{name}', expected one of {', '.join(SUITE_NAMES)}")
    logger.info("suite_started", suite=name)
    return runners[name]()
