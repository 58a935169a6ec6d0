"""
GALLAIKIT 圈手术测试
"""

from fractions import Fraction

import pytest

from gallaikit.constructions.catalog import (
    c1,
    cycle_graph,
    double_edge,
    k2,
    path_graph,
    petersen,
    short_crossing,
    triangles_joined,
)
from gallaikit.exceptions import NotPairwiseIntersectingError, ProcedureInputError
from gallaikit.graph.graph import Graph
from gallaikit.graph.paths import CycleSeq, PathSeq
from gallaikit.menger.flow import Connector, max_connector
from gallaikit.procedures import reason_codes
from gallaikit.procedures.cycles import base_cycle, enlarge_cycle, inner_path_stats, quarter, shrink_cycle
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.subdivision.models import Subdivision
from gallaikit.utils.exact import Threshold


def _square_with_tail() -> Graph:
    """C4 (0..3)，路径 4..9，连接边 0-4 与 1-9"""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(i, i + 1) for i in range(4, 9)]
    edges += [(0, 4), (1, 9)]
    return Graph(n=10, edges=tuple(edges))


class TestQuarter:
    """测试四等分"""

    def test_sizes(self):
        """测试各段顶点数"""
        parts = quarter(CycleSeq(vertices=tuple(range(12))))
        assert [len(p) for p in parts] == [4, 2, 4, 2]
        parts = quarter(CycleSeq(vertices=tuple(range(13))))
        assert [len(p) for p in parts] == [4, 2, 4, 3]
        assert parts[0] == (0, 1, 2, 3)


class TestShrinkCycle:
    """测试缩短"""

    def test_short_crossing(self):
        """测试横跨路径把 C12 缩成 11 个顶点"""
        outcome = shrink_cycle(short_crossing(12), CycleSeq(vertices=tuple(range(12))), Threshold.auto(13))
        assert outcome.ok
        assert outcome.cycle.length == 11
        assert outcome.certificate.verify()
        assert outcome.certificate.facts["quarters"] == [4, 2, 4, 2]

    def test_chordless_cycle(self):
        """测试无弦圈没有短横跨路径"""
        outcome = shrink_cycle(cycle_graph(12), CycleSeq(vertices=tuple(range(12))), Threshold.auto(12))
        assert not outcome.ok
        assert outcome.certificate.reason == reason_codes.NO_SHORT_CROSSING

    def test_too_short(self):
        """测试圈长小于 8"""
        outcome = shrink_cycle(cycle_graph(7), CycleSeq(vertices=tuple(range(7))), Threshold.auto(7))
        assert outcome.certificate.reason == reason_codes.CYCLE_TOO_SHORT
        assert "7" in outcome.certificate.explain()

    def test_not_a_cycle(self):
        """测试输入不是圈"""
        with pytest.raises(ProcedureInputError):
            shrink_cycle(path_graph(9), CycleSeq(vertices=tuple(range(9))), Threshold.auto(9))


class TestEnlargeCycle:
    """测试加长"""

    def setup_method(self):
        """测试前准备"""
        self.graph = _square_with_tail()
        self.cycle = CycleSeq(vertices=(0, 1, 2, 3))
        self.q = Subdivision(branch_map=(4, 9), edge_paths=(tuple(range(4, 10)),))

    def test_enlarges(self):
        """测试经由 Q 得到更长的圈"""
        connector = max_connector(self.graph, self.cycle.vertex_set(), self.q.vertex_set())
        outcome = enlarge_cycle(self.graph, self.cycle, self.q, connector, k2())
        assert outcome.ok
        assert outcome.cycle.length == 10
        assert outcome.certificate.facts["choice"] == 3
        assert outcome.certificate.verify()

    def test_single_path_fails_pigeonhole(self):
        """测试只有一条连接路径"""
        connector = Connector(paths=(PathSeq(vertices=(0, 4)),))
        outcome = enlarge_cycle(self.graph, self.cycle, self.q, connector, k2())
        assert not outcome.ok
        assert outcome.certificate.reason == reason_codes.PIGEONHOLE_UNMET

    def test_paths_not_exceeding_m_fail_pigeonhole(self):
        """测试 |T| = m 时即使两条路径落在同一 Q_e 上也失败"""
        edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
        edges += [(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (4, 9)]
        edges += [(0, 5), (1, 6)]
        graph = Graph(n=10, edges=tuple(edges))
        q = Subdivision(branch_map=(4, 7), edge_paths=((4, 5, 6, 7), (4, 9, 8, 7)))
        connector = Connector(paths=(PathSeq(vertices=(0, 5)), PathSeq(vertices=(1, 6))))

        outcome = enlarge_cycle(graph, self.cycle, q, connector, double_edge())

        assert not outcome.ok
        assert outcome.cycle is None
        assert outcome.certificate.reason == reason_codes.PIGEONHOLE_UNMET
        assert outcome.certificate.facts == {"paths": 2, "m": 2}
        assert not outcome.certificate.checks[0].holds
        assert outcome.certificate.verify()

    def test_short_route_violates_maximality(self):
        """测试 Q 的一段可被改道加长时报告非最大"""
        q = Subdivision(branch_map=(4, 6), edge_paths=((4, 5, 6),))
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (0, 4), (1, 6)]
        graph = Graph(n=7, edges=tuple(edges))
        connector = max_connector(graph, self.cycle.vertex_set(), q.vertex_set())
        outcome = enlarge_cycle(graph, self.cycle, q, connector, k2())
        assert not outcome.ok
        assert outcome.certificate.reason == reason_codes.MAXIMALITY_VIOLATED

    def test_q_meets_cycle(self):
        """测试 Q 与 C 相交"""
        q = Subdivision(branch_map=(0, 4), edge_paths=((0, 4),))
        with pytest.raises(ProcedureInputError):
            enlarge_cycle(self.graph, self.cycle, q, Connector(), k2())

    def test_inner_path_stats(self):
        """测试端点划分统计"""
        connector = max_connector(self.graph, self.cycle.vertex_set(), self.q.vertex_set())
        stats = inner_path_stats(self.q, connector, k2())
        assert stats.hits == (2,)
        assert stats.total_inner == 1
        assert stats.hit_edges == 1
        assert stats.inner[0][0].vertices == tuple(range(4, 10))
        assert stats.certificate.verify()


class TestBaseCycle:
    """测试基圈"""

    def test_petersen_with_small_theta(self):
        """测试 θ = 1 时 Petersen 图的基圈"""
        graph = petersen()
        family = enumerate_maximum(graph, c1())
        outcome = base_cycle(graph, family, Threshold.rational(1))
        assert outcome.ok
        assert outcome.cycle.length >= 5
        assert outcome.certificate.verify()
        assert outcome.certificate.facts["tau"] == 2

    def test_tau_below_threshold(self):
        """测试 τ 不超过 m²θ"""
        graph = petersen()
        outcome = base_cycle(graph, enumerate_maximum(graph, c1()), Threshold.auto(10))
        assert outcome.certificate.reason == reason_codes.TAU_BELOW_THRESHOLD

    def test_empty_family(self):
        """测试空族"""
        graph = path_graph(4)
        outcome = base_cycle(graph, enumerate_maximum(graph, c1()), Threshold.rational(Fraction(1, 2)))
        assert outcome.certificate.reason == reason_codes.EMPTY_FAMILY

    def test_not_pairwise(self):
        """测试不两两相交的族"""
        graph = triangles_joined()
        with pytest.raises(NotPairwiseIntersectingError) as exc_info:
            base_cycle(graph, enumerate_maximum(graph, c1()), Threshold.rational(1))
        assert exc_info.value.witness == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
