"""
GALLAIKIT 横截集构造测试
"""

from fractions import Fraction

import pytest

from gallaikit.constructions.catalog import c1, cycle_graph, k2, path_graph, star_graph, triangles_joined
from gallaikit.exceptions import NotPairwiseIntersectingError
from gallaikit.procedures import reason_codes
from gallaikit.procedures.assembly import build_transversal
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.transversal.tau import is_transversal
from gallaikit.utils.exact import Threshold


class TestBuildTransversal:
    """测试构造流程"""

    def test_path_through_pretransversal(self):
        """测试 P5：预横截循环吸收全部顶点，S = Y"""
        result = build_transversal(path_graph(5), k2())
        assert result.vertices == (1,)
        assert result.y == (1,)
        assert result.x_size == 5
        assert result.cycle is None
        assert not result.fallback
        assert result.within_bound
        assert result.theta == "auto(n=5)"

    def test_certificates_recheck(self):
        """测试所有过程证书可复核"""
        result = build_transversal(path_graph(5), k2())
        assert result.certificates
        assert all(c.verify() for c in result.certificates)
        assert all(line.startswith("step=extend_pretransversal") for line in result.trace_lines())

    def test_fallback_when_tau_small(self):
        """测试 τ 不超过阈值时回退到精确命中集"""
        graph = cycle_graph(5)
        result = build_transversal(graph, c1())
        assert result.fallback
        assert result.fallback_reason == reason_codes.TAU_BELOW_THRESHOLD
        assert result.size == 1
        assert result.cycle is None
        assert result.trace[-1].step == "base_cycle"
        assert is_transversal(result.vertices, enumerate_maximum(graph, c1()))

    def test_explicit_theta_label(self):
        """测试显式阈值的来源说明"""
        result = build_transversal(path_graph(5), k2(), theta=Threshold.rational(Fraction(3, 2)))
        assert result.theta == "3/2"
        assert is_transversal(result.vertices, enumerate_maximum(path_graph(5), k2()))

    def test_empty_family(self):
        """测试无成员时横截集为空"""
        result = build_transversal(star_graph(3), c1())
        assert result.size == 0
        assert result.certificates == ()

    def test_not_pairwise(self):
        """测试不两两相交的族报错"""
        with pytest.raises(NotPairwiseIntersectingError) as exc_info:
            build_transversal(triangles_joined(), c1())
        assert exc_info.value.witness[0] == frozenset({0, 1, 2})
