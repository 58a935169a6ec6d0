"""
GALLAIKIT 细分结构检查测试
"""

import pytest

from gallaikit.constructions.catalog import c1, complete_graph, double_edge, k2, path_graph, path_pattern
from gallaikit.graph.graph import Graph
from gallaikit.subdivision.models import Subdivision
from gallaikit.subdivision.verify import is_subdivision


class TestIsSubdivision:
    """测试 is_subdivision"""

    def test_valid_cycle(self):
        """测试合法圈"""
        sub = Subdivision(branch_map=(0,), edge_paths=((0, 1, 2, 0),))
        check = is_subdivision(complete_graph(4), c1(), sub)
        assert check.ok
        assert bool(check)
        assert check.violation is None

    def test_trivial_path_on_edgeless_graph(self):
        """测试无边图上的平凡路径"""
        sub = Subdivision(branch_map=(1, 1), edge_paths=((1,),))
        assert is_subdivision(Graph(n=2), k2(), sub).ok

    def test_trivial_path_needs_edgeless_host(self):
        """测试有边时单顶点路径不合法"""
        sub = Subdivision(branch_map=(1, 1), edge_paths=((1,),))
        check = is_subdivision(path_graph(2), k2(), sub)
        assert check.violation == "branch injectivity"

    @pytest.mark.parametrize(
        "graph, pattern, sub, violation",
        [
            (
                complete_graph(3), k2(),
                Subdivision(branch_map=(0, 1), edge_paths=((0, 1), (0, 2, 1))),
                "shape",
            ),
            (
                complete_graph(3), k2(),
                Subdivision(branch_map=(0, 1), edge_paths=((0, 2),)),
                "endpoint match",
            ),
            (
                complete_graph(3), c1(),
                Subdivision(branch_map=(0,), edge_paths=((0, 1, 0),)),
                "edge count",
            ),
            (
                complete_graph(3), k2(),
                Subdivision(branch_map=(0, 1), edge_paths=((0, 1, 0, 1),)),
                "route simplicity",
            ),
            (
                path_graph(3), k2(),
                Subdivision(branch_map=(0, 2), edge_paths=((0, 2),)),
                "host adjacency",
            ),
            (
                complete_graph(5), path_pattern(2),
                Subdivision(branch_map=(0, 1, 2), edge_paths=((0, 3, 1), (1, 3, 2))),
                "interior disjointness",
            ),
            (
                complete_graph(5), path_pattern(2),
                Subdivision(branch_map=(0, 1, 2), edge_paths=((0, 2, 1), (1, 4, 2))),
                "interior disjointness",
            ),
            (
                complete_graph(3), double_edge(),
                Subdivision(branch_map=(0, 1), edge_paths=((0, 1), (0, 1))),
                "edge distinctness",
            ),
            (
                complete_graph(3), k2(),
                Subdivision(branch_map=(0, 7), edge_paths=((0, 7),)),
                "branch injectivity",
            ),
        ],
    )
    def test_first_violation(self, graph, pattern, sub, violation):
        """测试报告第一个被违反的不变量"""
        check = is_subdivision(graph, pattern, sub)
        assert not check.ok
        assert check.violation == violation
        assert check.detail
