"""
GALLAIKIT 最大细分搜索测试

专用搜索与通用搜索都和朴素枚举交叉核对。
"""

import pytest

from gallaikit.constructions.catalog import (
    c1,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_edge,
    k2,
    path_graph,
    path_pattern,
    petersen,
    star_graph,
    theta_pattern,
)
from gallaikit.constructions.generators import all_connected_graphs
from gallaikit.exceptions import SearchBudgetExceededError, SearchException
from gallaikit.graph.graph import Graph
from gallaikit.subdivision.engine import enumerate_maximum, is_c1, is_k2
from gallaikit.subdivision.paths import longest_cycles, longest_paths
from gallaikit.subdivision.verify import is_subdivision
from gallaikit.tests.oracles import naive_longest_cycles, naive_longest_paths

SMALL_GRAPHS = [g for n in range(1, 7) for g in all_connected_graphs(n)]
GENERIC_GRAPHS = [g for n in range(2, 6) for g in all_connected_graphs(n)]


class TestPatternRouting:
    """测试模式识别"""

    def test_is_k2(self):
        """测试 K2 识别"""
        assert is_k2(k2())
        assert not is_k2(path_pattern(2))

    def test_is_c1(self):
        """测试 C1 识别"""
        assert is_c1(c1())
        assert not is_c1(double_edge())


class TestLongestPaths:
    """测试最长路搜索"""

    @pytest.mark.parametrize("graph", SMALL_GRAPHS)
    def test_matches_oracle(self, graph):
        """测试与朴素枚举一致"""
        best, sets = naive_longest_paths(graph)
        family = longest_paths(graph)
        assert family.edge_size == best
        assert set(family.vertex_sets) == sets

    def test_edgeless_graph_gives_trivial_paths(self):
        """测试无边图的平凡路径"""
        family = longest_paths(Graph(n=3))
        assert family.edge_size == 0
        assert family.mu == 1
        assert family.member_count == 3
        assert family.members[0].branch_map == (0, 0)

    def test_path_graph_single_member(self):
        """测试路径图只有一条最长路"""
        family = longest_paths(path_graph(6))
        assert family.member_count == 1
        assert family.members[0].edge_paths == ((0, 1, 2, 3, 4, 5),)

    def test_limit_truncates_members_only(self):
        """测试 limit 只截断 members"""
        family = longest_paths(complete_graph(4), limit=2)
        assert family.truncated
        assert len(family.members) == 2
        assert family.member_count == 12
        assert family.vertex_sets == (frozenset(range(4)),)

    def test_parallel_matches_serial(self):
        """测试并行搜索结果与串行一致"""
        serial = longest_paths(petersen())
        parallel = longest_paths(petersen(), jobs=2)
        assert parallel.edge_size == serial.edge_size
        assert parallel.vertex_sets == serial.vertex_sets
        assert parallel.member_count == serial.member_count

    def test_budget_exceeded(self):
        """测试超出预算时报告下界"""
        with pytest.raises(SearchBudgetExceededError) as exc_info:
            longest_paths(petersen(), node_budget=10)
        assert exc_info.value.nodes > 10

    def test_empty_host_rejected(self):
        """测试空宿主图"""
        with pytest.raises(SearchException):
            longest_paths(Graph(n=0))


class TestLongestCycles:
    """测试最长圈搜索"""

    @pytest.mark.parametrize("graph", SMALL_GRAPHS)
    def test_matches_oracle(self, graph):
        """测试与朴素枚举一致"""
        best, sets = naive_longest_cycles(graph)
        family = longest_cycles(graph)
        if best == 0:
            assert family.status == "acyclic"
            assert family.is_empty
        else:
            assert family.mu == best
            assert set(family.vertex_sets) == sets

    def test_petersen_is_not_hamiltonian(self):
        """测试 Petersen 图最长圈为 9"""
        family = longest_cycles(petersen())
        assert family.mu == 9
        assert family.edge_size == 9

    def test_cycle_members_are_closed(self):
        """测试圈成员为闭合路线"""
        family = longest_cycles(cycle_graph(5))
        assert family.member_count == 1
        route = family.members[0].edge_paths[0]
        assert route[0] == route[-1] == 0
        assert len(route) == 6

    def test_budget_exceeded(self):
        """测试超出预算"""
        with pytest.raises(SearchBudgetExceededError):
            longest_cycles(petersen(), node_budget=10)


class TestEnumerateMaximum:
    """测试通用入口"""

    @pytest.mark.parametrize("graph", GENERIC_GRAPHS)
    def test_generic_agrees_with_paths(self, graph):
        """测试通用搜索与最长路搜索一致"""
        auto = enumerate_maximum(graph, k2())
        generic = enumerate_maximum(graph, k2(), strategy="generic")
        assert generic.edge_size == auto.edge_size
        assert set(generic.vertex_sets) == set(auto.vertex_sets)

    @pytest.mark.parametrize("graph", GENERIC_GRAPHS)
    def test_generic_agrees_with_cycles(self, graph):
        """测试通用搜索与最长圈搜索一致"""
        auto = enumerate_maximum(graph, c1())
        generic = enumerate_maximum(graph, c1(), strategy="generic")
        assert generic.status == auto.status
        assert set(generic.vertex_sets) == set(auto.vertex_sets)

    def test_auto_keeps_pattern(self):
        """测试专用搜索返回调用方的模式"""
        pattern = k2()
        family = enumerate_maximum(path_graph(3), pattern)
        assert family.pattern == pattern

    def test_theta_in_k4(self):
        """测试 K4 中的 theta 细分"""
        family = enumerate_maximum(complete_graph(4), theta_pattern())
        assert family.edge_size == 5
        assert family.mu == 4
        assert family.member_count == 6
        assert family.vertex_sets == (frozenset(range(4)),)

    def test_p3_in_path_deduplicates_by_subgraph(self):
        """测试同一子图的不同分支选择只算一个成员"""
        family = enumerate_maximum(path_graph(5), path_pattern(2))
        assert family.edge_size == 4
        assert family.member_count == 1

    def test_double_edge_in_cycle(self):
        """测试 C5 中的双边细分为整个圈"""
        family = enumerate_maximum(cycle_graph(5), double_edge())
        assert family.edge_size == 5
        assert family.vertex_sets == (frozenset(range(5)),)

    def test_members_verify(self):
        """测试全部成员通过结构检查"""
        graph = complete_bipartite(3, 3)
        family = enumerate_maximum(graph, theta_pattern())
        assert family.edge_size == 7
        for member in family.members:
            assert is_subdivision(graph, theta_pattern(), member).ok

    def test_theta_needs_degree_three(self):
        """测试宿主没有 3 度顶点时族为空"""
        family = enumerate_maximum(cycle_graph(6), theta_pattern())
        assert family.status == "empty"

    def test_generic_k2_on_edgeless_graph_is_empty(self):
        """测试通用搜索在无边图上没有 K2-细分"""
        family = enumerate_maximum(Graph(n=3), k2(), strategy="generic")
        assert family.status == "empty"

    def test_generic_c1_on_tree_is_acyclic(self):
        """测试通用搜索在树上给出 acyclic"""
        family = enumerate_maximum(star_graph(3), c1(), strategy="generic")
        assert family.status == "acyclic"

    def test_generic_budget(self):
        """测试通用搜索超出预算"""
        with pytest.raises(SearchBudgetExceededError):
            enumerate_maximum(petersen(), theta_pattern(), node_budget=50)

    def test_empty_host_rejected(self):
        """测试空宿主图"""
        with pytest.raises(SearchException):
            enumerate_maximum(Graph(n=0), theta_pattern())
