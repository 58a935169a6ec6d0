"""
GALLAIKIT Menger 连接器测试

最大连接器与最小分隔集互为对偶，与朴素分隔集枚举交叉核对。
"""

import pytest

from gallaikit.constructions.catalog import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen,
    star_graph,
)
from gallaikit.constructions.generators import all_connected_graphs
from gallaikit.exceptions import EmptyTerminalSetError, InvalidConnectorError, InvalidVertexError
from gallaikit.graph.graph import Graph
from gallaikit.graph.paths import PathSeq
from gallaikit.menger.flow import (
    connectivity,
    local_connectivity,
    max_connector,
    min_separator,
    separates,
    validate_connector,
)
from gallaikit.tests.oracles import naive_local_connectivity

TERMINAL_CASES = [
    (g, a, b)
    for n in (4, 5)
    for g in all_connected_graphs(n)
    for a, b in (({0}, {n - 1}), ({0, 1}, {n - 2, n - 1}), ({0}, {0, 1}))
]


class TestMaxConnector:
    """测试最大连接器"""

    def test_complete_bipartite(self):
        """测试 K3,3 两侧之间三条边"""
        connector = max_connector(complete_bipartite(3, 3), {0, 1, 2}, {3, 4, 5})
        assert connector.size == 3
        assert all(p.length == 1 for p in connector.paths)
        assert connector.vertex_set() == frozenset(range(6))

    def test_shared_terminal_is_trivial_path(self):
        """测试 A∩B 中的顶点构成单顶点路径"""
        connector = max_connector(path_graph(3), {0, 1}, {1, 2})
        assert connector.size == 1
        assert connector.paths[0].vertices == (1,)

    def test_paths_are_trimmed(self):
        """测试路径只在端点与 A、B 相交"""
        connector = max_connector(path_graph(5), {0, 1}, {3, 4})
        assert connector.size == 1
        assert connector.paths[0].vertices == (1, 2, 3)

    def test_path_starting_at(self):
        """测试按起点取路径"""
        connector = max_connector(cycle_graph(6), {0}, {3})
        assert connector.size == 1
        assert connector.path_starting_at(0) is not None
        assert connector.path_starting_at(3) is None

    def test_check_duality_passes(self):
        """测试对偶检查"""
        connector = max_connector(petersen(), {0, 1}, {7, 8}, check_duality=True)
        assert connector.size == 2

    @pytest.mark.parametrize("graph, a, b", TERMINAL_CASES)
    def test_duality_against_oracle(self, graph, a, b):
        """测试连接器、分隔集与朴素枚举三者一致"""
        connector = max_connector(graph, a, b)
        separator = min_separator(graph, a, b)
        expected = naive_local_connectivity(graph, set(a), set(b))
        assert connector.size == separator.size == expected
        assert separates(graph, separator.vertices, a, b)
        validate_connector(graph, connector.paths, a, b)

    def test_empty_terminals(self):
        """测试空端点集"""
        with pytest.raises(EmptyTerminalSetError):
            max_connector(path_graph(3), set(), {2})
        with pytest.raises(EmptyTerminalSetError):
            min_separator(path_graph(3), {0}, ())

    def test_invalid_terminal(self):
        """测试越界端点"""
        with pytest.raises(InvalidVertexError):
            max_connector(path_graph(3), {0}, {9})

    def test_disconnected_terminals(self):
        """测试不连通时连接器为空"""
        graph = Graph(n=4, edges=((0, 1), (2, 3)))
        assert max_connector(graph, {0}, {3}).size == 0
        assert min_separator(graph, {0}, {3}).size == 0


class TestMinSeparator:
    """测试最小分隔集"""

    def test_path_middle(self):
        """测试路径中点"""
        assert min_separator(path_graph(3), {0}, {2}).vertices == (1,)

    def test_lexicographically_smallest(self):
        """测试选取字典序最小的分隔集"""
        sep = min_separator(complete_bipartite(3, 3), {0, 1, 2}, {3, 4, 5})
        assert sep.vertices == (0, 1, 2)
        assert sep.vertex_set() == frozenset({0, 1, 2})

    def test_check_duality(self):
        """测试对偶检查通过"""
        sep = min_separator(cycle_graph(8), {0}, {4}, check_duality=True)
        assert sep.size == 2

    def test_separates(self):
        """测试分隔判定"""
        graph = cycle_graph(6)
        assert separates(graph, (1, 5), {0}, {3})
        assert not separates(graph, (1,), {0}, {3})
        assert separates(graph, (0,), {0}, {3})


class TestValidateConnector:
    """测试连接器校验"""

    def setup_method(self):
        """测试前准备"""
        self.graph = cycle_graph(6)

    def test_accepts_disjoint_paths(self):
        """测试接受合法连接器"""
        paths = [PathSeq(vertices=(0, 1, 2, 3)), PathSeq(vertices=(5, 4))]
        connector = validate_connector(self.graph, paths, {0, 5}, {3, 4})
        assert connector.size == 2
        assert connector.paths[0].vertices == (0, 1, 2, 3)

    def test_rejects_missing_edge(self):
        """测试缺边"""
        with pytest.raises(InvalidConnectorError, match="not adjacent"):
            validate_connector(self.graph, [PathSeq(vertices=(0, 2))], {0}, {2})

    def test_rejects_inner_terminal(self):
        """测试路径内部碰到 A"""
        with pytest.raises(InvalidConnectorError, match="only at its start"):
            validate_connector(self.graph, [PathSeq(vertices=(0, 1, 2))], {0, 1}, {2})

    def test_rejects_crossing_paths(self):
        """测试路径相交"""
        paths = [PathSeq(vertices=(0, 1, 2)), PathSeq(vertices=(3, 2))]
        with pytest.raises(InvalidConnectorError, match="meets another path"):
            validate_connector(self.graph, paths, {0, 3}, {2})


class TestConnectivity:
    """测试点连通度"""

    @pytest.mark.parametrize(
        "graph, expected",
        [
            (complete_graph(5), 4),
            (complete_graph(2), 1),
            (petersen(), 3),
            (cycle_graph(7), 2),
            (path_graph(4), 1),
            (star_graph(4), 1),
            (complete_bipartite(3, 4), 3),
            (Graph(n=1), 0),
            (Graph(n=3, edges=((0, 1),)), 0),
        ],
    )
    def test_known_values(self, graph, expected):
        """测试已知图的连通度"""
        assert connectivity(graph) == expected

    def test_local_connectivity(self):
        """测试局部连通度"""
        assert local_connectivity(cycle_graph(6), 0, 3) == 2
        assert local_connectivity(petersen(), 0, 2) == 3

    def test_local_connectivity_isolated(self):
        """测试孤立顶点的局部连通度"""
        assert local_connectivity(Graph(n=3, edges=((0, 1),)), 0, 2) == 0
