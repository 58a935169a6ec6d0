"""
GALLAIKIT Graph 测试
"""

import networkx as nx
import pytest

from gallaikit.constructions.catalog import cycle_graph, path_graph, petersen
from gallaikit.exceptions import InvalidVertexError
from gallaikit.graph.graph import Graph, bits_of, mask_of


class TestGraphModel:
    """测试 Graph 模型"""

    def test_edges_normalized_and_sorted(self):
        """测试边规范化为 u < v 并排序"""
        g = Graph(n=4, edges=((3, 2), (1, 0), (2, 1)))
        assert g.edges == ((0, 1), (1, 2), (2, 3))
        assert g.m == 3

    def test_rejects_loop(self):
        """测试拒绝自环"""
        with pytest.raises(ValueError, match="loop"):
            Graph(n=2, edges=((1, 1),))

    def test_rejects_duplicate_edge(self):
        """测试拒绝重复边"""
        with pytest.raises(ValueError, match="duplicate"):
            Graph(n=2, edges=((0, 1), (1, 0)))

    def test_rejects_out_of_range(self):
        """测试拒绝越界顶点"""
        with pytest.raises(ValueError, match="out of range"):
            Graph(n=2, edges=((0, 2),))

    def test_frozen(self):
        """测试不可变"""
        g = path_graph(3)
        with pytest.raises(Exception):
            g.n = 5

    def test_serialization_excludes_private_masks(self):
        """测试序列化不含私有邻接掩码"""
        g = path_graph(3)
        assert set(g.model_dump()) == {"n", "edges"}


class TestGraphQueries:
    """测试基本查询"""

    def setup_method(self):
        """每个测试前初始化"""
        self.g = petersen()

    def test_has_edge_symmetric(self):
        """测试邻接对称"""
        assert self.g.has_edge(0, 1)
        assert self.g.has_edge(1, 0)
        assert not self.g.has_edge(0, 2)
        assert not self.g.has_edge(0, 99)

    def test_degrees(self):
        """测试 Petersen 图 3-正则"""
        assert all(self.g.degree(v) == 3 for v in range(10))
        assert self.g.min_degree() == 3

    def test_neighbors_sorted(self):
        """测试邻居升序"""
        assert self.g.neighbors(0) == (1, 4, 5)

    def test_check_vertex(self):
        """测试顶点编号验证"""
        self.g.check_vertex(9)
        with pytest.raises(InvalidVertexError):
            self.g.check_vertex(10)
        with pytest.raises(InvalidVertexError):
            self.g.check_vertex(-1)

    def test_connected(self):
        """测试连通性"""
        assert self.g.is_connected()
        assert Graph(n=1).is_connected()
        assert not Graph(n=3, edges=((0, 1),)).is_connected()

    def test_components_after_removal(self):
        """测试删除顶点后的分量"""
        comps = path_graph(5).components(removed=[2])
        assert comps == [frozenset({0, 1}), frozenset({3, 4})]

    def test_shortest_path(self):
        """测试 BFS 最短路"""
        path = cycle_graph(6).shortest_path(0, 3)
        assert path is not None
        assert len(path) == 4
        assert path[0] == 0 and path[-1] == 3

    def test_shortest_path_respects_allowed(self):
        """测试 allowed 掩码限制"""
        g = cycle_graph(6)
        allowed = mask_of([0, 5, 4, 3])
        assert g.shortest_path(0, 3, allowed) == [0, 5, 4, 3]
        assert g.shortest_path(0, 3, mask_of([0, 3])) is None


class TestDerivedGraphs:
    """测试派生图"""

    def test_without_relabels(self):
        """测试删除顶点并重新编号"""
        h, keep = path_graph(5).without([0, 2])
        assert keep == (1, 3, 4)
        assert h.n == 3
        assert h.edges == ((1, 2),)

    def test_with_edge(self):
        """测试添加边"""
        g = path_graph(3)
        assert g.with_edge(0, 2).m == 3
        assert g.with_edge(0, 1) is g

    def test_to_networkx(self):
        """测试转换为 networkx"""
        nxg = petersen().to_networkx()
        assert nxg.number_of_nodes() == 10
        assert nxg.number_of_edges() == 15
        assert nx.is_isomorphic(nxg, nx.petersen_graph())


class TestMasks:
    """测试位掩码工具"""

    def test_mask_round_trip(self):
        """测试掩码与顶点列表互转"""
        assert mask_of([0, 3]) == 0b1001
        assert bits_of(0b1001) == [0, 3]
        assert bits_of(0) == []
