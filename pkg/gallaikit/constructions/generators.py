"""
GALLAIKIT Generators

穷举与随机图生成器：
- all_connected_graphs: 按同构去重的全部连通图（n ≤ 8）
- all_trees: 按同构去重的全部树
- random_connected: 由种子决定的随机连通图
"""

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np
import structlog

from gallaikit.graph.graph import Graph

logger = structlog.get_logger(__name__)

MAX_EXHAUSTIVE_N = 8
MAX_TREE_N = 12


def _refined_cells(graph: Graph) -> list[list[int]]:
    """颜色细化得到的有序顶点划分（同构不变）"""
    colors = [graph.degree(v) for v in range(graph.n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in graph.neighbors(v))))
            for v in range(graph.n)
        ]
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranks[s] for s in signatures]
        if len(set(refined)) == len(set(colors)):
            colors = refined
            break
        colors = refined
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(graph: Graph) -> tuple[int, tuple[int, ...]]:
    """规范形式：在保持细化划分次序的全部标号下，上三角邻接位串的最小值

    Returns:
        (key, order)，order[i] 为规范标号 i 对应的原顶点
    """
    n = graph.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    cells = _refined_cells(graph)
    best_key = -1
    best_order: tuple[int, ...] = tuple(range(n))
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = tuple(v for part in choice for v in part)
        key = 0
        for i, j in pairs:
            key = (key << 1) | graph.has_edge(order[i], order[j])
        if best_key < 0 or key < best_key:
            best_key = key
            best_order = order
    return best_key, best_order


def canonical_graph(graph: Graph) -> Graph:
    """按规范标号重新编号后的图"""
    _, order = canonical_form(graph)
    position = {v: i for i, v in enumerate(order)}
    return Graph(n=graph.n, edges=tuple((position[u], position[v]) for u, v in graph.edges))


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(n=1, edges=()),)
    found: dict[int, Graph] = {}
    for base in _connected_graphs(n - 1):
        new = n - 1
        for size in range(1, n):
            for subset in itertools.combinations(range(n - 1), size):
                g = Graph(n=n, edges=base.edges + tuple((v, new) for v in subset))
                key, _ = canonical_form(g)
                if key not in found:
                    found[key] = canonical_graph(g)
    logger.debug("connected_graphs_generated", n=n, count=len(found))
    return tuple(found[k] for k in sorted(found))


def all_connected_graphs(n: int) -> tuple[Graph, ...]:
    """n 个顶点的全部连通简单图，同构意义下各一次

    每个连通图都有一个非割点，删去后仍连通，因此由 n-1 顶点的
    连通图添加一个顶点并连接到非空子集即可得到全部。

    Raises:
        ValueError: n < 1 或 n > 8
    """
    if n < 1 or n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"n must be in 1..{MAX_EXHAUSTIVE_N}, got {n}")
    return _connected_graphs(n)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(n=1, edges=()),)
    found: dict[int, Graph] = {}
    for base in _trees(n - 1):
        for v in range(n - 1):
            g = Graph(n=n, edges=base.edges + ((v, n - 1),))
            key, _ = canonical_form(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def all_trees(n: int) -> tuple[Graph, ...]:
    """n 个顶点的全部树（同构意义下）"""
    if n < 1 or n > MAX_TREE_N:
        raise ValueError(f"n must be in 1..{MAX_TREE_N}, got {n}")
    return _trees(n)


def random_connected(n: int, edge_prob: Fraction | int | str, seed: int) -> Graph:
    """由种子决定的随机连通图

    先生成随机生成树，再以有理概率 p/q 独立加入其余每条边。

    Example:
        >>> random_connected(6, Fraction(1, 2), 7) == random_connected(6, Fraction(1, 2), 7)
        True
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    prob = Fraction(edge_prob)
    if not 0 <= prob <= 1:
        raise ValueError(f"edge_prob must be in [0, 1], got {prob}")
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        parent = int(order[int(rng.integers(i))])
        child = int(order[i])
        edges.add((min(parent, child), max(parent, child)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in edges:
                continue
            if int(rng.integers(prob.denominator)) < prob.numerator:
                edges.add((u, v))
    return Graph(n=n, edges=tuple(edges))
