"""
GALLAIKIT Catalog

文献相关的图与模式目录。Petersen 图采用固定标号：
外圈 0–4，内部五角星 5–9，辐条 i ↔ i+5。
"""

from typing import Callable, Literal, Optional

from pydantic import BaseModel, Field

from gallaikit.graph.graph import Graph
from gallaikit.graph.pattern import MultigraphPattern


class CatalogEntry(BaseModel):
    """目录条目

    Attributes:
        name: 标识符
        kind: graph / pattern
        provenance: 来源说明
        known: 已知不变量（由测试断言，从不假设）
    """
    name: str = Field(description="标识符")
    kind: Literal["graph", "pattern"] = Field(description="类别")
    provenance: str = Field(description="来源说明")
    known: dict[str, int] = Field(default_factory=dict, description="已知不变量")

    model_config = {"frozen": True}


# ============================================================================
# 图
# ============================================================================

def petersen() -> Graph:
    """Petersen 图：10 顶点、15 边、3-正则、围长 5"""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(n=10, edges=tuple(edges))


def modified_petersen() -> Graph:
    """删除 Petersen 图的顶点 9，并为其三个邻居 4、6、7 各挂一片叶子

    叶子编号 9 → 4、10 → 6、11 → 7；共 12 顶点，Gal = 2。
    """
    base = petersen()
    removed = 9
    hosts = base.neighbors(removed)
    edges = [e for e in base.edges if removed not in e]
    for offset, host in enumerate(hosts):
        edges.append((9 + offset, host))
    return Graph(n=12, edges=tuple(edges))


def path_graph(n: int) -> Graph:
    """P_n"""
    return Graph(n=n, edges=tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """C_n（n ≥ 3）"""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n=n, edges=tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    """K_n"""
    return Graph(n=n, edges=tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}：左侧 0..a-1，右侧 a..a+b-1"""
    return Graph(n=a + b, edges=tuple((i, a + j) for i in range(a) for j in range(b)))


def star_graph(k: int) -> Graph:
    """K_{1,k}，中心为 0"""
    return Graph(n=k + 1, edges=tuple((0, i) for i in range(1, k + 1)))


def triangles_joined(path_edges: int = 1) -> Graph:
    """两个三角形 {0,1,2}、{3,4,5} 由一条 2→3 的路相连

    path_edges 为连接路的边数（≥ 1），中间顶点编号从 6 开始。
    最长圈恰为两个三角形，互不相交。
    """
    if path_edges < 1:
        raise ValueError("path_edges must be >= 1")
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    inner = list(range(6, 6 + path_edges - 1))
    chain = [2] + inner + [3]
    edges.extend(zip(chain, chain[1:]))
    return Graph(n=6 + len(inner), edges=tuple(edges))


def cliques_sharing_vertex(a: int, b: int) -> Graph:
    """K_a 与 K_b 共享一个割点（编号 a-1）"""
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    right = [a - 1] + list(range(a, a + b - 1))
    edges.extend((x, y) for i, x in enumerate(right) for y in right[i + 1:])
    return Graph(n=a + b - 1, edges=tuple(edges))


def short_crossing(length: int = 12) -> Graph:
    """C_l（0..l-1）加一个顶点 l，连接 v_k 与 v_{2k}，k = l // 4

    P1 = v_0..v_k 与 P3 = v_{2k}..v_{3k} 之间的横跨路 v_k, l, v_{2k} 长 2，
    比圈上距离 k 短，正好满足 ‖T‖+1 < |P2|+2 的临界情形（l = 12）。
    """
    if length < 8:
        raise ValueError(f"length must be >= 8, got {length}")
    k = length // 4
    edges = [(i, (i + 1) % length) for i in range(length)]
    edges.extend([(k, length), (length, 2 * k)])
    return Graph(n=length + 1, edges=tuple(edges))


# ============================================================================
# 模式
# ============================================================================

def k2() -> MultigraphPattern:
    """K2：路径即 K2-细分"""
    return MultigraphPattern(w=2, edges=((0, 1),), name="K2")


def c1() -> MultigraphPattern:
    """C1：一个顶点一个自环，圈即 C1-细分"""
    return MultigraphPattern(w=1, edges=((0, 0),), name="C1")


def path_pattern(k: int = 2) -> MultigraphPattern:
    """k 条边的路径模式"""
    return MultigraphPattern(
        w=k + 1, edges=tuple((i, i + 1) for i in range(k)), name=f"P{k + 1}"
    )


def star_pattern(k: int) -> MultigraphPattern:
    """K_{1,k}，中心为 0"""
    return MultigraphPattern(
        w=k + 1, edges=tuple((0, i) for i in range(1, k + 1)), name=f"K1,{k}"
    )


def double_edge() -> MultigraphPattern:
    """两顶点两条平行边"""
    return MultigraphPattern(w=2, edges=((0, 1), (0, 1)), name="double")


def theta_pattern() -> MultigraphPattern:
    """两顶点三条平行边"""
    return MultigraphPattern(w=2, edges=((0, 1), (0, 1), (0, 1)), name="theta")


def pattern_catalog() -> list[MultigraphPattern]:
    """K2、C1、P3、K1,k（k ≤ 4）、双边、theta"""
    return [
        k2(),
        c1(),
        path_pattern(2),
        star_pattern(1),
        star_pattern(2),
        star_pattern(3),
        star_pattern(4),
        double_edge(),
        theta_pattern(),
    ]


_PATTERNS: dict[str, Callable[[], MultigraphPattern]] = {
    "K2": k2,
    "C1": c1,
    "P3": lambda: path_pattern(2),
    "P4": lambda: path_pattern(3),
    "K1,2": lambda: star_pattern(2),
    "K1,3": lambda: star_pattern(3),
    "K1,4": lambda: star_pattern(4),
    "double": double_edge,
    "theta": theta_pattern,
}

_GRAPHS: dict[str, Callable[[], Graph]] = {
    "petersen": petersen,
    "modified_petersen": modified_petersen,
    "triangles_joined": lambda: triangles_joined(2),
    "cliques_sharing_vertex": lambda: cliques_sharing_vertex(4, 4),
    "k33": lambda: complete_bipartite(3, 3),
    "short_crossing": short_crossing,
}

_ENTRIES: list[CatalogEntry] = [
    CatalogEntry(
        name="petersen",
        kind="graph",
        provenance="Petersen graph, outer 0-4, inner pentagram 5-9, spokes i~i+5",
        known={"n": 10, "m": 15, "girth": 5, "connectivity": 3, "longest_cycle": 9},
    ),
    CatalogEntry(
        name="modified_petersen",
        kind="graph",
        provenance="Petersen minus vertex 9, leaves 9,10,11 on its neighbours 4,6,7",
        known={"n": 12, "leaves": 3, "gallai": 2},
    ),
    CatalogEntry(
        name="triangles_joined",
        kind="graph",
        provenance="two triangles joined by a 2-edge path",
        known={"n": 7, "connectivity": 1, "longest_cycle": 3},
    ),
    CatalogEntry(
        name="cliques_sharing_vertex",
        kind="graph",
        provenance="K4 and K4 glued at a cut vertex",
        known={"n": 7, "connectivity": 1},
    ),
    CatalogEntry(
        name="k33",
        kind="graph",
        provenance="complete bipartite K3,3",
        known={"n": 6, "connectivity": 3},
    ),
    CatalogEntry(
        name="short_crossing",
        kind="graph",
        provenance="12-cycle with a 2-edge crossing between opposite quarter arcs",
        known={"n": 13, "longest_cycle": 12},
    ),
] + [
    CatalogEntry(name=name, kind="pattern", provenance="pattern catalog")
    for name in _PATTERNS
]


def catalog_entries() -> list[CatalogEntry]:
    """全部目录条目"""
    return list(_ENTRIES)


def get_graph(name: str) -> Optional[Graph]:
    """按名称取图（支持 P<n>、C<n>、K<n> 形式）"""
    if name in _GRAPHS:
        return _GRAPHS[name]()
    if len(name) > 1 and name[1:].isdigit():
        size = int(name[1:])
        if name[0] == "P":
            return path_graph(size)
        if name[0] == "C":
            return cycle_graph(size)
        if name[0] == "K":
            return complete_graph(size)
    return None


def get_pattern(name: str) -> Optional[MultigraphPattern]:
    """按名称取模式"""
    factory = _PATTERNS.get(name)
    return factory() if factory else None
