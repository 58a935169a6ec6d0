"""
GALLAIKIT Path / Cycle Algebra

路径与圈的表示及其代数运算：距离、圈上距离、较长弧、路径拼接。

下标约定：内部 0 起编号；圈上的 i⊕j 取模圈长。
"""

import math
from collections import deque
from typing import Iterable, Literal

from pydantic import BaseModel, Field, field_validator

from gallaikit.exceptions import (
    InvalidVertexError,
    NotAPathError,
    UndefinedConcatenationError,
)
from gallaikit.graph.graph import Graph


class PathSeq(BaseModel):
    """路径 P = v_1 … v_t

    Attributes:
        vertices: 互不相同的顶点序列（非空）
    """
    vertices: tuple[int, ...] = Field(min_length=1, description="顶点序列")

    model_config = {"frozen": True}

    @field_validator("vertices")
    @classmethod
    def vertices_must_be_distinct(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(v)) != len(v):
            raise ValueError("path vertices must be distinct")
        return v

    @property
    def length(self) -> int:
        """‖P‖ = 顶点数 - 1"""
        return len(self.vertices) - 1

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def reversed(self) -> "PathSeq":
        return PathSeq(vertices=self.vertices[::-1])

    def edge_list(self) -> list[tuple[int, int]]:
        return [
            (min(a, b), max(a, b))
            for a, b in zip(self.vertices, self.vertices[1:])
        ]


class CycleSeq(BaseModel):
    """圈 C = v_1 … v_l v_1

    Attributes:
        vertices: 至少 3 个互不相同的顶点，按圈序排列
    """
    vertices: tuple[int, ...] = Field(min_length=3, description="圈序顶点")

    model_config = {"frozen": True}

    @field_validator("vertices")
    @classmethod
    def vertices_must_be_distinct(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(v)) != len(v):
            raise ValueError("cycle vertices must be distinct")
        return v

    @property
    def length(self) -> int:
        """|C| = ‖C‖"""
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def position(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise InvalidVertexError(f"vertex {v} not on cycle") from None

    def edge_list(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [
            (min(vs[i], vs[(i + 1) % len(vs)]), max(vs[i], vs[(i + 1) % len(vs)]))
            for i in range(len(vs))
        ]

    def arc(self, a: int, b: int, direction: Literal[1, -1]) -> tuple[int, ...]:
        """从 a 沿 direction 方向走到 b 的弧（含两端）"""
        i, j = self.position(a), self.position(b)
        size = len(self.vertices)
        out = [self.vertices[i]]
        k = i
        while k != j:
            k = (k + direction) % size
            out.append(self.vertices[k])
        return tuple(out)

    def canonical(self) -> tuple[int, ...]:
        """旋转/反转无关的规范形式：最小顶点开头，第二个顶点取较小方向"""
        vs = self.vertices
        i = vs.index(min(vs))
        forward = vs[i:] + vs[:i]
        backward = (forward[0],) + tuple(reversed(forward[1:]))
        return min(forward, backward)


# ============================================================================
# 构造（带宿主图验证）
# ============================================================================

def make_path(graph: Graph, vertices: Iterable[int]) -> PathSeq:
    """在宿主图中构造并验证路径

    Raises:
        NotAPathError: 顶点重复或相邻顶点之间无边
    """
    seq = tuple(vertices)
    if not seq:
        raise NotAPathError("empty vertex sequence")
    for v in seq:
        graph.check_vertex(v)
    if len(set(seq)) != len(seq):
        raise NotAPathError(f"repeated vertex in {list(seq)}")
    for a, b in zip(seq, seq[1:]):
        if not graph.has_edge(a, b):
            raise NotAPathError(f"{a} and {b} are not adjacent")
    return PathSeq(vertices=seq)


def make_cycle(graph: Graph, vertices: Iterable[int]) -> CycleSeq:
    """在宿主图中构造并验证圈

    Raises:
        NotAPathError: 少于 3 个顶点、顶点重复或缺边
    """
    seq = tuple(vertices)
    if len(seq) < 3:
        raise NotAPathError(f"cycle needs at least 3 vertices, got {len(seq)}")
    make_path(graph, seq)
    if not graph.has_edge(seq[-1], seq[0]):
        raise NotAPathError(f"{seq[-1]} and {seq[0]} are not adjacent (cycle not closed)")
    return CycleSeq(vertices=seq)


# ============================================================================
# 距离
# ============================================================================

def distance(graph: Graph, x: int, y: int) -> int | float:
    """d_G(x, y)，不连通时返回 math.inf"""
    graph.check_vertex(x)
    graph.check_vertex(y)
    if x == y:
        return 0
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in graph.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                if w == y:
                    return dist[w]
                queue.append(w)
    return math.inf


def cycle_distance(cycle: CycleSeq, x: int, y: int) -> int:
    """d_C(x, y)：沿圈两条弧中较短者的长度"""
    i, j = cycle.position(x), cycle.position(y)
    d = abs(i - j)
    return min(d, cycle.length - d)


def longer_arc(cycle: CycleSeq, vi: int, vj: int) -> PathSeq:
    """v_i C v_j：两条 v_i,v_j 弧中较长者，平局取第一条

    第一条为 v_i(C - v_{j⊕1})v_j，即沿圈序正向 v_i, v_{i⊕1}, …, v_j；
    第二条为 v_i(C - v_{i⊕1})v_j，即反向 v_i, v_{i⊕(l-1)}, …, v_j。

    Example:
        >>> c = CycleSeq(vertices=(0, 1, 2, 3, 4, 5))
        >>> longer_arc(c, 0, 3).vertices
        (0, 1, 2, 3)
    """
    if vi == vj:
        raise InvalidVertexError(f"longer_arc needs distinct vertices, got {vi} twice")
    forward = cycle.arc(vi, vj, 1)
    backward = cycle.arc(vi, vj, -1)
    chosen = forward if len(forward) >= len(backward) else backward
    return PathSeq(vertices=chosen)


def shorter_arc(cycle: CycleSeq, vi: int, vj: int) -> PathSeq:
    """与 longer_arc 互补的另一条弧"""
    if vi == vj:
        raise InvalidVertexError(f"shorter_arc needs distinct vertices, got {vi} twice")
    forward = cycle.arc(vi, vj, 1)
    backward = cycle.arc(vi, vj, -1)
    chosen = backward if len(forward) >= len(backward) else forward
    return PathSeq(vertices=chosen)


# ============================================================================
# 路径拼接与截取
# ============================================================================

def concat_paths(graph: Graph, p: PathSeq, vi: int, wj: int, q: PathSeq) -> PathSeq:
    """P v_i w_j Q

    - v_i w_j ∈ E(G) 时为 v_1…v_i w_j…w_s
    - v_i = w_j 时为 v_1…v_i w_{j+1}…w_s
    - 其余情况无定义

    Raises:
        InvalidVertexError: v_i 不在 P 上或 w_j 不在 Q 上
        UndefinedConcatenationError: 既不相邻也不相同
        NotAPathError: 结果出现重复顶点
    """
    if vi not in p.vertices:
        raise InvalidVertexError(f"vertex {vi} not on P")
    if wj not in q.vertices:
        raise InvalidVertexError(f"vertex {wj} not on Q")
    head = p.vertices[: p.vertices.index(vi) + 1]
    j = q.vertices.index(wj)
    if vi == wj:
        tail = q.vertices[j + 1:]
    elif graph.has_edge(vi, wj):
        tail = q.vertices[j:]
    else:
        raise UndefinedConcatenationError(
            f"cannot join {vi} to {wj}: neither equal nor adjacent"
        )
    seq = head + tail
    if len(set(seq)) != len(seq):
        raise NotAPathError(f"not a path: repeated vertex in {list(seq)}")
    return PathSeq(vertices=seq)


def path_segment(p: PathSeq, a: int, b: int) -> PathSeq:
    """a P b：P 上从 a 到 b 的子路径（按 a → b 的方向）"""
    if a not in p.vertices or b not in p.vertices:
        raise InvalidVertexError(f"vertices {a}, {b} must both lie on P")
    i, j = p.vertices.index(a), p.vertices.index(b)
    if i <= j:
        return PathSeq(vertices=p.vertices[i:j + 1])
    return PathSeq(vertices=p.vertices[j:i + 1][::-1])


def complement_arc(cycle: CycleSeq, q: PathSeq) -> PathSeq:
    """v_i (C - E(Q)) v_j：Q 为 C 上的一段弧时，另一条连接其端点的弧"""
    if q.length < 1:
        raise InvalidVertexError("complement_arc needs a subpath with at least one edge")
    forward = cycle.arc(q.first, q.last, 1)
    if forward == q.vertices:
        return PathSeq(vertices=cycle.arc(q.first, q.last, -1))
    backward = cycle.arc(q.first, q.last, -1)
    if backward == q.vertices:
        return PathSeq(vertices=forward)
    raise InvalidVertexError(f"{list(q.vertices)} is not an arc of the cycle")
