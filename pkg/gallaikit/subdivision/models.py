"""
GALLAIKIT Subdivision Models

M-细分及最大细分族 L(M,G) 的数据模型。
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from gallaikit.graph.graph import mask_of
from gallaikit.graph.paths import PathSeq
from gallaikit.graph.pattern import MultigraphPattern


class Subdivision(BaseModel):
    """G 中的一个 M-细分 Q

    Attributes:
        branch_map: 模式顶点 u → 分支顶点 q^u
        edge_paths: 模式边 e → 细分边 Q_e 的顶点序列，从 q^u 走到 q^v；
            自环的序列首尾同为 q^u（闭合路）

    约定：在无边宿主图中，K2 的平凡单顶点路径记为 branch_map=(v, v)、
    edge_paths=((v,),)。
    """
    branch_map: tuple[int, ...] = Field(description="分支顶点")
    edge_paths: tuple[tuple[int, ...], ...] = Field(description="细分边路线")

    model_config = {"frozen": True}

    def vertex_set(self) -> frozenset[int]:
        out = set(self.branch_map)
        for route in self.edge_paths:
            out.update(route)
        return frozenset(out)

    def vertex_mask(self) -> int:
        return mask_of(self.vertex_set())

    def edge_set(self) -> frozenset[tuple[int, int]]:
        out = set()
        for route in self.edge_paths:
            for a, b in zip(route, route[1:]):
                out.add((min(a, b), max(a, b)))
        return frozenset(out)

    @property
    def edge_count(self) -> int:
        """‖Q‖ = Σ_e ‖Q_e‖"""
        return sum(len(route) - 1 for route in self.edge_paths)

    @property
    def vertex_count(self) -> int:
        """|Q|"""
        return len(self.vertex_set())

    def key(self) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
        """子图身份：顶点集 + 边集"""
        return tuple(sorted(self.vertex_set())), tuple(sorted(self.edge_set()))

    def route_vertices(self, e: int) -> tuple[int, ...]:
        """Q_e 上的不同顶点（自环去掉重复的终点）"""
        route = self.edge_paths[e]
        if len(route) > 1 and route[0] == route[-1]:
            return route[:-1]
        return route

    def route_path(self, e: int) -> PathSeq:
        """非自环的 Q_e 作为 PathSeq"""
        return PathSeq(vertices=self.edge_paths[e])

    def edge_of_vertex(self, v: int, pattern: MultigraphPattern) -> Optional[int]:
        """顶点 v 所属的模式边

        内部顶点唯一确定；分支顶点取关联边中编号最小者。
        """
        if v in self.branch_map:
            u = self.branch_map.index(v)
            incident = pattern.incident_edges(u)
            return incident[0] if incident else None
        for e, route in enumerate(self.edge_paths):
            if v in route:
                return e
        return None


class SubdivisionFamily(BaseModel):
    """最大 M-细分族 L(M,G)

    Attributes:
        pattern: 模式 M
        members: 最大细分（按子图身份去重，可能被 limit 截断）
        member_count: 去重后的全部成员数（截断时仍完整）
        vertex_sets: 去重后的成员顶点集（穷举时始终完整）
        mu: 成员顶点数 |Q|
        edge_size: 成员边数 ‖Q‖
        exhaustive: vertex_sets 是否完整
        truncated: members 是否被截断
        status: ok / empty（无 M-细分）/ acyclic（C1 且宿主无圈）
        nodes: 搜索节点数
    """
    pattern: MultigraphPattern
    members: tuple[Subdivision, ...] = Field(default=())
    member_count: int = Field(default=0, ge=0)
    vertex_sets: tuple[frozenset[int], ...] = Field(default=())
    mu: int = Field(default=0, ge=0)
    edge_size: int = Field(default=0, ge=0)
    exhaustive: bool = Field(default=True)
    truncated: bool = Field(default=False)
    status: Literal["ok", "empty", "acyclic"] = Field(default="ok")
    nodes: int = Field(default=0, ge=0)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _consistent(self) -> "SubdivisionFamily":
        if len(set(self.vertex_sets)) != len(self.vertex_sets):
            raise ValueError("vertex_sets must not contain duplicates")
        for member in self.members:
            if member.edge_count != self.edge_size or member.vertex_count != self.mu:
                raise ValueError(
                    f"member size ({member.edge_count}, {member.vertex_count}) differs "
                    f"from family size ({self.edge_size}, {self.mu})"
                )
        return self

    @property
    def is_empty(self) -> bool:
        return self.status != "ok"

    def vertex_masks(self) -> list[int]:
        return [mask_of(s) for s in self.vertex_sets]

    def representative(self, vertex_set: frozenset[int]) -> Optional[Subdivision]:
        """取顶点集为 vertex_set 的第一个成员"""
        for member in self.members:
            if member.vertex_set() == vertex_set:
                return member
        return None

    def report_lines(self) -> list[str]:
        """family m=<edge_size> mu=<mu> count=<k> exhaustive=<bool> + 每成员一行"""
        header = (
            f"family m={self.edge_size} mu={self.mu} "
            f"count={self.member_count} exhaustive={str(self.exhaustive).lower()}"
        )
        lines = [header]
        for member in self.members:
            lines.append(" ".join(str(v) for v in sorted(member.vertex_set())))
        return lines


def assemble_family(
    pattern: MultigraphPattern,
    found: list[Subdivision],
    limit: Optional[int],
    nodes: int,
    empty_status: Literal["empty", "acyclic"] = "empty",
) -> SubdivisionFamily:
    """由同样大小的细分列表组装规范顺序的族

    按子图身份去重，按 key() 排序；vertex_sets 始终完整，members 按 limit 截断。
    """
    if not found:
        return SubdivisionFamily(pattern=pattern, status=empty_status, nodes=nodes)

    unique: dict[tuple, Subdivision] = {}
    for sub in found:
        unique.setdefault(sub.key(), sub)
    ordered = [unique[k] for k in sorted(unique)]

    vertex_sets = sorted({s.vertex_set() for s in ordered}, key=lambda s: sorted(s))
    truncated = limit is not None and len(ordered) > limit
    members = ordered[:limit] if truncated else ordered

    first = ordered[0]
    return SubdivisionFamily(
        pattern=pattern,
        members=tuple(members),
        member_count=len(ordered),
        vertex_sets=tuple(vertex_sets),
        mu=first.vertex_count,
        edge_size=first.edge_count,
        exhaustive=True,
        truncated=truncated,
        status="ok",
        nodes=nodes,
    )
