"""
GALLAIKIT Hitting Set Solver

精确最小命中集：位掩码分支定界。

- 预处理：去重，删除包含其他集合的超集（命中子集即命中超集）
- 上界：贪心（每次取命中最多未命中集合的顶点）
- 下界：两两不交子族（按大小升序贪心打包）
- 分支：出现频率最高的顶点，先"选入"再"排除"
"""

from typing import Iterable, Literal

import structlog
from pydantic import BaseModel, Field, model_validator

from gallaikit.exceptions import NonExhaustiveFamilyError, SolverBudgetExceededError
from gallaikit.graph.graph import bits_of, mask_of

logger = structlog.get_logger(__name__)

DEFAULT_SOLVER_BUDGET = 10_000_000

CertificateKind = Literal["disjoint_subfamily", "branch_and_bound"]


class HittingInstance(BaseModel):
    """命中集实例

    Attributes:
        universe: 全集
        sets: 待命中的集合（来自 SubdivisionFamily.vertex_sets）
        exhaustive: 集合族是否完整
    """
    universe: frozenset[int] = Field(description="全集")
    sets: tuple[frozenset[int], ...] = Field(default=(), description="集合族")
    exhaustive: bool = Field(default=True, description="族是否完整")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _sets_inside_universe(self) -> "HittingInstance":
        for s in self.sets:
            if not s:
                raise ValueError("hitting instance sets must be nonempty")
            if not s <= self.universe:
                raise ValueError(f"set {sorted(s)} is not inside the universe")
        return self


class HittingCertificate(BaseModel):
    """最优性证书

    Attributes:
        kind: disjoint_subfamily（给出同样大小的两两不交子族）
            或 branch_and_bound（分支定界完整闭合）
        lower_bound: 证书给出的下界
        disjoint_sets: kind=disjoint_subfamily 时的不交子族
        nodes: 分支定界节点数
    """
    kind: CertificateKind = Field(description="证书类型")
    lower_bound: int = Field(ge=0, description="下界")
    disjoint_sets: tuple[frozenset[int], ...] = Field(default=(), description="不交子族")
    nodes: int = Field(default=0, ge=0, description="搜索节点数")

    model_config = {"frozen": True}

    def verify(self, sets: Iterable[frozenset[int]]) -> bool:
        """检查不交子族证书：成员来自族、两两不交、数目等于下界"""
        if self.kind != "disjoint_subfamily":
            return True
        family = set(sets)
        seen: set[int] = set()
        for s in self.disjoint_sets:
            if s not in family or seen & s:
                return False
            seen |= s
        return len(self.disjoint_sets) == self.lower_bound


class HittingResult(BaseModel):
    """最小命中集及其证书"""
    hitting_set: tuple[int, ...] = Field(description="升序命中集")
    certificate: HittingCertificate

    model_config = {"frozen": True}

    @property
    def size(self) -> int:
        return len(self.hitting_set)


def hits_all(candidate: Iterable[int], sets: Iterable[frozenset[int]]) -> bool:
    """candidate 是否与每个集合相交"""
    chosen = frozenset(candidate)
    return all(chosen & s for s in sets)


def _minimal_masks(masks: list[int]) -> list[int]:
    unique = sorted(set(masks), key=lambda x: (x.bit_count(), x))
    kept: list[int] = []
    for m in unique:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _packing(masks: list[int]) -> list[int]:
    """按大小升序贪心选取两两不交的集合"""
    used = 0
    chosen = []
    for m in sorted(masks, key=lambda x: (x.bit_count(), x)):
        if not m & used:
            chosen.append(m)
            used |= m
    return chosen


def _greedy(masks: list[int]) -> int:
    chosen = 0
    remaining = list(masks)
    while remaining:
        counts: dict[int, int] = {}
        for m in remaining:
            for v in bits_of(m):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda x: (-counts[x], x))
        chosen |= 1 << v
        remaining = [m for m in remaining if not m >> v & 1]
    return chosen


class _BranchAndBound:
    def __init__(self, node_budget: int, incumbent: int) -> None:
        self.node_budget = node_budget
        self.best = incumbent
        self.nodes = 0

    def solve(self, masks: list[int], chosen: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SolverBudgetExceededError(
                f"hitting set search exceeded node budget {self.node_budget} "
                f"(best size {self.best.bit_count()})"
            )
        if not masks:
            if chosen.bit_count() < self.best.bit_count():
                self.best = chosen
            return
        if chosen.bit_count() + len(_packing(masks)) >= self.best.bit_count():
            return

        counts: dict[int, int] = {}
        for m in masks:
            for v in bits_of(m):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda x: (-counts[x], x))
        bit = 1 << v

        self.solve([m for m in masks if not m & bit], chosen | bit)

        excluded = [m & ~bit for m in masks]
        if all(excluded):
            self.solve(_minimal_masks(excluded), chosen)


def min_hitting_set(
    instance: HittingInstance,
    node_budget: int = DEFAULT_SOLVER_BUDGET,
) -> HittingResult:
    """精确最小命中集

    Raises:
        NonExhaustiveFamilyError: 实例不完整
        SolverBudgetExceededError: 超出节点预算

    Example:
        >>> inst = HittingInstance(universe=frozenset({1, 2}), sets=(frozenset({1}), frozenset({2})))
        >>> min_hitting_set(inst).hitting_set
        (1, 2)
    """
    if not instance.exhaustive:
        raise NonExhaustiveFamilyError("exact hitting set refuses a non-exhaustive family")

    masks = _minimal_masks([mask_of(s) for s in instance.sets])
    packing = _packing(masks)
    greedy = _greedy(masks)

    if greedy.bit_count() == len(packing):
        best, nodes = greedy, 0
    else:
        bnb = _BranchAndBound(node_budget, greedy)
        bnb.solve(masks, 0)
        best, nodes = bnb.best, bnb.nodes

    size = best.bit_count()
    if size == len(packing):
        certificate = HittingCertificate(
            kind="disjoint_subfamily",
            lower_bound=size,
            disjoint_sets=tuple(frozenset(bits_of(m)) for m in packing),
            nodes=nodes,
        )
    else:
        certificate = HittingCertificate(kind="branch_and_bound", lower_bound=size, nodes=nodes)

    logger.debug(
        "hitting_set_solved",
        sets=len(instance.sets),
        minimal_sets=len(masks),
        size=size,
        certificate=certificate.kind,
        nodes=nodes,
    )
    return HittingResult(hitting_set=tuple(bits_of(best)), certificate=certificate)
