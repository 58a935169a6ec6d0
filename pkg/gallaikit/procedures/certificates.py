"""
GALLAIKIT Procedure Certificates

证明过程的结构化结果：不等式记录、过程证书、轨迹行与各过程的输出模型。

每条不等式以精确有理数存储两边，可脱离产生它的代码单独复核。
"""

from fractions import Fraction
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from gallaikit.graph.paths import CycleSeq, PathSeq
from gallaikit.menger.flow import Connector, Separator
from gallaikit.procedures.reason_codes import format_reason
from gallaikit.utils.exact import Op, Threshold, compare


class Inequality(BaseModel):
    """一条已求值的不等式

    Attributes:
        label: 含义
        lhs: 左边（精确有理数字符串）
        op: 比较符
        rhs: 右边
        holds: 记录时的求值结果
        required: 过程成功是否要求其成立（否则仅为观测）
    """
    label: str = Field(description="含义")
    lhs: str = Field(description="左边")
    op: Op = Field(description="比较符")
    rhs: str = Field(description="右边")
    holds: bool = Field(description="是否成立")
    required: bool = Field(default=True, description="是否为成功条件")

    model_config = {"frozen": True}

    @classmethod
    def of(
        cls,
        label: str,
        lhs: Fraction | int,
        op: Op,
        rhs: Fraction | int,
        required: bool = True,
    ) -> "Inequality":
        left, right = Fraction(lhs), Fraction(rhs)
        return cls(
            label=label,
            lhs=str(left),
            op=op,
            rhs=str(right),
            holds=compare(left, op, right),
            required=required,
        )

    @classmethod
    def theta_times(
        cls,
        label: str,
        theta: Threshold,
        a: int,
        op: Op,
        b: int,
        required: bool = True,
    ) -> "Inequality":
        """θ·a <op> b，以立方形式记录"""
        return cls.of(f"{label} (cubed)", theta.scaled_cube(a), op, Fraction(b) ** 3, required)

    def recheck(self) -> bool:
        return compare(Fraction(self.lhs), self.op, Fraction(self.rhs))

    def render(self) -> str:
        return f"{self.lhs} {self.op} {self.rhs}"


class TraceRecord(BaseModel):
    """一次过程调用的轨迹行"""
    step: str
    hypothesis: str
    output: str
    check: str

    model_config = {"frozen": True}

    def line(self) -> str:
        """step=<name> hypothesis=<ok|fail:reason> output=<summary> check=<lhs op rhs>"""
        return (
            f"step={self.step} hypothesis={self.hypothesis} "
            f"output={self.output} check={self.check}"
        )


class ProcedureCertificate(BaseModel):
    """过程证书

    Attributes:
        kind: 过程名
        status: ok / fail
        reason: 失败原因编码
        inputs: 输入摘要
        output: 输出摘要
        checks: 已求值的不等式
        facts: 其余记录的量
    """
    kind: str = Field(description="过程名")
    status: Literal["ok", "fail"] = Field(description="状态")
    reason: Optional[str] = Field(default=None, description="失败原因编码")
    inputs: dict[str, Any] = Field(default_factory=dict, description="输入摘要")
    output: str = Field(default="none", description="输出摘要")
    checks: tuple[Inequality, ...] = Field(default=(), description="不等式")
    facts: dict[str, Any] = Field(default_factory=dict, description="记录的量")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _fail_needs_reason(self) -> "ProcedureCertificate":
        if self.status == "fail" and not self.reason:
            raise ValueError("a failed certificate must carry a reason code")
        return self

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def verify(self) -> bool:
        """复核：每条不等式重新求值与记录一致，成功时必要条件全部成立"""
        if any(c.recheck() != c.holds for c in self.checks):
            return False
        if self.ok and not all(c.holds for c in self.checks if c.required):
            return False
        return True

    def explain(self) -> str:
        if self.ok:
            return f"{self.kind}: ok"
        return f"{self.kind}: {format_reason(self.reason or '', self.facts)}"

    def trace_record(self) -> TraceRecord:
        hypothesis = "ok" if self.ok else f"fail:{self.reason}"
        check = "; ".join(c.render() for c in self.checks) or "none"
        return TraceRecord(step=self.kind, hypothesis=hypothesis, output=self.output, check=check)


# ============================================================================
# 过程输出
# ============================================================================

class RerouteChoice(BaseModel):
    """四段划分下的改道选择

    Attributes:
        index: 1 或 3
        lengths: ‖P1‖..‖P4‖
    """
    index: Literal[1, 3]
    lengths: tuple[int, int, int, int]
    certificate: ProcedureCertificate

    model_config = {"frozen": True}


class CycleOutcome(BaseModel):
    """产生圈的过程结果（失败时 cycle 为 None）"""
    cycle: Optional[CycleSeq] = None
    certificate: ProcedureCertificate

    model_config = {"frozen": True}

    @property
    def ok(self) -> bool:
        return self.certificate.ok and self.cycle is not None


class Pretransversal(BaseModel):
    """(X, Y) 预横截

    Attributes:
        x: X
        y: Y ⊆ X
        theta: 阈值 θ，要求 θ·|Y| ≤ |X|
    """
    x: frozenset[int] = Field(default=frozenset())
    y: frozenset[int] = Field(default=frozenset())
    theta: Threshold

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _nested_and_balanced(self) -> "Pretransversal":
        if not self.y <= self.x:
            raise ValueError("pretransversal needs Y inside X")
        if not self.theta.times_compare(len(self.y), "<=", len(self.x)):
            raise ValueError(f"theta*|Y| > |X| for |Y|={len(self.y)}, |X|={len(self.x)}")
        return self

    def member_condition(self, vertex_sets: tuple[frozenset[int], ...]) -> bool:
        """每个成员要么避开 X，要么与 Y 相交"""
        return all(not (s & self.x) or (s & self.y) for s in vertex_sets)


class ExtensionOutcome(BaseModel):
    """extend_pretransversal 的结果

    成功时给出 (X′, Y′)；失败（无小分隔集）时给出 Menger 连接器。
    """
    pretransversal: Optional[Pretransversal] = None
    separator: Optional[Separator] = None
    connector: Optional[Connector] = None
    certificate: ProcedureCertificate

    model_config = {"frozen": True}

    @property
    def ok(self) -> bool:
        return self.certificate.ok and self.pretransversal is not None


class InnerPathStats(BaseModel):
    """连接器端点对细分边的划分

    Attributes:
        hits: 每条模式边上的端点数 h_e
        inner: 每条模式边的内部路径（h_e ≥ 1 时共 h_e - 1 条）
        total_inner: Σ max(h_e - 1, 0)
    """
    hits: tuple[int, ...]
    inner: tuple[tuple[PathSeq, ...], ...]
    total_inner: int = Field(ge=0)
    certificate: ProcedureCertificate

    model_config = {"frozen": True}

    @property
    def hit_edges(self) -> int:
        return sum(1 for h in self.hits if h >= 1)
