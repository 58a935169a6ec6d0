"""
GALLAIKIT Explainability

把族、τ、横截集构造和运行报告渲染成人类可读文本或逐行 JSON
（JSON 字段名与文本格式一致）。
"""

import json
from typing import Any, Iterable

import structlog

from gallaikit.models import RunReport
from gallaikit.procedures.assembly import TransversalBuild
from gallaikit.procedures.certificates import ProcedureCertificate
from gallaikit.subdivision.models import SubdivisionFamily
from gallaikit.transversal.tau import TauResult

logger = structlog.get_logger(__name__)


def build_family_report(family: SubdivisionFamily) -> str:
    """family m=.. mu=.. count=.. exhaustive=.. 加每成员一行"""
    return "\n".join(family.report_lines())


def build_tau_report(result: TauResult, gallai: bool = False) -> str:
    """τ 报告

    Example:
        >>> print(build_tau_report(result, gallai=True))
        gal=2
        tau=2 witness=[3, 8] lower_bound_certificate=disjoint_subfamily
        family count=12 mu=9
    """
    lines = []
    if gallai:
        lines.append(f"gal={result.tau}")
    lines.append(result.report_line())
    lines.append(f"family count={result.members} mu={result.mu}")
    if not result.pairwise_intersecting:
        lines.append("pairwise_intersecting=false")
    return "\n".join(lines)


def build_trace(certificates: Iterable[ProcedureCertificate]) -> str:
    """每次过程调用一行 step=.. hypothesis=.. output=.. check=.."""
    return "\n".join(c.trace_record().line() for c in certificates)


def build_failure_explanation(certificates: Iterable[ProcedureCertificate]) -> str:
    """失败步骤的原因说明"""
    failed = [c for c in certificates if not c.ok]
    if not failed:
        return "✅ 所有步骤的假设均成立"
    lines = ["⚠️  以下步骤的假设不成立："]
    for c in failed:
        lines.append(f"  - {c.explain()}")
    return "\n".join(lines)


def build_transversal_report(build: TransversalBuild) -> str:
    """横截集、轨迹与上界比较"""
    lines = [
        f"transversal size={build.size} vertices={list(build.vertices)} "
        f"fallback={str(build.fallback).lower()}",
        f"pretransversal x={build.x_size} y={list(build.y)}",
        f"bound size<=max(5n^(2/3),2m^2n^(1/3)) n={build.n} m={build.m} "
        f"holds={str(build.within_bound).lower()}",
    ]
    if build.cycle is not None:
        lines.append(f"cycle length={build.cycle.length} vertices={list(build.cycle.vertices)}")
    if build.fallback:
        lines.append(f"fallback_reason={build.fallback_reason}")
    trace = build_trace(build.certificates)
    if trace:
        lines.append(trace)
    return "\n".join(lines)


def json_line(record: dict[str, Any]) -> str:
    return json.dumps(record, ensure_ascii=False, sort_keys=False, default=_jsonable)


def _jsonable(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def tau_json_lines(result: TauResult, gallai: bool = False) -> list[str]:
    record: dict[str, Any] = {
        "tau": result.tau,
        "witness": list(result.witness),
        "lower_bound_certificate": result.certificate.kind,
        "count": result.members,
        "mu": result.mu,
        "pairwise_intersecting": result.pairwise_intersecting,
    }
    if gallai:
        record = {"gal": result.tau, **record}
    return [json_line(record)]


def transversal_json_lines(build: TransversalBuild) -> list[str]:
    lines = [json_line({
        "size": build.size,
        "vertices": list(build.vertices),
        "fallback": build.fallback,
        "fallback_reason": build.fallback_reason,
        "within_bound": build.within_bound,
        "n": build.n,
        "m": build.m,
    })]
    lines.extend(r.model_dump_json() for r in build.trace)
    return lines


def build_run_summary(report: RunReport) -> str:
    """运行摘要

    Example:
        >>> print(build_run_summary(report))
        📊 运行摘要
        - 命令: gallai
        - 退出码: 0
        - 耗时: 0.42s
    """
    status = "✅" if report.exit_code == 0 else "❌"
    lines = [f"📊 运行摘要 {status}"]
    lines.append(f"- 命令: {report.command}")
    lines.append(f"- 退出码: {report.exit_code}")
    lines.append(f"- 耗时: {report.wall_time:.2f}s")
    for name, value in report.input_digests.items():
        lines.append(f"- 输入 {name}: {value[:12]}")
    if report.seed is not None:
        lines.append(f"- 种子: {report.seed}")
    for key, value in report.results.items():
        lines.append(f"- {key}: {value}")
    return "\n".join(lines)
