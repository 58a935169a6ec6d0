"""
GALLAIKIT 运行记录模型

一次 CLI 调用的可回放快照，写入 JSONL 运行账本。
"""

import hashlib
from typing import Any, Optional

from pydantic import BaseModel, Field

from gallaikit.procedures.certificates import TraceRecord


def digest(text: str) -> str:
    """输入文本的 sha256 摘要（十六进制）"""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class RunReport(BaseModel):
    """运行报告

    Attributes:
        ts: 开始时间戳
        command: 子命令名
        argv: 完整命令行参数
        input_digests: 输入名 → sha256
        seed: 随机种子（若有）
        results: 命令结果
        trace: 过程轨迹
        wall_time: 耗时（秒）
        exit_code: 退出码，0 当且仅当全部断言成立
    """
    ts: float = Field(description="时间戳")
    command: str = Field(description="子命令")
    argv: list[str] = Field(default_factory=list, description="命令行")
    input_digests: dict[str, str] = Field(default_factory=dict, description="输入摘要")
    seed: Optional[int] = Field(default=None, description="随机种子")
    results: dict[str, Any] = Field(default_factory=dict, description="结果")
    trace: list[TraceRecord] = Field(default_factory=list, description="过程轨迹")
    wall_time: float = Field(default=0.0, ge=0, description="耗时")
    exit_code: int = Field(default=0, description="退出码")

    model_config = {"frozen": True}
