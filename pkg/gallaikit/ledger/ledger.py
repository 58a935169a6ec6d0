"""
GALLAIKIT Ledger

运行账本 - JSONL 格式持久化每次 CLI 运行

**文件组织：**
- 按日期分文件：<log_dir>/runs_YYYYMMDD.jsonl
- 每条记录一行 JSON
- 追加模式（append）
"""

import json
from datetime import datetime
from pathlib import Path

import structlog

from gallaikit.models import RunReport

logger = structlog.get_logger(__name__)


class Ledger:
    """运行账本

    Example:
        >>> with Ledger(log_dir="runs") as ledger:
        ...     ledger.append(report)
    """

    def __init__(self, log_dir: str | Path = "runs") -> None:
        self._log_dir = Path(log_dir)
        self._log_dir.mkdir(parents=True, exist_ok=True)

        date_str = datetime.now().strftime("%Y%m%d")
        self._log_path = self._log_dir / f"runs_{date_str}.jsonl"
        self._file = open(self._log_path, "a", encoding="utf-8")

        logger.debug("ledger_initialized", log_path=str(self._log_path))

    def append(self, record: RunReport) -> None:
        """追加一条运行记录（写入失败只记日志，不影响运行结果）"""
        try:
            self._file.write(record.model_dump_json() + "\n")
            self._file.flush()
            logger.debug("ledger_record_appended", command=record.command, exit_code=record.exit_code)
        except (OSError, ValueError) as e:
            logger.error("ledger_append_failed", error=str(e))

    def close(self) -> None:
        if self._file and not self._file.closed:
            self._file.close()

    def __enter__(self) -> "Ledger":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    @property
    def log_path(self) -> Path:
        return self._log_path


def read_ledger(log_path: str | Path) -> list[RunReport]:
    """读取运行账本，跳过无法解析的行

    Example:
        >>> for report in read_ledger("runs/runs_20260101.jsonl"):
        ...     print(report.command, report.exit_code)
    """
    records = []

    with open(log_path, "r", encoding="utf-8") as f:
        for line_num, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                records.append(RunReport(**json.loads(line)))
            except (ValueError, TypeError) as e:
                logger.warning("ledger_read_line_failed", line_num=line_num, error=str(e))

    logger.debug("ledger_read_completed", records_count=len(records))
    return records
