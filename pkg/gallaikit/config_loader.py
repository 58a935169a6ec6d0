"""
GALLAIKIT 配置管理

支持多环境配置加载、环境变量覆盖、Pydantic 验证。

配置优先级（从高到低）：
1. CLI 参数
2. 环境变量
3. 指定的配置文件
4. default.yaml
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, Optional

import structlog
import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from gallaikit.exceptions import ConfigNotFoundError, ConfigValidationError

logger = structlog.get_logger(__name__)

# 加载 .env 文件
load_dotenv()


# ============================================================================
# 配置 Schema (Pydantic 验证)
# ============================================================================

class SearchConfig(BaseModel):
    """细分搜索配置"""
    node_budget: int = Field(default=100_000_000, ge=1)
    member_limit: Optional[int] = Field(default=None, ge=1)
    jobs: int = Field(default=1, ge=1, le=64)


class SolverConfig(BaseModel):
    """命中集求解器配置"""
    node_budget: int = Field(default=10_000_000, ge=1)


class ProceduresConfig(BaseModel):
    """证明过程配置"""
    theta: str = Field(default="auto")
    max_prop1_pairs: int = Field(default=200, ge=1)
    max_extension_rounds: int = Field(default=64, ge=1)

    @field_validator("theta")
    @classmethod
    def theta_must_parse(cls, v: str) -> str:
        v = v.strip()
        if v == "auto":
            return v
        try:
            value = Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"theta ({v}) must be 'auto' or a rational p/q") from e
        if value < 0:
            raise ValueError(f"theta ({v}) must be nonnegative")
        return v


class VerifyConfig(BaseModel):
    """性质验证套件配置"""
    n: int = Field(default=7, ge=1, le=8)
    m: int = Field(default=3, ge=1, le=3)
    seed: int = Field(default=42, ge=0, lt=2**64)
    cases: int = Field(default=500, ge=1)
    tree_n: int = Field(default=9, ge=1, le=9)
    random_n: int = Field(default=30, ge=2, le=30)


class ReportConfig(BaseModel):
    """报告输出配置"""
    json_output: bool = Field(default=False, alias="json")
    ledger_dir: Optional[str] = Field(default=None)

    model_config = {"populate_by_name": True}


class LoggingConfig(BaseModel):
    """日志配置"""
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")
    format: Literal["json", "console"] = Field(default="console")


class AppConfig(BaseModel):
    """应用总配置"""
    environment: Literal["dev", "test", "prod"] = Field(default="dev")
    search: SearchConfig = Field(default_factory=SearchConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    procedures: ProceduresConfig = Field(default_factory=ProceduresConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


# ============================================================================
# 配置加载器
# ============================================================================

def _get_config_dir() -> Path:
    """获取配置目录路径"""
    config_dir = os.getenv("GALLAIKIT_CONFIG_DIR")
    if config_dir:
        return Path(config_dir)

    # 默认使用 gallaikit/config/
    return Path(__file__).parent / "config"


def _load_yaml_file(path: Path) -> dict[str, Any]:
    """加载 YAML 文件"""
    if not path.exists():
        raise ConfigNotFoundError(f"Config file not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        content = yaml.safe_load(f)

    return content or {}


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """深度合并两个字典

    Args:
        base: 基础字典
        override: 覆盖字典

    Returns:
        合并后的字典
    """
    result = base.copy()

    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value

    return result


ENV_PREFIX = "GALLAIKIT_"

# 不是配置项的 GALLAIKIT_* 变量
_RESERVED_ENV = frozenset({"GALLAIKIT_CONFIG_DIR", "GALLAIKIT_ENVIRONMENT"})


def _section_keys(section: str) -> Optional[set[str]]:
    """节的字段名与别名；未知节返回 None"""
    info = AppConfig.model_fields.get(section)
    if info is None or section == "environment":
        return None
    model = info.annotation
    keys = set(model.model_fields)
    keys.update(f.alias for f in model.model_fields.values() if f.alias)
    return keys


def _apply_env_overrides(config: dict[str, Any]) -> dict[str, Any]:
    """应用环境变量覆盖

    支持的环境变量格式：GALLAIKIT_<SECTION>_<KEY>
    例如：GALLAIKIT_SEARCH_NODE_BUDGET=1000000

    未知的节或字段记警告后跳过。
    """
    for key, value in sorted(os.environ.items()):
        if not key.startswith(ENV_PREFIX) or key in _RESERVED_ENV:
            continue

        section, _, field = key[len(ENV_PREFIX):].lower().partition("_")
        keys = _section_keys(section)
        if keys is None or field not in keys:
            logger.warning("env_override_unknown", env_var=key)
            continue

        target = config.setdefault(section, {})
        if not isinstance(target, dict):
            logger.warning("env_override_not_a_section", env_var=key, section=section)
            continue
        target[field] = _parse_env_value(value)
        logger.debug("env_override_applied", env_var=key, section=section, field=field, value=value)

    return config


def _parse_env_value(value: str) -> Any:
    """解析环境变量值为适当的类型"""
    # 布尔值
    if value.lower() in ("true", "yes"):
        return True
    if value.lower() in ("false", "no"):
        return False

    # 数字
    try:
        if "." in value:
            return float(value)
        return int(value)
    except ValueError:
        pass

    # 列表（逗号分隔）
    if "," in value:
        return [v.strip() for v in value.split(",")]

    return value


def load_config(
    environment: str | None = None,
    config_path: Path | str | None = None,
) -> AppConfig:
    """加载配置

    Args:
        environment: 环境名称（dev/test/prod），未指定时从环境变量或默认值获取
        config_path: 自定义配置文件路径

    Returns:
        验证后的 AppConfig 对象

    Raises:
        ConfigNotFoundError: 配置文件不存在
        ConfigValidationError: 配置验证失败
    """
    config_dir = _get_config_dir()

    # 1. 加载默认配置
    default_path = config_dir / "default.yaml"
    if default_path.exists():
        config = _load_yaml_file(default_path)
        logger.debug("default_config_loaded", path=str(default_path))
    else:
        config = {}
        logger.warning("default_config_not_found", path=str(default_path))

    # 2. 确定环境
    if environment is None:
        environment = os.getenv("GALLAIKIT_ENVIRONMENT", "dev")

    # 3. 加载环境配置
    env_path = config_dir / f"{environment}.yaml"
    if env_path.exists():
        env_config = _load_yaml_file(env_path)
        config = _deep_merge(config, env_config)
        logger.debug("env_config_loaded", environment=environment, path=str(env_path))

    # 4. 加载自定义配置（如果指定）
    if config_path:
        custom_path = Path(config_path)
        custom_config = _load_yaml_file(custom_path)
        config = _deep_merge(config, custom_config)
        logger.debug("custom_config_loaded", path=str(custom_path))

    # 5. 应用环境变量覆盖
    config = _apply_env_overrides(config)

    # 6. Pydantic 验证
    try:
        app_config = AppConfig.model_validate(config)
    except (ValidationError, TypeError) as e:
        raise ConfigValidationError(f"Config validation failed: {e}") from e

    logger.debug(
        "config_loaded",
        environment=app_config.environment,
        node_budget=app_config.search.node_budget,
        theta=app_config.procedures.theta,
    )
    return app_config


def get_config_dict(config: AppConfig) -> dict[str, Any]:
    """将配置对象转换为字典"""
    return config.model_dump(by_alias=True)
