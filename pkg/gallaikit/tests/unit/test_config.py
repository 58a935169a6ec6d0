"""
GALLAIKIT 配置管理测试
"""

import os
from unittest.mock import patch

import pytest

from gallaikit.config_loader import (
    AppConfig,
    ProceduresConfig,
    SearchConfig,
    VerifyConfig,
    _deep_merge,
    _parse_env_value,
    get_config_dict,
    load_config,
)
from gallaikit.exceptions import ConfigNotFoundError, ConfigValidationError


class TestConfigModels:
    """测试配置模型"""

    def test_search_config_defaults(self):
        """测试搜索配置默认值"""
        config = SearchConfig()
        assert config.node_budget == 100_000_000
        assert config.member_limit is None
        assert config.jobs == 1

    def test_search_config_validation(self):
        """测试搜索配置验证"""
        with pytest.raises(ValueError):
            SearchConfig(node_budget=0)

        with pytest.raises(ValueError):
            SearchConfig(jobs=65)

    def test_theta_accepts_auto_and_rationals(self):
        """测试 θ 接受 auto 与 p/q"""
        assert ProceduresConfig(theta=" auto ").theta == "auto"
        assert ProceduresConfig(theta="3/2").theta == "3/2"

    @pytest.mark.parametrize("theta", ["abc", "1/0", "-1"])
    def test_theta_rejects_garbage(self, theta):
        """测试非法 θ"""
        with pytest.raises(ValueError, match="theta"):
            ProceduresConfig(theta=theta)

    def test_verify_config_caps(self):
        """测试验证套件上限"""
        with pytest.raises(ValueError):
            VerifyConfig(n=9)
        with pytest.raises(ValueError):
            VerifyConfig(m=4)

    def test_app_config_defaults(self):
        """测试应用配置默认值"""
        config = AppConfig()
        assert config.environment == "dev"
        assert config.procedures.theta == "auto"
        assert config.report.json_output is False
        assert config.logging.level == "WARNING"


class TestDeepMerge:
    """测试深度合并"""

    def test_nested_merge(self):
        """测试嵌套合并"""
        base = {"outer": {"a": 1, "b": 2}}
        override = {"outer": {"b": 3, "c": 4}}
        assert _deep_merge(base, override) == {"outer": {"a": 1, "b": 3, "c": 4}}

    def test_override_non_dict(self):
        """测试覆盖非字典值"""
        assert _deep_merge({"a": {"nested": 1}}, {"a": "x"}) == {"a": "x"}


class TestParseEnvValue:
    """测试环境变量值解析"""

    def test_parse_bool(self):
        """测试解析布尔值"""
        assert _parse_env_value("true") is True
        assert _parse_env_value("No") is False

    def test_digits_stay_integers(self):
        """测试 1/0 解析为整数而不是布尔值"""
        assert _parse_env_value("1") == 1
        assert _parse_env_value("0") == 0
        assert _parse_env_value("1") is not True

    def test_parse_numbers(self):
        """测试解析数字"""
        assert _parse_env_value("-10") == -10
        assert _parse_env_value("2.5") == 2.5

    def test_parse_list_and_string(self):
        """测试解析列表与字符串"""
        assert _parse_env_value("a,b") == ["a", "b"]
        assert _parse_env_value("3/2") == "3/2"


class TestLoadConfig:
    """测试配置加载"""

    def test_load_dev(self):
        """测试加载开发环境配置"""
        config = load_config(environment="dev")
        assert isinstance(config, AppConfig)
        assert config.logging.level == "INFO"

    def test_load_test_environment(self):
        """测试加载测试环境配置"""
        config = load_config(environment="test")
        assert config.environment == "test"
        assert config.verify.n == 5
        assert config.search.node_budget == 5_000_000

    def test_env_variable_override(self):
        """测试环境变量覆盖"""
        with patch.dict(os.environ, {"GALLAIKIT_SEARCH_NODE_BUDGET": "1234"}):
            config = load_config(environment="dev")
        assert config.search.node_budget == 1234

    def test_env_alias_override(self):
        """测试环境变量使用字段别名"""
        with patch.dict(os.environ, {"GALLAIKIT_REPORT_JSON": "true"}):
            config = load_config(environment="dev")
        assert config.report.json_output is True

    def test_unknown_env_variable_skipped(self):
        """测试拼错的环境变量被跳过"""
        with patch.dict(os.environ, {"GALLAIKIT_SEARCH_NODE_BUDGT": "1", "GALLAIKIT_NOPE_X": "1"}):
            config = load_config(environment="dev")
        assert config.search.node_budget == 100_000_000

    def test_env_value_rejected(self):
        """测试非法环境变量值"""
        with patch.dict(os.environ, {"GALLAIKIT_SEARCH_JOBS": "0"}):
            with pytest.raises(ConfigValidationError):
                load_config(environment="dev")

    def test_custom_file(self, tmp_path):
        """测试自定义配置文件"""
        path = tmp_path / "custom.yaml"
        path.write_text("procedures:\n  theta: 1/2\n", encoding="utf-8")
        config = load_config(environment="dev", config_path=path)
        assert config.procedures.theta == "1/2"

    def test_missing_custom_file(self, tmp_path):
        """测试自定义配置文件不存在"""
        with pytest.raises(ConfigNotFoundError):
            load_config(environment="dev", config_path=tmp_path / "missing.yaml")

    def test_invalid_value(self, tmp_path):
        """测试非法配置值"""
        path = tmp_path / "bad.yaml"
        path.write_text("search:\n  jobs: 0\n", encoding="utf-8")
        with pytest.raises(ConfigValidationError):
            load_config(environment="dev", config_path=path)

    def test_config_dir_override(self, tmp_path, monkeypatch):
        """测试配置目录环境变量"""
        (tmp_path / "default.yaml").write_text("verify:\n  seed: 7\n", encoding="utf-8")
        monkeypatch.setenv("GALLAIKIT_CONFIG_DIR", str(tmp_path))
        config = load_config(environment="prod")
        assert config.verify.seed == 7
        assert config.environment == "dev"

    def test_get_config_dict_uses_aliases(self):
        """测试配置转字典使用别名"""
        config_dict = get_config_dict(AppConfig())
        assert config_dict["report"]["json"] is False
        assert "verify" in config_dict
