"""
GALLAIKIT - 初始化测试

验证项目基础设施正常工作
"""

import os
import sys

import pytest


def test_project_structure():
    """测试项目结构存在"""
    base_dir = os.path.dirname(os.path.dirname(__file__))

    for name in ("graph", "subdivision", "menger", "transversal", "procedures", "constructions", "ui"):
        assert os.path.isdir(os.path.join(base_dir, name)), name


def test_config_files():
    """测试配置文件存在"""
    config_dir = os.path.join(os.path.dirname(os.path.dirname(__file__)), "config")

    assert os.path.isfile(os.path.join(config_dir, "default.yaml"))
    assert os.path.isfile(os.path.join(config_dir, "dev.yaml"))
    assert os.path.isfile(os.path.join(config_dir, "test.yaml"))


def test_basic_imports():
    """测试基本导入"""
    import gallaikit
    import gallaikit.graph
    import gallaikit.procedures
    import gallaikit.ui.cli


def test_environment():
    """测试 Python 版本"""
    assert sys.version_info >= (3, 10), "需要 Python 3.10 或更高版本"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
