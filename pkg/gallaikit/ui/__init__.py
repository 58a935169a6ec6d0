"""
GALLAIKIT UI

命令行界面
"""

from gallaikit.ui.cli import build_parser, main

__all__ = ["build_parser", "main"]
