"""
GALLAIKIT CLI 测试
"""

import io
import json

import pytest

from gallaikit.ledger.ledger import read_ledger
from gallaikit.models import digest
from gallaikit.ui.cli import (
    EXIT_BUDGET,
    EXIT_DISCONNECTED,
    EXIT_INPUT,
    EXIT_NOT_PAIRWISE,
    EXIT_OK,
    build_parser,
    main,
)

PATH5 = "5 4\n0 1\n1 2\n2 3\n3 4\n"


def _run(argv: list[str]) -> int:
    return main([*argv, "--env", "test"])


class TestParser:
    """测试参数解析"""

    def test_defaults(self):
        """测试默认参数"""
        args = build_parser().parse_args(["gallai"])
        assert args.graph == "-"
        assert args.pattern == "K2"
        assert args.json is None

    def test_command_required(self):
        """测试必须给出子命令"""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestGallaiCommand:
    """测试 gallai 命令"""

    def test_stdin(self, capsys, monkeypatch):
        """测试从 stdin 读图"""
        monkeypatch.setattr("sys.stdin", io.StringIO(PATH5))
        assert _run(["gallai", "-"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "gal=1"

    def test_catalog_graph(self, capsys):
        """测试目录图"""
        assert _run(["gallai", "modified_petersen"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("gal=2\n")

    def test_file_input(self, capsys, tmp_path):
        """测试文件输入"""
        path = tmp_path / "p5.txt"
        path.write_text(PATH5, encoding="utf-8")
        assert _run(["gallai", str(path)]) == EXIT_OK
        assert "gal=1" in capsys.readouterr().out

    def test_pattern(self, capsys):
        """测试指定模式"""
        assert _run(["gallai", "petersen", "--pattern", "C1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "gal=" not in out
        assert out.startswith("tau=2 ")

    def test_json(self, capsys):
        """测试 JSON 输出"""
        assert _run(["gallai", "P5", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out.strip())
        assert data["gal"] == 1
        assert data["tau"] == 1

    def test_parse_error(self, capsys, monkeypatch):
        """测试解析错误退出码"""
        monkeypatch.setattr("sys.stdin", io.StringIO("3 1\n0 5\n"))
        assert _run(["gallai"]) == EXIT_INPUT
        assert "line 2" in capsys.readouterr().err

    def test_unknown_graph(self, capsys):
        """测试未知图名"""
        assert _run(["gallai", "no_such_graph"]) == EXIT_INPUT
        assert "no_such_graph" in capsys.readouterr().err

    def test_unknown_pattern(self):
        """测试未知模式名"""
        assert _run(["gallai", "P5", "--pattern", "no_such_pattern"]) == EXIT_INPUT

    def test_disconnected(self, monkeypatch):
        """测试不连通输入"""
        monkeypatch.setattr("sys.stdin", io.StringIO("4 2\n0 1\n2 3\n"))
        assert _run(["gallai"]) == EXIT_DISCONNECTED

    def test_disconnected_with_pattern(self, monkeypatch):
        """测试指定模式时的不连通输入"""
        monkeypatch.setattr("sys.stdin", io.StringIO("4 2\n0 1\n2 3\n"))
        assert _run(["gallai", "--pattern", "C1"]) == EXIT_DISCONNECTED

    def test_budget(self, capsys):
        """测试超出预算"""
        assert _run(["gallai", "petersen", "--budget", "10"]) == EXIT_BUDGET
        assert "best_lower_bound" in capsys.readouterr().err


class TestFamilyCommand:
    """测试 family 命令"""

    def test_text(self, capsys):
        """测试文本输出"""
        assert _run(["family", "P3"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "family m=1 mu=3 count=1 exhaustive=true",
            "0 1 2",
        ]

    def test_json(self, capsys):
        """测试 JSON 输出"""
        assert _run(["family", "C4", "--pattern", "C1", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out.strip())
        assert data["mu"] == 4
        assert data["vertex_sets"] == [[0, 1, 2, 3]]


class TestBuildTransversalCommand:
    """测试 build-transversal 命令"""

    def test_path(self, capsys):
        """测试路径图"""
        assert _run(["build-transversal", "P5"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("transversal size=1 vertices=[1] fallback=false")
        assert "step=extend_pretransversal" in out

    def test_not_pairwise(self, capsys):
        """测试不两两相交时输出见证对"""
        assert _run(["build-transversal", "triangles_joined", "--pattern", "C1"]) == EXIT_NOT_PAIRWISE
        assert "pairwise_intersecting=false witness=" in capsys.readouterr().out

    def test_bad_theta(self, capsys):
        """测试非法 θ"""
        assert _run(["build-transversal", "P5", "--theta", "abc"]) == EXIT_INPUT
        assert "theta" in capsys.readouterr().err


class TestVerifyCommand:
    """测试 verify 命令"""

    def test_lemmas(self, capsys):
        """测试小规模 lemmas 套件"""
        assert _run(["verify", "lemmas", "--cases", "5", "--seed", "3"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("suite=lemmas cases=12 violations=0 ok=true")

    def test_unknown_suite(self, capsys):
        """测试未知套件"""
        assert _run(["verify", "everything"]) == EXIT_INPUT
        assert "unknown suite" in capsys.readouterr().err

    def test_cap_rejected(self):
        """测试超出穷举上限"""
        assert _run(["verify", "folklore", "--n", "9"]) == EXIT_INPUT


class TestCatalogCommand:
    """测试 catalog 命令"""

    def test_list(self, capsys):
        """测试列出目录"""
        assert _run(["catalog", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "petersen" in out
        assert "gallai=2" in out

    def test_emit_graph(self, capsys):
        """测试输出图"""
        assert _run(["catalog", "emit", "C4"]) == EXIT_OK
        assert capsys.readouterr().out == "4 4\n0 1\n0 3\n1 2\n2 3\n"

    def test_emit_pattern(self, capsys):
        """测试输出模式"""
        assert _run(["catalog", "emit", "theta"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[:2] == ["pattern", "2 3"]

    def test_emit_unknown(self):
        """测试未知条目"""
        assert _run(["catalog", "emit", "nothing"]) == EXIT_INPUT
        assert _run(["catalog", "emit"]) == EXIT_INPUT


class TestRunRecord:
    """测试运行记录"""

    def test_ledger_written(self, tmp_path, monkeypatch):
        """测试写入运行账本"""
        monkeypatch.setattr("sys.stdin", io.StringIO(PATH5))
        assert _run(["gallai", "--ledger-dir", str(tmp_path)]) == EXIT_OK

        (path,) = tmp_path.glob("runs_*.jsonl")
        (report,) = read_ledger(path)
        assert report.command == "gallai"
        assert report.exit_code == EXIT_OK
        assert report.input_digests["graph"] == digest(PATH5)
        assert report.results["tau"] == 1

    def test_failed_run_recorded(self, tmp_path):
        """测试失败运行也记录退出码"""
        assert _run(["gallai", "no_such_graph", "--ledger-dir", str(tmp_path)]) == EXIT_INPUT
        (path,) = tmp_path.glob("runs_*.jsonl")
        assert read_ledger(path)[0].exit_code == EXIT_INPUT

    def test_summary_on_stderr(self, capsys):
        """测试运行摘要写 stderr"""
        assert _run(["gallai", "P5", "--summary"]) == EXIT_OK
        captured = capsys.readouterr()
        assert "运行摘要" in captured.err
        assert "运行摘要" not in captured.out
