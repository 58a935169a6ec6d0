"""
GALLAIKIT CLI

命令行界面

**支持命令：**
- gallai [graph] - Gal(G)，或 --pattern 指定模式时的 τ(M,G)
- family [graph] - 列出全部最大 M-细分
- build-transversal [graph] - 按构造性论证求横截集，输出轨迹
- verify <suite> - 运行性质套件（folklore / prop1 / lemmas / bounds）
- catalog list | catalog emit <name> - 内置图与模式

图从文件读取，省略或为 "-" 时读 stdin；也可直接给目录中的图名。

**退出码：**
0 全部断言成立；1 性质违反；2 解析错误或未知输入；3 超出预算；
4 输入图不连通；5 族不是两两相交的（输出见证对）。
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Optional

import structlog

from gallaikit.config_loader import AppConfig, get_config_dict, load_config
from gallaikit.constructions.catalog import catalog_entries, get_graph, get_pattern
from gallaikit.exceptions import (
    BoundViolationError,
    ConfigException,
    DisconnectedGraphError,
    GallaiKitException,
    GraphParseError,
    NotPairwiseIntersectingError,
    SearchBudgetExceededError,
    SolverBudgetExceededError,
)
from gallaikit.explain.explain import (
    build_family_report,
    build_run_summary,
    build_tau_report,
    build_transversal_report,
    json_line,
    tau_json_lines,
    transversal_json_lines,
)
from gallaikit.graph.graph import Graph
from gallaikit.graph.io import parse_graph, parse_pattern, serialize_graph, serialize_pattern
from gallaikit.graph.pattern import MultigraphPattern
from gallaikit.ledger.ledger import Ledger
from gallaikit.logging_config import configure_logging
from gallaikit.models import RunReport, digest
from gallaikit.procedures.assembly import build_transversal
from gallaikit.procedures.certificates import TraceRecord
from gallaikit.subdivision.engine import enumerate_maximum
from gallaikit.transversal.tau import gallai, tau
from gallaikit.utils.exact import Threshold
from gallaikit.verify.suites import SUITE_NAMES, run_suite

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_DISCONNECTED = 4
EXIT_NOT_PAIRWISE = 5


class _InputError(Exception):
    """未知的图、模式或文件"""


class _Run:
    """一次命令调用累积的输出与记录"""

    def __init__(self, command: str, config: AppConfig) -> None:
        self.command = command
        self.config = config
        self.json = config.report.json_output
        self.digests: dict[str, str] = {}
        self.results: dict[str, Any] = {}
        self.trace: list[TraceRecord] = []
        self.seed: Optional[int] = None

    def emit(self, text: str) -> None:
        if text:
            print(text)

    def emit_lines(self, lines: list[str]) -> None:
        for line in lines:
            print(line)


# ============================================================================
# 参数解析
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, help="细分搜索节点预算")
    common.add_argument("--jobs", type=int, help="搜索并行进程数")
    common.add_argument("--json", action="store_true", default=None, help="逐行 JSON 输出")
    common.add_argument("--config", help="自定义 YAML 配置文件")
    common.add_argument("--env", choices=["dev", "test", "prod"], help="配置环境")
    common.add_argument("--ledger-dir", help="运行账本目录")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--summary", action="store_true", help="在 stderr 输出运行摘要")

    parser = argparse.ArgumentParser(
        prog="gallaikit",
        description="最大细分族的横截集：Gallai 数、τ(M,G) 与构造性验证",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gallai", parents=[common], help="Gal(G) 或 τ(M,G)")
    p.add_argument("graph", nargs="?", default="-", help="图文件、目录名或 -（stdin）")
    p.add_argument("--pattern", default="K2", help="模式名或模式文件")

    p = sub.add_parser("family", parents=[common], help="列出最大 M-细分")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--pattern", default="K2")
    p.add_argument("--limit", type=int, help="最多列出的成员数")

    p = sub.add_parser("build-transversal", parents=[common], help="构造横截集")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--pattern", default="K2")
    p.add_argument("--theta", help="auto 或有理数 p/q")

    p = sub.add_parser("verify", parents=[common], help="运行性质套件")
    p.add_argument("suite", help=" | ".join(SUITE_NAMES))
    p.add_argument("--n", type=int, help="穷举的顶点数上限")
    p.add_argument("--m", type=int, help="模式边数上限")
    p.add_argument("--seed", type=int)
    p.add_argument("--cases", type=int)
    p.add_argument("--tree-n", type=int)
    p.add_argument("--random-n", type=int)

    p = sub.add_parser("catalog", parents=[common], help="内置图与模式")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")

    return parser


def _resolve_config(args: argparse.Namespace) -> AppConfig:
    """YAML 配置之上叠加命令行参数"""
    base = get_config_dict(load_config(environment=args.env, config_path=args.config))
    flags = {
        ("search", "node_budget"): args.budget,
        ("search", "jobs"): args.jobs,
        ("report", "json"): args.json,
        ("report", "ledger_dir"): args.ledger_dir,
        ("logging", "level"): args.log_level,
        ("verify", "n"): getattr(args, "n", None),
        ("verify", "m"): getattr(args, "m", None),
        ("verify", "seed"): getattr(args, "seed", None),
        ("verify", "cases"): getattr(args, "cases", None),
        ("verify", "tree_n"): getattr(args, "tree_n", None),
        ("verify", "random_n"): getattr(args, "random_n", None),
        ("procedures", "theta"): getattr(args, "theta", None),
        ("search", "member_limit"): getattr(args, "limit", None),
    }
    for (section, key), value in flags.items():
        if value is not None:
            base[section][key] = value
    try:
        return AppConfig(**base)
    except ValueError as e:
        raise _InputError(f"invalid option: {e}") from e


# ============================================================================
# 输入
# ============================================================================

def _read_graph(source: str, run: _Run) -> Graph:
    if source == "-":
        text = sys.stdin.read()
        run.digests["graph"] = digest(text)
        return parse_graph(text)
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        run.digests["graph"] = digest(text)
        return parse_graph(text)
    graph = get_graph(source)
    if graph is None:
        raise _InputError(f"no graph file or catalog graph named '{source}'")
    run.digests["graph"] = digest(serialize_graph(graph))
    return graph


def _read_pattern(source: str, run: _Run) -> MultigraphPattern:
    pattern = get_pattern(source)
    if pattern is not None:
        run.digests["pattern"] = digest(serialize_pattern(pattern))
        return pattern
    path = Path(source)
    if not path.is_file():
        raise _InputError(f"no pattern named '{source}' and no such file")
    text = path.read_text(encoding="utf-8")
    run.digests["pattern"] = digest(text)
    return parse_pattern(text).model_copy(update={"name": path.stem})


# ============================================================================
# 命令
# ============================================================================

def cmd_gallai(args: argparse.Namespace, run: _Run) -> int:
    graph = _read_graph(args.graph, run)
    pattern = _read_pattern(args.pattern, run)
    search = run.config.search
    budgets = {
        "node_budget": search.node_budget,
        "solver_budget": run.config.solver.node_budget,
        "jobs": search.jobs,
    }
    is_gallai = pattern.name == "K2"
    if is_gallai:
        result = gallai(graph, **budgets)
    else:
        if not graph.is_connected():
            raise DisconnectedGraphError(f"graph with n={graph.n} is not connected")
        result = tau(graph, pattern, **budgets)

    run.results = {
        "pattern": pattern.name,
        "tau": result.tau,
        "witness": list(result.witness),
        "mu": result.mu,
        "count": result.members,
        "lower_bound_certificate": result.certificate.kind,
    }
    if run.json:
        run.emit_lines(tau_json_lines(result, gallai=is_gallai))
    else:
        run.emit(build_tau_report(result, gallai=is_gallai))
    return EXIT_OK


def cmd_family(args: argparse.Namespace, run: _Run) -> int:
    graph = _read_graph(args.graph, run)
    pattern = _read_pattern(args.pattern, run)
    search = run.config.search
    family = enumerate_maximum(
        graph, pattern, limit=search.member_limit, node_budget=search.node_budget, jobs=search.jobs
    )
    run.results = {
        "pattern": pattern.name,
        "edge_size": family.edge_size,
        "mu": family.mu,
        "count": family.member_count,
        "status": family.status,
    }
    if run.json:
        run.emit(json_line({**run.results, "vertex_sets": [sorted(s) for s in family.vertex_sets]}))
    else:
        run.emit(build_family_report(family))
    return EXIT_OK


def cmd_build_transversal(args: argparse.Namespace, run: _Run) -> int:
    graph = _read_graph(args.graph, run)
    pattern = _read_pattern(args.pattern, run)
    try:
        theta = Threshold.parse(run.config.procedures.theta, graph.n)
    except ValueError as e:
        raise _InputError(str(e)) from e

    build = build_transversal(
        graph,
        pattern,
        theta=theta,
        node_budget=run.config.search.node_budget,
        solver_budget=run.config.solver.node_budget,
        max_extension_rounds=run.config.procedures.max_extension_rounds,
        jobs=run.config.search.jobs,
    )
    run.trace = list(build.trace)
    run.results = {
        "pattern": pattern.name,
        "size": build.size,
        "vertices": list(build.vertices),
        "fallback": build.fallback,
        "fallback_reason": build.fallback_reason,
        "within_bound": build.within_bound,
        "theta": build.theta,
    }
    if run.json:
        run.emit_lines(transversal_json_lines(build))
    else:
        run.emit(build_transversal_report(build))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, run: _Run) -> int:
    if args.suite not in SUITE_NAMES:
        raise _InputError(f"unknown suite '{args.suite}', expected one of {', '.join(SUITE_NAMES)}")
    run.seed = run.config.verify.seed
    report = run_suite(args.suite, run.config)
    run.results = {
        "suite": report.suite,
        "cases": report.cases,
        "violations": len(report.violations),
        "params": report.params,
    }
    if run.json:
        run.emit(report.model_dump_json())
    else:
        run.emit(report.summary_line())
        for violation in report.violations:
            run.emit(f"violation check={violation.check} pattern={violation.pattern} {violation.detail}")

    worst = report.minimal_reproducer()
    if worst is None:
        return EXIT_OK
    if not run.json and worst.reproducer:
        run.emit("# minimal reproducer")
        run.emit(worst.reproducer.rstrip("\n"))
    return EXIT_VIOLATION


def cmd_catalog(args: argparse.Namespace, run: _Run) -> int:
    if args.action == "list":
        for entry in catalog_entries():
            if run.json:
                run.emit(entry.model_dump_json())
            else:
                known = " ".join(f"{k}={v}" for k, v in entry.known.items())
                run.emit(f"{entry.kind:<8} {entry.name:<24} {known}".rstrip())
        return EXIT_OK

    if not args.name:
        raise _InputError("catalog emit needs a name")
    graph = get_graph(args.name)
    if graph is not None:
        run.emit(serialize_graph(graph).rstrip("\n"))
        return EXIT_OK
    pattern = get_pattern(args.name)
    if pattern is not None:
        run.emit(serialize_pattern(pattern).rstrip("\n"))
        return EXIT_OK
    raise _InputError(f"no catalog entry named '{args.name}'")


_COMMANDS = {
    "gallai": cmd_gallai,
    "family": cmd_family,
    "build-transversal": cmd_build_transversal,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


# ============================================================================
# 入口
# ============================================================================

def _dispatch(args: argparse.Namespace, run: _Run) -> int:
    """运行命令并把异常映射到退出码"""
    try:
        return _COMMANDS[args.command](args, run)
    except (GraphParseError, _InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (SearchBudgetExceededError, SolverBudgetExceededError) as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except DisconnectedGraphError as e:
        print(f"disconnected input: {e}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except NotPairwiseIntersectingError as e:
        a, b = e.witness
        run.results = {"witness": [sorted(a), sorted(b)]}
        print(f"pairwise_intersecting=false witness={sorted(a)} {sorted(b)}")
        return EXIT_NOT_PAIRWISE
    except BoundViolationError as e:
        print(f"violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except GallaiKitException as e:
        logger.error("command_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATION


def main(argv: Optional[list[str]] = None) -> int:
    """命令行入口，返回退出码"""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)

    try:
        config = _resolve_config(args)
    except (ConfigException, _InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging(config.logging.level, config.logging.format)

    run = _Run(args.command, config)
    started, clock = time.time(), time.perf_counter()
    exit_code = _dispatch(args, run)
    report = RunReport(
        ts=started,
        command=args.command,
        argv=argv,
        input_digests=run.digests,
        seed=run.seed,
        results=run.results,
        trace=run.trace,
        wall_time=time.perf_counter() - clock,
        exit_code=exit_code,
    )
    logger.info("command_finished", command=args.command, exit_code=exit_code, wall_time=report.wall_time)

    if config.report.ledger_dir:
        with Ledger(config.report.ledger_dir) as ledger:
            ledger.append(report)
    if args.summary:
        print(build_run_summary(report), file=sys.stderr)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
