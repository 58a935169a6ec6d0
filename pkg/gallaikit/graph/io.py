"""
GALLAIKIT Graph Text I/O

边表文本格式：

    n m
    u v
    ...

模式多重图在文件头前多一行 ``pattern``，允许自环与重边。
以 ``#`` 开头的行为注释。外部 1 起编号的记号只在此边界处转换。
"""

from typing import Union

import structlog

from gallaikit.exceptions import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    LoopEdgeError,
    MalformedLineError,
    VertexOutOfRangeError,
)
from gallaikit.graph.graph import Graph
from gallaikit.graph.pattern import MultigraphPattern

logger = structlog.get_logger(__name__)

PATTERN_MARKER = "pattern"


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(行号, 内容)，跳过注释与空行"""
    out = []
    for line_no, raw in enumerate(text.split("\n"), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        out.append((line_no, line))
    return out


def _parse_pair(line: str, line_no: int) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2 or not all(p.isascii() and p.isdigit() for p in parts):
        raise MalformedLineError(f"expected two nonnegative integers, got '{line}'", line_no)
    return int(parts[0]), int(parts[1])


def _parse_body(
    lines: list[tuple[int, str]], header_line_no: int, simple: bool
) -> tuple[int, list[tuple[int, int]]]:
    if not lines:
        raise MalformedLineError("missing header line 'n m'", header_line_no)
    line_no, header = lines[0]
    count, m = _parse_pair(header, line_no)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, line in lines[1:]:
        u, v = _parse_pair(line, line_no)
        if u >= count or v >= count:
            raise VertexOutOfRangeError(f"vertex id out of range 0..{count - 1}", line_no)
        if simple:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}", line_no)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {u} {v}", line_no)
            seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        last = lines[-1][0] if lines else header_line_no
        raise EdgeCountMismatchError(f"header declares {m} edges, found {len(edges)}", last)
    return count, edges


def parse_graph(text: str) -> Graph:
    """解析简单图

    Raises:
        GraphParseError 的各子类，均带行号

    Example:
        >>> parse_graph("3 2\\n0 1\\n1 2").m
        2
    """
    lines = _content_lines(text)
    if lines and lines[0][1].strip() == PATTERN_MARKER:
        raise MalformedLineError("pattern text given where a simple graph is expected", lines[0][0])
    n, edges = _parse_body(lines, 1, simple=True)
    graph = Graph(n=n, edges=tuple(edges))
    logger.debug("graph_parsed", n=graph.n, m=graph.m)
    return graph


def parse_pattern(text: str) -> MultigraphPattern:
    """解析多重图模式（首行必须为 ``pattern``）"""
    lines = _content_lines(text)
    if not lines or lines[0][1].strip() != PATTERN_MARKER:
        line_no = lines[0][0] if lines else 1
        raise MalformedLineError("pattern text must start with a 'pattern' line", line_no)
    w, edges = _parse_body(lines[1:], lines[0][0] + 1, simple=False)
    if w < 1 or not edges:
        raise MalformedLineError("pattern needs w >= 1 and at least one edge", lines[0][0])
    try:
        return MultigraphPattern(w=w, edges=tuple(edges))
    except ValueError as e:
        raise MalformedLineError(f"invalid pattern: {e}", lines[0][0]) from e


def parse_any(text: str) -> Union[Graph, MultigraphPattern]:
    """按首行自动识别图或模式"""
    lines = _content_lines(text)
    if lines and lines[0][1].strip() == PATTERN_MARKER:
        return parse_pattern(text)
    return parse_graph(text)


def serialize_graph(graph: Graph) -> str:
    """规范化输出：边 u < v 且字典序排列，LF 行尾"""
    out = [f"{graph.n} {graph.m}"]
    out.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(out) + "\n"


def serialize_pattern(pattern: MultigraphPattern) -> str:
    """模式输出，边按稳定编号顺序"""
    out = [PATTERN_MARKER, f"{pattern.w} {pattern.m}"]
    out.extend(f"{u} {v}" for u, v in pattern.edges)
    return "\n".join(out) + "\n"
