"""
GALLAIKIT 自定义异常层次

定义了完整的异常继承体系，用于精确的错误处理和传播。

约定：结构性输入错误抛出异常；证明过程中规模假设不成立时
返回结构化的失败结果（见 procedures.certificates），而非异常。
"""

from typing import Any


class GallaiKitException(Exception):
    """GALLAIKIT 基础异常类

    所有项目特定异常的基类。
    """
    pass


# ============================================================================
# 图层异常
# ============================================================================

class GraphException(GallaiKitException):
    """图层异常基类

    用于图、多重图模式、路径与圈相关的所有异常。
    """
    pass


class GraphParseError(GraphException):
    """图文本解析异常

    Attributes:
        line_no: 出错的行号（从 1 开始）
    """

    def __init__(self, message: str, line_no: int) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class MalformedLineError(GraphParseError):
    """行格式错误（非两个十进制整数）"""
    pass


class VertexOutOfRangeError(GraphParseError):
    """顶点编号越界"""
    pass


class LoopEdgeError(GraphParseError):
    """简单图中出现自环"""
    pass


class DuplicateEdgeError(GraphParseError):
    """简单图中出现重边"""
    pass


class EdgeCountMismatchError(GraphParseError):
    """边数与文件头声明不一致"""
    pass


class InvalidVertexError(GraphException):
    """顶点编号无效，或顶点不在给定的圈/路径上"""
    pass


class NotAPathError(GraphException):
    """顶点序列不是路径（重复顶点或相邻顶点之间无边）"""
    pass


class UndefinedConcatenationError(GraphException):
    """路径拼接无定义（连接点既不相邻也不相同）"""
    pass


class DisconnectedPatternError(GraphException):
    """多重图模式 M 不连通"""
    pass


class DisconnectedGraphError(GraphException):
    """宿主图不连通（当命令要求连通输入时）"""
    pass


# ============================================================================
# 搜索层异常
# ============================================================================

class SearchException(GallaiKitException):
    """细分搜索异常基类"""
    pass


class SearchBudgetExceededError(SearchException):
    """搜索节点预算耗尽

    绝不静默截断 vertex_sets；同时报告已找到的最好下界。
    """

    def __init__(self, message: str, best_lower_bound: int, nodes: int) -> None:
        super().__init__(f"{message} (best_lower_bound={best_lower_bound}, nodes={nodes})")
        self.best_lower_bound = best_lower_bound
        self.nodes = nodes


# ============================================================================
# 族（family）层异常
# ============================================================================

class FamilyException(GallaiKitException):
    """细分族异常基类"""
    pass


class NonExhaustiveFamilyError(FamilyException):
    """族不完整，精确求解拒绝处理"""
    pass


class NotPairwiseIntersectingError(FamilyException):
    """族不是两两相交的

    Attributes:
        witness: 一对不相交的顶点集
    """

    def __init__(self, message: str, witness: tuple[Any, Any]) -> None:
        super().__init__(message)
        self.witness = witness


# ============================================================================
# 求解器异常
# ============================================================================

class SolverException(GallaiKitException):
    """命中集求解器异常基类"""
    pass


class SolverBudgetExceededError(SolverException):
    """分支定界节点预算耗尽"""
    pass


# ============================================================================
# Menger 层异常
# ============================================================================

class MengerException(GallaiKitException):
    """连接器 / 分隔集异常基类"""
    pass


class EmptyTerminalSetError(MengerException):
    """A 或 B 为空集"""
    pass


class DualityViolationError(MengerException):
    """最大连接器与最小分隔集大小不一致（内部断言失败）"""
    pass


# ============================================================================
# 证明过程异常
# ============================================================================

class ProcedureException(GallaiKitException):
    """证明过程异常基类"""
    pass


class MalformedPartitionError(ProcedureException):
    """圈的四段划分不合法"""
    pass


class InvalidConnectorError(ProcedureException):
    """给定的路径集合不是合法的连接器"""
    pass


class ProcedureInputError(ProcedureException):
    """过程输入不满足结构性前置条件"""
    pass


class BoundViolationError(ProcedureException):
    """已证明的不等式在计算中被违反"""
    pass


class InternalProcedureError(ProcedureException):
    """前置条件成立时本不可能出现的失败"""
    pass


# ============================================================================
# 配置层异常
# ============================================================================

class ConfigException(GallaiKitException):
    """配置层异常基类

    用于配置相关的所有异常。
    """
    pass


class ConfigValidationError(ConfigException):
    """配置验证失败异常

    当配置文件验证失败时抛出。
    """
    pass


class ConfigNotFoundError(ConfigException):
    """配置文件未找到异常

    当指定的配置文件不存在时抛出。
    """
    pass
