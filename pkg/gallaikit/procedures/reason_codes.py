"""
GALLAIKIT Procedure Reason Codes

证明过程失败原因的统一编码
"""

# ========== 输入假设 ==========

NOT_PAIRWISE_INTERSECTING = "NOT_PAIRWISE_INTERSECTING"
"""族不是两两相交的"""

EMPTY_FAMILY = "EMPTY_FAMILY"
"""族为空"""

TAU_BELOW_THRESHOLD = "TAU_BELOW_THRESHOLD"
"""τ 未超过 m²·θ，基圈构造不适用"""

# ========== 连接器 / 分隔集 ==========

NO_SMALL_SEPARATOR = "NO_SMALL_SEPARATOR"
"""最小分隔集不够小，Menger 给出大连接器"""

NO_ISOLATED_WITNESS = "NO_ISOLATED_WITNESS"
"""找不到只在一个端点与路径相交的成员"""

PIGEONHOLE_UNMET = "PIGEONHOLE_UNMET"
"""连接器路径数不超过 m，抽屉原理不适用"""

# ========== 圈手术 ==========

SHORTCUT_NOT_SHORTER = "SHORTCUT_NOT_SHORTER"
"""捷径长度不小于其端点的圈上距离"""

NO_QUALIFYING_SEGMENT = "NO_QUALIFYING_SEGMENT"
"""捷径的所有分段都不比圈上距离短"""

NO_SHORT_CROSSING = "NO_SHORT_CROSSING"
"""找不到比圈上距离更短的横跨路径"""

CYCLE_TOO_SHORT = "CYCLE_TOO_SHORT"
"""圈太短，无法四等分"""

BASE_CYCLE_TOO_SHORT = "BASE_CYCLE_TOO_SHORT"
"""构造出的基圈不超过 m·θ"""

MAXIMALITY_VIOLATED = "MAXIMALITY_VIOLATED"
"""加长后的圈不比原圈长（细分并非最大）"""

NO_TRANSVERSAL_CYCLE = "NO_TRANSVERSAL_CYCLE"
"""加长循环未得到横截圈"""


def format_reason(code: str, facts: dict) -> str:
    """格式化原因说明

    Args:
        code: 原因编码
        facts: 事实数据字典

    Returns:
        人类可读的解释文本

    Example:
        >>> format_reason(PIGEONHOLE_UNMET, {"paths": 1, "m": 1})
        '连接器路径数不足（|T|=1 <= m=1）'
    """
    def fact(key: str) -> str:
        return str(facts.get(key, "?"))

    messages = {
        NOT_PAIRWISE_INTERSECTING: f"族不是两两相交的（见证：{fact('witness')}）",
        EMPTY_FAMILY: "族为空，没有可命中的成员",
        TAU_BELOW_THRESHOLD: (
            f"τ 未超过阈值（τ={fact('tau')}，需要 τ > m²·θ，m={fact('m')}，θ={fact('theta')}）"
        ),
        NO_SMALL_SEPARATOR: (
            f"没有小分隔集（|S|={fact('separator')}，s={fact('s')}，θ={fact('theta')}）"
        ),
        NO_ISOLATED_WITNESS: f"端点 {fact('vertex')} 没有只在该端点与路径相交的成员",
        PIGEONHOLE_UNMET: f"连接器路径数不足（|T|={fact('paths')} <= m={fact('m')}）",
        SHORTCUT_NOT_SHORTER: (
            f"捷径不够短（‖P‖={fact('length')} >= d_C={fact('cycle_distance')}）"
        ),
        NO_QUALIFYING_SEGMENT: "捷径的所有分段都不比圈上距离短",
        NO_SHORT_CROSSING: f"长为 {fact('length')} 的圈没有短横跨路径",
        CYCLE_TOO_SHORT: f"圈长 {fact('length')} 小于 8，无法四等分",
        BASE_CYCLE_TOO_SHORT: (
            f"基圈过短（|C0|={fact('length')}，需要 > m·θ，m={fact('m')}，θ={fact('theta')}）"
        ),
        MAXIMALITY_VIOLATED: (
            f"新圈不比原圈长（|C'|={fact('new_length')} <= |C|={fact('length')}）"
        ),
        NO_TRANSVERSAL_CYCLE: f"加长 {fact('rounds')} 轮后仍未得到横截圈",
    }

    return messages.get(code, code)
