"""
GALLAIKIT Exact Arithmetic

精确整数算术：所有涉及 n^{1/3}、n^{2/3} 的比较都通过立方比较完成，
从不使用浮点数。
"""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field, model_validator

Op = Literal["<", "<=", ">", ">=", "=="]


def compare(lhs: Fraction | int, op: Op, rhs: Fraction | int) -> bool:
    """按给定比较符比较两个精确数

    Example:
        >>> compare(2, "<", 3)
        True
    """
    if op == "<":
        return lhs < rhs
    if op == "<=":
        return lhs <= rhs
    if op == ">":
        return lhs > rhs
    if op == ">=":
        return lhs >= rhs
    return lhs == rhs


def icbrt(x: int) -> int:
    """整数立方根（向下取整）

    Example:
        >>> icbrt(27)
        3
        >>> icbrt(26)
        2
    """
    if x < 0:
        raise ValueError("icbrt of negative number")
    if x < 2:
        return x
    r = int(round(x ** (1.0 / 3.0)))
    while r * r * r > x:
        r -= 1
    while (r + 1) ** 3 <= x:
        r += 1
    return r


def binomial2(c: int) -> int:
    """C(c, 2)"""
    return c * (c - 1) // 2


class Threshold(BaseModel):
    """阈值 θ 的精确表示

    θ 以其立方 cube = cube_num / cube_den 存储（θ ≥ 0）。
    θ·a <op> b（a, b ≥ 0）等价于 cube·a³ <op> b³。

    Attributes:
        cube_num: θ³ 的分子
        cube_den: θ³ 的分母
        label: 来源说明（"auto(n=12)" 或 "3/2"）
    """
    cube_num: int = Field(ge=0, description="θ³ 分子")
    cube_den: int = Field(gt=0, description="θ³ 分母")
    label: str = Field(default="", description="来源说明")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _reduced(self) -> "Threshold":
        cube = Fraction(self.cube_num, self.cube_den)
        if (cube.numerator, cube.denominator) != (self.cube_num, self.cube_den):
            raise ValueError("cube must be given in lowest terms")
        return self

    @classmethod
    def auto(cls, n: int) -> "Threshold":
        """θ = n^{1/3}"""
        return cls(cube_num=n, cube_den=1, label=f"auto(n={n})")

    @classmethod
    def rational(cls, value: Fraction | int) -> "Threshold":
        """θ = p/q"""
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"theta must be nonnegative, got {value}")
        cube = value ** 3
        return cls(cube_num=cube.numerator, cube_den=cube.denominator, label=str(value))

    @classmethod
    def parse(cls, text: str, n: int) -> "Threshold":
        """解析 "auto" 或 "p/q"

        Args:
            text: "auto"、"p/q" 或整数
            n: 宿主图顶点数（auto 模式使用）
        """
        text = text.strip()
        if text == "auto":
            return cls.auto(n)
        try:
            return cls.rational(Fraction(text))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"invalid theta '{text}': expected auto or p/q") from e

    @property
    def cube(self) -> Fraction:
        return Fraction(self.cube_num, self.cube_den)

    def scaled_cube(self, a: int) -> Fraction:
        """(θ·a)³"""
        return self.cube * a ** 3

    def times_compare(self, a: int, op: Op, b: int | Fraction) -> bool:
        """判定 θ·a <op> b

        Example:
            >>> Threshold.auto(8).times_compare(2, "<=", 4)
            True
        """
        if a < 0 or b < 0:
            raise ValueError("threshold comparisons need nonnegative operands")
        return compare(self.scaled_cube(a), op, Fraction(b) ** 3)

    def square_times_compare(self, a: int, op: Op, b: int) -> bool:
        """判定 θ²·a <op> b，即 cube²·a³ <op> b³"""
        if a < 0 or b < 0:
            raise ValueError("threshold comparisons need nonnegative operands")
        return compare(self.cube ** 2 * a ** 3, op, Fraction(b) ** 3)

    def approx(self) -> float:
        """仅用于日志显示的近似值"""
        return float(self.cube) ** (1.0 / 3.0)


def theorem_bound_holds(tau: int, n: int, m: int) -> bool:
    """τ ≤ max{5n^{2/3}, 2m²n^{1/3}}，精确比较

    Example:
        >>> theorem_bound_holds(2, 12, 1)
        True
    """
    t3 = tau ** 3
    return t3 <= 125 * n * n or t3 <= 8 * m ** 6 * n
