"""
GALLAIKIT 过程证书测试
"""

from fractions import Fraction

import pytest

from gallaikit.procedures import reason_codes
from gallaikit.procedures.certificates import Inequality, Pretransversal, ProcedureCertificate
from gallaikit.utils.exact import Threshold


class TestInequality:
    """测试不等式记录"""

    def test_of_stores_exact_values(self):
        """测试精确存储"""
        ineq = Inequality.of("half", Fraction(1, 2), "<", 1)
        assert ineq.lhs == "1/2"
        assert ineq.rhs == "1"
        assert ineq.holds
        assert ineq.recheck()
        assert ineq.render() == "1/2 < 1"

    def test_theta_times_cubed(self):
        """测试 θ·a 以立方形式记录"""
        ineq = Inequality.theta_times("t", Threshold.auto(8), 2, "<=", 4)
        assert ineq.label == "t (cubed)"
        assert (ineq.lhs, ineq.rhs) == ("64", "64")
        assert ineq.holds

    def test_tampered_record_fails_recheck(self):
        """测试篡改后的记录无法复核"""
        ineq = Inequality.of("x", 3, "<", 2)
        forged = ineq.model_copy(update={"holds": True})
        assert forged.recheck() != forged.holds
        assert not ProcedureCertificate(kind="x", status="ok", checks=(forged,)).verify()


class TestProcedureCertificate:
    """测试过程证书"""

    def test_fail_needs_reason(self):
        """测试失败证书必须带原因"""
        with pytest.raises(ValueError, match="reason"):
            ProcedureCertificate(kind="x", status="fail")

    def test_verify_ok(self):
        """测试成功证书复核"""
        cert = ProcedureCertificate(
            kind="x",
            status="ok",
            checks=(Inequality.of("a", 1, "<", 2), Inequality.of("b", 3, "<", 2, required=False)),
        )
        assert cert.verify()
        assert cert.explain() == "x: ok"

    def test_verify_rejects_unmet_requirement(self):
        """测试成功证书中必要条件不成立"""
        cert = ProcedureCertificate(kind="x", status="ok", checks=(Inequality.of("a", 3, "<", 2),))
        assert not cert.verify()

    def test_failed_certificate_verifies_records(self):
        """测试失败证书只要求记录一致"""
        cert = ProcedureCertificate(
            kind="shrink_cycle",
            status="fail",
            reason=reason_codes.NO_SHORT_CROSSING,
            checks=(Inequality.of("a", 3, "<", 2),),
            facts={"length": 12},
        )
        assert cert.verify()
        assert cert.explain() == "shrink_cycle: 长为 12 的圈没有短横跨路径"

    def test_trace_record(self):
        """测试轨迹行"""
        cert = ProcedureCertificate(
            kind="reroute_choice", status="ok", output="i=3",
            checks=(Inequality.of("a", 1, "<", 7), Inequality.of("b", 1, "<", 7)),
        )
        assert cert.trace_record().line() == (
            "step=reroute_choice hypothesis=ok output=i=3 check=1 < 7; 1 < 7"
        )

    def test_trace_record_failure(self):
        """测试失败的轨迹行"""
        cert = ProcedureCertificate(kind="base_cycle", status="fail", reason=reason_codes.EMPTY_FAMILY)
        line = cert.trace_record().line()
        assert "hypothesis=fail:EMPTY_FAMILY" in line
        assert line.endswith("check=none")


class TestReasonCodes:
    """测试原因编码"""

    def test_missing_fact_placeholder(self):
        """测试缺失事实显示为 ?"""
        text = reason_codes.format_reason(reason_codes.CYCLE_TOO_SHORT, {})
        assert "?" in text

    def test_unknown_code(self):
        """测试未知编码原样返回"""
        assert reason_codes.format_reason("SOMETHING_ELSE", {}) == "SOMETHING_ELSE"


class TestPretransversalModel:
    """测试预横截模型"""

    def test_y_inside_x(self):
        """测试 Y ⊆ X"""
        with pytest.raises(ValueError, match="inside"):
            Pretransversal(x=frozenset({0}), y=frozenset({1}), theta=Threshold.rational(1))

    def test_balance(self):
        """测试 θ·|Y| ≤ |X|"""
        with pytest.raises(ValueError):
            Pretransversal(x=frozenset({0}), y=frozenset({0}), theta=Threshold.auto(8))

    def test_member_condition(self):
        """测试成员条件"""
        pre = Pretransversal(x=frozenset({0, 1, 2}), y=frozenset({1}), theta=Threshold.rational(1))
        assert pre.member_condition((frozenset({1, 5}), frozenset({6, 7})))
        assert not pre.member_condition((frozenset({0, 5}),))
