from __future__ import annotations

import pytest
from pydantic import ValidationError

from app.models.report import CheckReport, CommandReport, SampleCheckReport, Violation
from app.services import report_service


def _report(**overrides) -> CommandReport:
    values = {
        "command": "classify",
        "input": "Zminusinf",
        "passed": True,
        "decomposition": ["Group(2)", "Krasner"],
        "window": "-1..1",
        "details": {"base": "GF(2)", "dd": False, "classes": ["a", "b c"], "map": {"0": "0", "1": "1"}},
    }
    values.update(overrides)
    return CommandReport(**values)


@pytest.mark.unit
def test_render_text_sections() -> None:
    text = report_service.render_text(_report())
    lines = text.splitlines()
    assert lines[0] == "[HyperKernel] classify Zminusinf"
    assert lines[1] == "结果：通过"
    assert "窗口：-1..1" in lines
    assert "分解：[Group(2), Krasner]" in lines
    assert "base：GF(2)" in lines
    assert "dd：False" in lines
    assert "  - b c" in lines
    assert "  1 = 1" in lines
    assert "种子" not in text


@pytest.mark.unit
def test_render_text_witnesses() -> None:
    report = _report(passed=False, witnesses=[Violation(axiom="Associativity", witness=(1, 1, 2), detail="1, 1, 2")])
    text = report_service.render_text(report)
    assert "结果：未通过" in text
    assert "违例（1）：" in text
    assert "  - Associativity [1, 1, 2] 1, 1, 2" in text


@pytest.mark.unit
def test_json_round_trip_drops_empty_fields() -> None:
    report = _report(window=None)
    text = report_service.to_json(report)
    assert '"window"' not in text
    assert report_service.from_json(text) == report


@pytest.mark.unit
def test_check_report_consistency() -> None:
    assert CheckReport.from_violations([]).passed
    failed = CheckReport.from_violations([Violation(axiom="NoInverse", witness=(1,))], truncated=True)
    assert not failed.passed
    assert failed.axioms() == ["NoInverse"]
    assert failed.first("NoInverse").witness == (1,)
    assert failed.first("Identity") is None
    with pytest.raises(ValidationError):
        CheckReport(passed=True, violations=[Violation(axiom="NoInverse")])


@pytest.mark.unit
def test_sample_report_coverage() -> None:
    report = SampleCheckReport(
        mode="Sign",
        x="(1,0)",
        y="(-1,0)",
        trials=10,
        depth=3,
        seed=0,
        expected="{(1,0), (-1,0), {z | z < 0}}",
        expected_finite=["(1,0)", "(-1,0)"],
        covered_finite=["(1,0)"],
    )
    assert report.passed
    assert report.coverage == 0.5
    with pytest.raises(ValidationError):
        SampleCheckReport(mode="Sign", x="0", y="0", trials=1, depth=0, seed=0, expected="{}")
