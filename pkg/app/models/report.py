"""检查报告与命令报告（pydantic 文档，--json 直接输出）。"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field, model_validator


class Violation(BaseModel):
    """一条公理违例：公理名 + 见证元素下标。"""

    axiom: str
    witness: tuple[int, ...] = ()
    detail: str = ""


class CheckReport(BaseModel):
    """passed 当且仅当 violations 为空。"""

    passed: bool = True
    violations: list[Violation] = Field(default_factory=list)
    truncated: bool = False

    @model_validator(mode="after")
    def _passed_matches_violations(self) -> CheckReport:
        if self.passed != (not self.violations):
            raise ValueError("passed 必须与 violations 是否为空一致")
        return self

    @classmethod
    def from_violations(cls, violations: list[Violation], *, truncated: bool = False) -> CheckReport:
        return cls(passed=not violations, violations=violations, truncated=truncated)

    def axioms(self) -> list[str]:
        return [item.axiom for item in self.violations]

    def first(self, axiom: str) -> Violation | None:
        return next((item for item in self.violations if item.axiom == axiom), None)


class SampleCheckReport(BaseModel):
    """商映射抽样校验结果。"""

    mode: str
    x: str
    y: str
    trials: int = Field(ge=0)
    depth: int = Field(ge=1)
    seed: int
    expected: str
    observed: dict[str, int] = Field(default_factory=dict)
    outside: list[str] = Field(default_factory=list)
    expected_finite: list[str] = Field(default_factory=list)
    covered_finite: list[str] = Field(default_factory=list)
    downset_hits: int = 0

    @property
    def passed(self) -> bool:
        return not self.outside

    @property
    def coverage(self) -> float:
        if not self.expected_finite:
            return 1.0
        return len(self.covered_finite) / len(self.expected_finite)


class CommandReport(BaseModel):
    """CLI 单条命令的机器可读输出。"""

    command: str
    input: str
    passed: bool
    witnesses: list[Violation] = Field(default_factory=list)
    decomposition: list[str] | None = None
    window: str | None = None
    depth: int | None = None
    seed: int | None = None
    details: dict[str, Any] = Field(default_factory=dict)
