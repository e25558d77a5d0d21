"""内核异常层级。

所有异常都带稳定的 ``code``，CLI 依据它决定退出码与报告内容。
"""

from __future__ import annotations


class KernelError(Exception):
    """内核异常基类。"""

    code = "kernel-error"


class InvalidArgumentError(KernelError, ValueError):
    code = "invalid-argument"


class NotFoundError(KernelError, LookupError):
    code = "not-found"


class CapacityError(KernelError, ValueError):
    code = "capacity"


class UnsupportedOperationError(KernelError, NotImplementedError):
    code = "unsupported-operation"


class DivisionByZeroError(KernelError, ZeroDivisionError):
    code = "division-by-zero"


class PreconditionError(KernelError, ValueError):
    code = "precondition"


class ArithmeticOverflowError(KernelError, OverflowError):
    code = "overflow"


class TheoremViolationError(KernelError, RuntimeError):
    """穷举交叉校验与定理结论矛盾（对合法输入不应出现）。"""

    code = "theorem-violation"


class StructureParseError(KernelError, ValueError):
    """结构文件解析失败，携带出错行号。"""

    code = "parse-error"

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        prefix = f"第 {line} 行：" if line is not None else ""
        super().__init__(f"{prefix}{message}")


# CLI 视为用法错误（退出码 2）的异常
USAGE_ERRORS: tuple[type[KernelError], ...] = (
    InvalidArgumentError,
    NotFoundError,
    StructureParseError,
    CapacityError,
    UnsupportedOperationError,
    PreconditionError,
)
