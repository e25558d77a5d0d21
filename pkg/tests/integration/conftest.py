"""集成测试 fixture。"""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from app import main


@dataclass(frozen=True)
class CliResult:
    code: int
    out: str
    err: str


@pytest.fixture
def run_cli(capsys):
    """执行一条命令，返回退出码与标准输出 / 标准错误。"""

    def runner(*argv: str) -> CliResult:
        code = main.run(list(argv))
        captured = capsys.readouterr()
        return CliResult(code=code, out=captured.out, err=captured.err)

    return runner
