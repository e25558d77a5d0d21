"""命令报告的输出：jinja2 文本模板与 JSON 文档。"""

from __future__ import annotations

from functools import lru_cache

from jinja2 import Environment, FileSystemLoader

from ..config import APP_NAME, TEMPLATES_DIR
from ..models.report import CommandReport


@lru_cache(maxsize=1)
def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(TEMPLATES_DIR)),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        autoescape=False,
    )


def render_text(report: CommandReport) -> str:
    template = _environment().get_template("report.txt.j2")
    return template.render(report=report, app_name=APP_NAME)


def to_json(report: CommandReport) -> str:
    return report.model_dump_json(indent=2, exclude_none=True)


def from_json(text: str) -> CommandReport:
    return CommandReport.model_validate_json(text)
