from __future__ import annotations

import importlib.util
import json
from pathlib import Path

import pytest


@pytest.fixture(scope="module")
def census_module():
    """加载普查脚本模块，直接调用各项扫描。"""

    script_path = Path(__file__).resolve().parents[2] / "scripts" / "census.py"
    spec = importlib.util.spec_from_file_location("census", script_path)
    if spec is None or spec.loader is None:
        raise RuntimeError("无法加载普查脚本")

    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.mark.unit
def test_parse_args_defaults(census_module) -> None:
    args = census_module.parse_args([])
    assert args.max_size == 5
    assert args.out == ""


@pytest.mark.unit
def test_small_dd_sweep(census_module) -> None:
    result = census_module.sweep_dd_hyperfields(3, 1)
    assert result["passed"]
    assert result["details"] == {"2": ["GF(2)", "K"], "3": ["GF(3)", "S"]}


@pytest.mark.unit
def test_dd_implies_stringent_sweep(census_module) -> None:
    result = census_module.sweep_dd_implies_stringent(3, 1)
    assert result["passed"]
    assert result["details"]["2"]["dd"] == 2
    assert result["details"]["3"]["dd"] == 2
    assert all(row["counterexamples"] == 0 for row in result["details"].values())


@pytest.mark.unit
def test_stringent_hypergroup_sweep(census_module) -> None:
    result = census_module.sweep_stringent_hypergroups(3, 1)
    assert result["details"]["2"]["shapes"] == ["Group(2)", "Krasner"]
    assert result["details"]["3"]["count"] == 6


@pytest.mark.unit
def test_semiring_and_quotient_sweeps(census_module) -> None:
    semirings = census_module.sweep_semirings()
    assert semirings["passed"]
    assert semirings["details"]["S"] == 4
    quotients = census_module.sweep_quotients()
    assert quotients["passed"]
    assert quotients["details"]["GF(5)/4"] == "K"
    assert quotients["details"]["GF(7)/1"] == "GF(7)"


@pytest.mark.unit
def test_main_writes_summary(census_module, tmp_path, capsys) -> None:
    target = tmp_path / "census.json"
    code = census_module.main(["--max-size", "3", "--workers", "1", "--out", str(target)])
    assert code == 0
    summary = json.loads(target.read_text(encoding="utf-8"))
    assert summary["passed"]
    assert [item["name"] for item in summary["sweeps"]] == [
        "dd_hyperfields",
        "dd_implies_stringent",
        "dd_criterion",
        "stringent_hypergroups",
        "stringent_hyperrings",
        "semiring_sizes",
        "krasner_quotients",
    ]
    captured = capsys.readouterr()
    assert f"[ok] {target}" in captured.out
    assert "[fail]" not in captured.err


@pytest.mark.exhaustive
def test_hyperfield_sweeps_up_to_five(census_module) -> None:
    """n ≤ 5：双重分配必严格，且 (1⊞−1)² 判据在全部严格超域上与穷举一致。"""

    implication = census_module.sweep_dd_implies_stringent(5, 0)
    assert implication["passed"]
    assert set(implication["details"]) == {"2", "3", "4", "5"}
    criterion = census_module.sweep_dd_criterion(5, 0)
    assert criterion["passed"]
    for n in ("4", "5"):
        row = criterion["details"][n]
        assert row["stringent"] > 0
        assert row["agree"] == row["stringent"]


@pytest.mark.exhaustive
def test_stringent_hypergroup_sweep_up_to_five(census_module) -> None:
    result = census_module.sweep_stringent_hypergroups(5, 0)
    assert result["passed"]
    for n in ("4", "5"):
        assert result["details"][n]["count"] > 0
        assert all(shape for shape in result["details"][n]["shapes"])
