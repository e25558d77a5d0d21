from __future__ import annotations

import json

import pytest

from app.services import report_service, structure_file_service


@pytest.mark.integration
def test_check_builtin_sign(run_cli) -> None:
    result = run_cli("check", "--builtin", "S")
    assert result.code == 0
    assert result.out.startswith("[HyperKernel] check S")
    assert "结果：通过" in result.out
    assert "doubly_distributive：True" in result.out


@pytest.mark.integration
def test_check_reports_witness_for_corrupted_file(run_cli, fixtures_dir) -> None:
    result = run_cli("check", str(fixtures_dir / "corrupted_krasner.hs"), "--json")
    assert result.code == 1
    report = report_service.from_json(result.out)
    assert not report.passed
    assert "NoMultiplicativeInverse" in [item.axiom for item in report.witnesses]


@pytest.mark.integration
def test_parse_error_is_a_usage_error(run_cli, fixtures_dir) -> None:
    result = run_cli("check", str(fixtures_dir / "missing_line.hs"))
    assert result.code == 2
    assert "错误[parse-error]" in result.err
    assert result.out == ""


@pytest.mark.integration
@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("check", "--builtin", "Nope"),
        ("check",),
        ("enumerate", "--size", "2", "--dd"),
        ("check", "--builtin", "Zminusinf", "--window", "3..1"),
    ],
)
def test_usage_errors_exit_with_two(run_cli, argv) -> None:
    assert run_cli(*argv).code == 2


@pytest.mark.integration
def test_decompose_wedge_example(run_cli, fixtures_dir) -> None:
    result = run_cli("decompose", str(fixtures_dir / "wedge_example.hs"), "--json")
    assert result.code == 0
    report = report_service.from_json(result.out)
    assert report.decomposition == ["Group(2)", "Group(3)", "Krasner"]
    assert report.details["classes"] == ["a", "b c", "k"]


@pytest.mark.integration
def test_classify_zminusinf(run_cli) -> None:
    result = run_cli("classify", "--builtin", "Zminusinf", "--window", "-5..5", "--json")
    assert result.code == 0
    report = report_service.from_json(result.out)
    assert report.window == "-5..5"
    assert report.details["base"] == "GF(2)"
    assert report.details["group"] == "Z"
    assert report.details["dd"] is False


@pytest.mark.integration
def test_classify_finite_hyperfield(run_cli) -> None:
    result = run_cli("classify", "--builtin", "S", "--json")
    assert result.code == 0
    report = report_service.from_json(result.out)
    assert report.decomposition == ["Sign"]
    assert report.details["real"] is True
    assert report.details["dd"] is True


@pytest.mark.integration
def test_classify_ring(run_cli) -> None:
    report = report_service.from_json(run_cli("classify", "--builtin", "Z/6", "--json").out)
    assert report.details["reduces_to"] == "Ring"


@pytest.mark.integration
def test_check_symbolic_window(run_cli) -> None:
    result = run_cli("check", "--builtin", "sign(Z)", "--window", "-1..1", "--json")
    assert result.code == 0
    report = report_service.from_json(result.out)
    assert report.details["layers"] == 3
    assert report.details["truncated"] is True


@pytest.mark.integration
def test_check_quotient_directive(run_cli, fixtures_dir) -> None:
    report = report_service.from_json(run_cli("check", str(fixtures_dir / "quotient_gf5.hs"), "--json").out)
    assert report.passed
    assert report.details["size"] == 3
    assert report.details["stringent"] is False


@pytest.mark.integration
def test_iso(run_cli, fixtures_dir) -> None:
    same = run_cli("iso", "K", str(fixtures_dir / "krasner.hs"), "--json")
    assert same.code == 0
    report = report_service.from_json(same.out)
    assert report.details["map"] == {"0": "0", "1": "1"}
    assert report.details["canonical_key_equal"] is True
    assert run_cli("iso", "K", "S").code == 1


@pytest.mark.integration
def test_construct_quotient_writes_a_structure_file(run_cli, tmp_path) -> None:
    target = tmp_path / "out" / "gf5-squares.hs"
    result = run_cli("construct", "quotient", "GF(5)", "{1,4}", "--out", str(target))
    assert result.code == 0
    written = structure_file_service.load_structure(target)
    assert written.n == 3
    assert written.names == ("0", "[1]", "[2]")


@pytest.mark.integration
def test_construct_layer_writes_a_directive(run_cli, tmp_path) -> None:
    target = tmp_path / "twisted.hs"
    result = run_cli("construct", "layer", "GF(4)", "Z", "--frobenius", "--out", str(target), "--window", "-1..1")
    assert result.code == 0
    assert target.read_text(encoding="utf-8") == "construct: layer GF(4) Z frobenius\n"
    assert not structure_file_service.load_structure(target).is_trivial_action


@pytest.mark.integration
def test_quotient_lists_every_subgroup(run_cli) -> None:
    report = report_service.from_json(run_cli("quotient", "GF(4)", "--json").out)
    assert report.passed
    assert report.details["quotients"]["{1,a,a+1}"] == "2 元，≅ K"
    assert report.details["quotients"]["{1}"] == "4 元，≅ GF(4)"


@pytest.mark.integration
def test_semiring_commands(run_cli) -> None:
    finite = report_service.from_json(run_cli("semiring", "--builtin", "S", "--json").out)
    assert finite.details["size"] == 4
    layered = report_service.from_json(run_cli("semiring", "--builtin", "trop(Z)", "--window", "-1..1", "--json").out)
    assert layered.details["family"] == "supertropical"
    assert layered.details["closure_size"] == 7
    assert run_cli("semiring", "--builtin", "Zminusinf").code == 2


@pytest.mark.integration
def test_series_inverse(run_cli) -> None:
    result = run_cli("series", "inv", "1 + x^-1", "--depth", "4")
    assert result.code == 0
    assert "inverse：1 - x^-1 + x^-2 - x^-3 + …" in result.out


@pytest.mark.integration
def test_series_checks(run_cli) -> None:
    laws = run_cli("series", "check", "--trials", "2", "--depth", "4", "--json")
    assert laws.code == 0
    assert json.loads(laws.out)["details"]["trials"] == 2
    sample = run_cli("series", "check", "--mode", "Sign", "--x", "(1,0)", "--y", "(-1,0)", "--trials", "50", "--depth", "3")
    assert sample.code == 0


@pytest.mark.integration
def test_series_zero_inverse_fails(run_cli) -> None:
    result = run_cli("series", "inv", "0")
    assert result.code == 1
    assert "division-by-zero" in result.err


@pytest.mark.integration
def test_ordering_and_valuation(run_cli) -> None:
    ordering = report_service.from_json(run_cli("ordering", "--builtin", "S", "--json").out)
    assert ordering.details == {"real": True, "positive_cone": "0 1"}
    cones = report_service.from_json(run_cli("ordering", "--builtin", "sign(Z)", "--window", "-1..1", "--json").out)
    assert len(cones.details["cones"]) == 2
    valuation = run_cli("valuation", "--builtin", "Zminusinf", "--window", "-1..1")
    assert valuation.code == 0


@pytest.mark.integration
def test_enumerate_writes_classes(run_cli, tmp_path) -> None:
    result = run_cli("enumerate", "--size", "2", "--hyperfield", "--dd", "--workers", "1", "--out", str(tmp_path), "--json")
    assert result.code == 0
    report = report_service.from_json(result.out)
    assert report.details["count"] == 2
    assert sorted(report.details["classes"].values()) == ["GF(2)", "K"]
    assert len(list(tmp_path.glob("*.hs"))) == 2


@pytest.mark.integration
def test_text_report_lists_witnesses(run_cli, fixtures_dir) -> None:
    result = run_cli("check", str(fixtures_dir / "corrupted_krasner.hs"))
    assert "结果：未通过" in result.out
    assert "违例（" in result.out
    assert "NoMultiplicativeInverse" in result.out


@pytest.mark.integration
@pytest.mark.parametrize("name, kernel, pairs", [("layer(GF(3),Q)", "GF(3)", 67**2), ("layer(GF(5),Z)", "GF(5)", 69**2)])
def test_valuation_on_the_default_window(run_cli, name, kernel, pairs) -> None:
    result = run_cli("valuation", "--builtin", name, "--json")
    assert result.code == 0
    report = report_service.from_json(result.out)
    assert report.window == "-8..8"
    assert report.details["kernel"] == kernel
    assert report.details["pairs_checked"] == pairs


@pytest.mark.exhaustive
@pytest.mark.parametrize("command", ["check", "classify"])
def test_rational_layering_on_the_default_window(run_cli, command) -> None:
    """默认窗口上 GF(3)⋊Q 的窗口表有 67 个元素，检查与分类都要跑完。"""

    result = run_cli(command, "--builtin", "layer(GF(3),Q)", "--json")
    assert result.code == 0, result.err
    report = report_service.from_json(result.out)
    assert report.window == "-8..8"
    if command == "classify":
        assert report.details["group"] == "Q"
        assert report.details["dd"] is True
