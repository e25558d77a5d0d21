from __future__ import annotations

from pathlib import Path

import pytest

from app.errors import StructureParseError, UnsupportedOperationError
from app.models.structure import FiniteHyperStructure
from app.models.symbolic import SymbolicHyperfield
from app.services import catalog_service, kernel_service, structure_file_service


@pytest.mark.unit
def test_parse_krasner_file(fixtures_dir: Path, krasner) -> None:
    t = structure_file_service.load_structure(fixtures_dir / "krasner.hs")
    assert t.name == "K"
    assert t.kind == "hyperfield"
    assert t.same_tables(krasner)


@pytest.mark.unit
def test_parse_sign_file(fixtures_dir: Path, sign) -> None:
    t = structure_file_service.load_structure(fixtures_dir / "sign.hs")
    assert t.names == ("0", "1", "-1")
    assert t.same_tables(sign)


@pytest.mark.unit
def test_missing_add_entry_is_a_parse_error(fixtures_dir: Path) -> None:
    with pytest.raises(StructureParseError, match="-1 -1"):
        structure_file_service.load_structure(fixtures_dir / "missing_line.hs")


@pytest.mark.unit
def test_corrupted_multiplication_loads_and_fails_checks(fixtures_dir: Path) -> None:
    t = structure_file_service.load_structure(fixtures_dir / "corrupted_krasner.hs")
    report = kernel_service.check_hyperfield(t)
    assert not report.passed
    assert "NoMultiplicativeInverse" in report.axioms()


@pytest.mark.unit
def test_construct_quotient_directive(fixtures_dir: Path, gf5) -> None:
    t = structure_file_service.load_structure(fixtures_dir / "quotient_gf5.hs")
    assert t.name == "GF5-mod-sign"
    assert t.n == 3
    assert kernel_service.is_hyperfield(t)
    assert not kernel_service.is_stringent(t)[0]


@pytest.mark.unit
@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("hyperfield X\nelements: 0 1\none: 1\nadd: 1 1 -> 0 2\n", 4),
        ("hyperfield X\nelements: 0 1\none: 1\nadd: 1 1 ->\n", 4),
        ("hyperfield X\nelements: 0 1\none: 1\nadd: 1 1 -> 0\nadd: 1 1 -> 1\n", 5),
        ("hyperfield X\nelements: 0 0\n", 2),
        ("hyperfield X\nelements: 0 1\nfoo: 1\n", 3),
        ("hypergroup X\nelements: 0 1\nadd: 1 1 -> 0\nbuiltin: K\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(StructureParseError) as exc_info:
        structure_file_service.parse_structure(text)
    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"第 {line} 行")


@pytest.mark.unit
def test_hypergroup_cannot_carry_multiplication() -> None:
    text = "hypergroup X\nelements: 0 1\none: 1\nadd: 1 1 -> 0\n"
    with pytest.raises(StructureParseError):
        structure_file_service.parse_structure(text)


@pytest.mark.unit
def test_comments_and_blank_lines_are_ignored() -> None:
    text = "# C(2)\n\nhypergroup C2  # 注释\nelements: 0 1\n\nadd: 1 1 -> 0  # 1 + 1\n"
    t = structure_file_service.parse_structure(text)
    assert t.add == ((0b01, 0b10), (0b10, 0b01))


@pytest.mark.unit
def test_builtin_directive_yields_symbolic_structure() -> None:
    structure = structure_file_service.parse_structure("builtin: Zminusinf\n")
    assert isinstance(structure, SymbolicHyperfield)
    assert structure.label == "Zminusinf"


@pytest.mark.unit
def test_wedge_directive_resolves_files_next_to_the_structure(tmp_path: Path, fixtures_dir: Path) -> None:
    (tmp_path / "krasner.hs").write_text((fixtures_dir / "krasner.hs").read_text(encoding="utf-8"), encoding="utf-8")
    target = tmp_path / "stack.hs"
    target.write_text("hypergroup stack\nconstruct: wedge C(2) krasner.hs\n", encoding="utf-8")
    t = structure_file_service.load_structure(target)
    assert t.name == "stack"
    assert t.n == 3
    assert kernel_service.is_hypergroup(t)


@pytest.mark.unit
@pytest.mark.parametrize("name", ["K", "S", "GF(4)", "GF(9)", "Z/6", "C(3)", "trivial"])
def test_serialize_then_parse_is_identity(name: str) -> None:
    t = catalog_service.finite_builtin(name)
    text = structure_file_service.serialize_structure(t)
    again = structure_file_service.parse_structure(text)
    assert isinstance(again, FiniteHyperStructure)
    assert again.names == t.names
    assert again.kind == t.kind
    assert again.same_tables(t)
    assert structure_file_service.serialize_structure(again) == text


@pytest.mark.unit
def test_serialized_canonical_file_round_trips(fixtures_dir: Path) -> None:
    t = structure_file_service.load_structure(fixtures_dir / "wedge_example.hs")
    text = structure_file_service.serialize_structure(t)
    assert structure_file_service.serialize_structure(structure_file_service.parse_structure(text)) == text


@pytest.mark.unit
def test_serialize_symbolic_builtin_and_rejects_ad_hoc_layering(zminusinf) -> None:
    assert structure_file_service.serialize_structure(zminusinf) == "builtin: Zminusinf\n"
    ad_hoc = structure_file_service.parse_structure("hyperfield mine\nconstruct: layer K Q\n")
    with pytest.raises(UnsupportedOperationError):
        structure_file_service.serialize_structure(ad_hoc)


@pytest.mark.unit
def test_product_directive_with_a_plain_hypergroup_drops_multiplication() -> None:
    t = structure_file_service.parse_structure("construct: product K C(2)\n")
    assert t.n == 4
    assert t.kind == "hypergroup"
    assert "(1,1)" in t.names
    assert kernel_service.check_hypergroup(t).passed
