from __future__ import annotations

import pytest

from app.errors import PreconditionError
from app.models.symbolic import Layered
from app.services import (
    catalog_service,
    classify_service,
    construction_service,
    enumeration_service,
    isomorphism_service,
    kernel_service,
    structure_file_service,
)


@pytest.fixture(scope="module")
def wedge_example(fixtures_dir):
    return structure_file_service.load_structure(fixtures_dir / "wedge_example.hs")


@pytest.mark.unit
def test_decompose_wedge_example(wedge_example) -> None:
    decomposition = classify_service.decompose_wedge(wedge_example)
    assert decomposition.labels == ["Group(2)", "Group(3)", "Krasner"]
    assert [len(members) for members in decomposition.classes] == [1, 2, 1]
    assert kernel_service.is_isomorphism(decomposition.iso, wedge_example, decomposition.rebuilt)


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, labels",
    [
        ("K", ["Krasner"]),
        ("S", ["Sign"]),
        ("GF(5)", ["Group(5)"]),
        ("C(4)", ["Group(4)"]),
    ],
)
def test_decompose_single_layer(name, labels) -> None:
    decomposition = classify_service.decompose_wedge(catalog_service.finite_builtin(name))
    assert decomposition.labels == labels


@pytest.mark.unit
def test_decompose_rebuilds_a_constructed_wedge() -> None:
    layers = [catalog_service.sign().additive(), catalog_service.cyclic_group(3), catalog_service.sign().additive()]
    t = construction_service.wedge_sum(layers)
    decomposition = classify_service.decompose_wedge(t)
    assert decomposition.labels == ["Sign", "Group(3)", "Sign"]
    assert isomorphism_service.are_isomorphic(decomposition.rebuilt, t)


@pytest.mark.unit
def test_less_relation_on_wedge(wedge_example) -> None:
    relation = classify_service.less_relation(wedge_example)
    a, b, c, k = (wedge_example.index_of(name) for name in ("a", "b", "c", "k"))
    assert relation.less(a, b)
    assert relation.less(b, k)
    assert relation.less(a, k)
    assert not relation.comparable(b, c)


@pytest.mark.unit
def test_non_stringent_input_is_rejected(gf5) -> None:
    with pytest.raises(PreconditionError):
        classify_service.decompose_wedge(construction_service.quotient(gf5, [1, 4]))


@pytest.mark.unit
def test_identify_layer_rejects_proper_hypergroups(gf5) -> None:
    with pytest.raises(PreconditionError):
        classify_service.identify_layer(construction_service.quotient(gf5, [1, 4]))


@pytest.mark.unit
def test_extract_layering_of_zminusinf(zminusinf) -> None:
    extraction = classify_service.extract_layering(zminusinf, (-2, 2))
    assert classify_service.catalog_name(extraction.base) == "GF(2)"
    assert extraction.base_kind == "Field"
    assert extraction.group.label == "Z"
    assert extraction.truncated
    assert extraction.projection["-1"] == -1
    assert not classify_service.dd_criterion_stringent(zminusinf)


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, base, kind, dd",
    [
        ("trop(Z)", "K", "Krasner", True),
        ("trop(Q)", "K", "Krasner", True),
        ("sign(Z)", "S", "Sign", True),
        ("layer(GF(3),Q)", "GF(3)", "Field", True),
        ("layer(GF(3),Z)", "GF(3)", "Field", False),
    ],
)
def test_extract_layering_of_builtins(name, base, kind, dd) -> None:
    F = catalog_service.builtin(name)
    extraction = classify_service.extract_layering(F, (-1, 1))
    assert classify_service.catalog_name(extraction.base) == base
    assert extraction.base_kind == kind
    assert classify_service.dd_criterion_stringent(F) is dd


@pytest.mark.unit
@pytest.mark.parametrize("name", ["K", "S", "GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)"])
def test_dd_criterion_matches_exhaustive_check(name) -> None:
    F = catalog_service.finite_builtin(name)
    dd, _ = kernel_service.is_doubly_distributive(F)
    assert classify_service.dd_criterion_stringent(F) == dd


@pytest.mark.unit
def test_extract_layering_of_finite_field(gf5) -> None:
    extraction = classify_service.extract_layering(gf5)
    assert extraction.group.is_trivial
    assert extraction.base_kind == "Field"
    assert set(extraction.projection) == {"1", "2", "3", "4"}


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, real",
    [
        ("S", True),
        ("K", False),
        ("GF(3)", False),
        ("GF(4)", False),
        ("GF(5)", False),
        ("GF(7)", False),
    ],
)
def test_find_ordering(name, real) -> None:
    result = classify_service.find_ordering(catalog_service.finite_builtin(name))
    assert result.is_real is real
    assert result.found is real


@pytest.mark.unit
def test_sign_ordering_is_the_positive_half(sign) -> None:
    assert classify_service.find_ordering(sign).ordering == (0, 1)


@pytest.mark.unit
def test_positive_cones_of_signed_tropical(signed_tropical) -> None:
    result = classify_service.positive_cones(signed_tropical, (-1, 1))
    assert len(result.cones) == 2
    assert result.split_verified
    for cone in result.cones:
        assert Layered(1, 0) in cone
        assert len(cone) == 3


@pytest.mark.unit
def test_positive_cones_need_sign_base(tropical) -> None:
    with pytest.raises(PreconditionError):
        classify_service.positive_cones(tropical, (-1, 1))


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, verdict",
    [
        ("Z/5", "Ring"),
        ("Z/6", "Ring"),
        ("GF(4)", "Ring"),
        ("K", "Hyperfield"),
        ("S", "Hyperfield"),
    ],
)
def test_reduce_hyperring(name, verdict) -> None:
    assert classify_service.reduce_hyperring(catalog_service.finite_builtin(name)) == verdict


@pytest.mark.unit
def test_reduce_hyperring_requires_multiplication() -> None:
    with pytest.raises(PreconditionError):
        classify_service.reduce_hyperring(catalog_service.cyclic_group(3))


@pytest.mark.unit
def test_valuation_of_zminusinf(zminusinf) -> None:
    valuation = classify_service.valuation_of(zminusinf, (-1, 1))
    assert valuation.report.passed
    assert valuation.kernel_kind == "Field"
    assert valuation.values["-inf"] == "-inf"
    assert valuation.values["1"] == "1"
    assert valuation.pairs_checked == 16


@pytest.mark.unit
def test_valuation_of_finite_hyperfield(sign) -> None:
    valuation = classify_service.valuation_of(sign)
    assert valuation.report.passed
    assert valuation.kernel_kind == "Sign"
    assert valuation.pairs_checked == 9


@pytest.mark.unit
@pytest.mark.parametrize("name", ["K", "S", "GF(5)", "trop(Z)", "sign(Z)", "Zminusinf"])
def test_identity_audit_passes(name) -> None:
    assert classify_service.identity_audit(catalog_service.builtin(name), (-1, 1)).passed


@pytest.mark.unit
def test_identity_audit_on_wedge(wedge_example) -> None:
    assert classify_service.identity_audit(wedge_example).passed


@pytest.mark.unit
def test_catalog_name(gf4, gf5) -> None:
    assert classify_service.catalog_name(construction_service.quotient(gf4, [1, 2, 3])) == "K"
    assert classify_service.catalog_name(catalog_service.sign().additive()) == "S"
    squares = construction_service.quotient(gf5, [1, 4], name="GF5-mod-sign")
    assert classify_service.catalog_name(squares) == "GF5-mod-sign"


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, group, size",
    [
        ("Zminusinf", "Z", 3),
        ("layer(GF(3),Q)", "Q", 5),
        ("layer(GF(4),Z,frobenius)", "Z", 3),
        ("layer(K,Z^2)", "Z^2", 9),
    ],
)
def test_extract_layering_builds_group_from_classes(name, group, size) -> None:
    """层群由类上的乘法表认出，不是照抄输入。"""

    extraction = classify_service.extract_layering(catalog_service.builtin(name), (-1, 1))
    assert extraction.group.label == group
    assert len(extraction.class_table) == size
    unit = extraction.unit_class
    assert all(extraction.class_table[unit][i] == i for i in range(size))


@pytest.mark.unit
def test_extract_layering_class_table_of_finite_field(gf5) -> None:
    extraction = classify_service.extract_layering(gf5)
    assert extraction.class_table == ((0,),)
    assert extraction.unit_class == 0


@pytest.mark.unit
def test_extract_layering_needs_the_unit_layer(zminusinf) -> None:
    with pytest.raises(PreconditionError):
        classify_service.extract_layering(zminusinf, (1, 3))


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, base, group, elements",
    [
        ("layer(GF(3),Q)", "GF(3)", "Q", 67),
        ("layer(GF(5),Z)", "GF(5)", "Z", 69),
    ],
)
def test_valuation_on_the_default_window(name, base, group, elements) -> None:
    """默认窗口 -8..8 上的窗口表超过 64 个元素，仍然可以抽取与赋值。"""

    F = catalog_service.builtin(name)
    window = classify_service.default_window()
    assert window == (-8, 8)
    extraction = classify_service.extract_layering(F, window)
    assert classify_service.catalog_name(extraction.base) == base
    assert extraction.group.label == group
    valuation = classify_service.valuation_of(F, window)
    assert valuation.report.passed
    assert valuation.pairs_checked == elements**2


@pytest.mark.unit
@pytest.mark.parametrize("n", [2, 3])
def test_dd_criterion_on_enumerated_hyperfields(n) -> None:
    for form in enumeration_service.enumerate_hyperfields(n, stringent=True, workers=1):
        t = form.structure
        classify_service.extract_layering(t)
        assert classify_service.dd_criterion_stringent(t) == kernel_service.is_doubly_distributive(t)[0]


@pytest.mark.exhaustive
@pytest.mark.parametrize("n", [4, 5])
def test_dd_criterion_on_enumerated_hyperfields_exhaustive(n) -> None:
    """(1⊞−1)² 判据与穷举的双重分配检查在全部严格超域上一致。"""

    forms = enumeration_service.enumerate_hyperfields(n, stringent=True)
    assert forms
    for form in forms:
        t = form.structure
        assert classify_service.dd_criterion_stringent(t) == kernel_service.is_doubly_distributive(t)[0]
