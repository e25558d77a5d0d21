from __future__ import annotations

import pytest

from app.errors import CapacityError, InvalidArgumentError, TheoremViolationError
from app.services import catalog_service, classify_service, enumeration_service, isomorphism_service, kernel_service


def _matches(forms, names) -> bool:
    """forms 与 names 给出的内置结构逐一同构（不计顺序）。"""

    expected = [catalog_service.finite_builtin(name) for name in names]
    if len(forms) != len(expected):
        return False
    remaining = list(expected)
    for form in forms:
        hit = next((t for t in remaining if isomorphism_service.are_isomorphic(form.structure, t)), None)
        if hit is None:
            return False
        remaining.remove(hit)
    return True


@pytest.mark.unit
def test_hypergroups_of_size_two() -> None:
    forms = enumeration_service.enumerate_hypergroups(2, workers=1)
    additive = [catalog_service.finite_field(2).additive(), catalog_service.krasner().additive()]
    assert len(forms) == 2
    for t in additive:
        assert any(isomorphism_service.are_isomorphic(form.structure, t) for form in forms)


@pytest.mark.unit
def test_stringent_hypergroups_of_size_three_are_wedges() -> None:
    forms = enumeration_service.enumerate_hypergroups(3, stringent=True, workers=1)
    shapes = sorted(tuple(classify_service.decompose_wedge(form.structure).labels) for form in forms)
    assert shapes == sorted(
        [
            ("Group(3)",),
            ("Sign",),
            ("Group(2)", "Group(2)"),
            ("Group(2)", "Krasner"),
            ("Krasner", "Group(2)"),
            ("Krasner", "Krasner"),
        ]
    )


@pytest.mark.unit
def test_enumerated_hypergroups_pass_the_check() -> None:
    for form in enumeration_service.enumerate_hypergroups(3, workers=1):
        assert kernel_service.check_hypergroup(form.structure).passed
        assert form.structure.name.startswith("H3.")


@pytest.mark.unit
def test_commutative_filter_is_a_subset() -> None:
    every = {form.key for form in enumeration_service.enumerate_hypergroups(3, workers=1)}
    commutative = {form.key for form in enumeration_service.enumerate_hypergroups(3, commutative=True, workers=1)}
    assert commutative <= every


@pytest.mark.unit
def test_process_pool_gives_the_same_classes() -> None:
    serial = [form.key for form in enumeration_service.enumerate_hypergroups(3, workers=1)]
    pooled = [form.key for form in enumeration_service.enumerate_hypergroups(3, workers=2)]
    assert serial == pooled


@pytest.mark.unit
@pytest.mark.parametrize(
    "n, names",
    [
        (2, ["GF(2)", "K"]),
        (3, ["GF(3)", "S"]),
    ],
)
def test_doubly_distributive_hyperfields(n, names) -> None:
    forms = enumeration_service.enumerate_hyperfields(n, dd=True, workers=1)
    assert _matches(forms, names)


@pytest.mark.unit
def test_hyperfields_of_size_two() -> None:
    forms = enumeration_service.enumerate_hyperfields(2, workers=1)
    assert _matches(forms, ["GF(2)", "K"])
    assert enumeration_service.enumerate_hyperfields(1) == []


@pytest.mark.unit
def test_hyperfields_of_size_three() -> None:
    forms = enumeration_service.enumerate_hyperfields(3, workers=1)
    assert len(forms) > 2
    for form in forms:
        assert kernel_service.check_hyperfield(form.structure).passed
    stringent = enumeration_service.enumerate_hyperfields(3, stringent=True, workers=1)
    assert {form.key for form in stringent} <= {form.key for form in forms}


@pytest.mark.unit
def test_hyperrings_of_small_size() -> None:
    (trivial,) = enumeration_service.enumerate_hyperrings(1)
    assert trivial.structure.n == 1
    forms = enumeration_service.enumerate_hyperrings(2, workers=1)
    assert _matches(forms, ["GF(2)", "K"])
    for form in forms:
        assert classify_service.reduce_hyperring(form.structure) in ("Ring", "Hyperfield")


@pytest.mark.unit
@pytest.mark.parametrize(
    "call",
    [
        lambda: enumeration_service.enumerate_hypergroups(7),
        lambda: enumeration_service.enumerate_hyperfields(8),
        lambda: enumeration_service.enumerate_hyperrings(6),
    ],
)
def test_size_limits(call) -> None:
    with pytest.raises(CapacityError):
        call()


@pytest.mark.unit
def test_size_must_be_positive() -> None:
    with pytest.raises(InvalidArgumentError):
        enumeration_service.enumerate_hypergroups(0)


@pytest.mark.exhaustive
@pytest.mark.parametrize(
    "n, names",
    [
        (4, ["GF(4)"]),
        (5, ["GF(5)"]),
        (6, []),
        (7, ["GF(7)"]),
    ],
)
def test_doubly_distributive_hyperfields_census(n, names) -> None:
    forms = enumeration_service.enumerate_hyperfields(n, dd=True)
    assert _matches(forms, names)


@pytest.mark.exhaustive
@pytest.mark.parametrize("n", [3, 4])
def test_enumerated_stringent_hyperrings_reduce(n) -> None:
    for form in enumeration_service.enumerate_hyperrings(n):
        assert classify_service.reduce_hyperring(form.structure) in ("Ring", "Hyperfield")


@pytest.mark.unit
@pytest.mark.parametrize("n", [2, 3])
def test_doubly_distributive_hyperfields_are_stringent(n) -> None:
    """双重分配的超域一定严格。"""

    for form in enumeration_service.enumerate_hyperfields(n, workers=1):
        if kernel_service.is_doubly_distributive(form.structure)[0]:
            assert kernel_service.is_stringent(form.structure)[0]


@pytest.mark.unit
def test_non_stringent_dd_hyperfield_stops_enumeration(monkeypatch) -> None:
    """一旦出现双重分配却不严格的超域，枚举直接报错。"""

    monkeypatch.setattr(kernel_service, "is_stringent", lambda t: (False, (1, 1)))
    with pytest.raises(TheoremViolationError):
        enumeration_service.enumerate_hyperfields(2, workers=1)


@pytest.mark.exhaustive
@pytest.mark.parametrize("n", [4, 5])
def test_doubly_distributive_hyperfields_are_stringent_exhaustive(n) -> None:
    for form in enumeration_service.enumerate_hyperfields(n):
        if kernel_service.is_doubly_distributive(form.structure)[0]:
            assert kernel_service.is_stringent(form.structure)[0]


@pytest.mark.exhaustive
@pytest.mark.parametrize("n", [4, 5])
def test_stringent_hypergroups_decompose_exhaustive(n) -> None:
    """每个严格超群都与按类序重建的楔和同构，且每层都是 K、S 或群。"""

    forms = enumeration_service.enumerate_hypergroups(n, stringent=True)
    assert forms
    for form in forms:
        decomposition = classify_service.decompose_wedge(form.structure)
        assert kernel_service.is_isomorphism(decomposition.iso, form.structure, decomposition.rebuilt)
        assert sum(layer.n - 1 for layer in decomposition.layers) == n - 1
