from __future__ import annotations

import pytest

from app.errors import CapacityError, PreconditionError
from app.models.symbolic import Layered
from app.services import catalog_service, construction_service, semiring_service, symbolic_service


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, size",
    [
        ("K", 3),
        ("S", 4),
        ("GF(2)", 2),
        ("GF(3)", 3),
        ("GF(4)", 4),
        ("GF(5)", 5),
        ("GF(7)", 7),
    ],
)
def test_associated_semiring_sizes(name, size) -> None:
    table = semiring_service.associated_semiring(catalog_service.finite_builtin(name))
    assert table.size == size
    assert table.elements[0] == 1
    assert semiring_service.check_semiring(table).passed


@pytest.mark.unit
def test_sign_semiring_contains_the_full_set(sign) -> None:
    table = semiring_service.associated_semiring(sign)
    assert 0b111 in table.elements
    full = table.index_of(0b111)
    one = table.one_index
    minus = table.generators[2]
    assert table.add[one][minus] == full
    assert table.mul[full][full] == full
    assert table.add[full][one] == full


@pytest.mark.unit
def test_associated_semiring_cap_counts_the_singletons() -> None:
    """域的闭包不产生新元素，单点集本身也受上限约束。"""

    gf7 = catalog_service.finite_field(7)
    with pytest.raises(CapacityError):
        semiring_service.associated_semiring(gf7, cap=5)
    assert semiring_service.associated_semiring(gf7, cap=7).size == 7


@pytest.mark.unit
def test_associated_semiring_requires_double_distributivity(gf5) -> None:
    with pytest.raises(PreconditionError):
        semiring_service.associated_semiring(construction_service.quotient(gf5, [1, 4]))
    with pytest.raises(PreconditionError):
        semiring_service.associated_semiring(catalog_service.cyclic_group(2))


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, family",
    [
        ("trop(Z)", "supertropical"),
        ("trop(Q)", "supertropical"),
        ("sign(Z)", "symmetrised"),
        ("layer(GF(2),Q)", "linearised"),
        ("layer(GF(3),1)", "linearised"),
    ],
)
def test_semiring_family(name, family) -> None:
    assert semiring_service.semiring_family(catalog_service.builtin(name)) == family


@pytest.mark.unit
def test_field_base_over_discrete_group_has_no_semiring(zminusinf) -> None:
    with pytest.raises(PreconditionError):
        semiring_service.semiring_family(zminusinf)
    with pytest.raises(PreconditionError):
        semiring_service.layered_semiring(zminusinf, (-1, 1))


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, family, closure_size",
    [
        ("trop(Z)", "supertropical", 7),
        ("sign(Z)", "symmetrised", 10),
    ],
)
def test_layered_semiring_on_window(name, family, closure_size) -> None:
    result = semiring_service.layered_semiring(catalog_service.builtin(name), (-1, 1))
    assert result.family == family
    assert result.closure_size == closure_size
    assert len(result.elements) == closure_size
    assert result.layers == (-1, 0, 1)
    assert result.truncated


@pytest.mark.unit
def test_supertropical_closed_forms(tropical) -> None:
    one = symbolic_service.singleton(Layered(1, 0), tropical)
    two = symbolic_service.singleton(Layered(1, 2), tropical)
    ghost = semiring_service.ghost("supertropical", 0, tropical)
    assert semiring_service.closed_form_add(one, one, "supertropical", tropical) == ghost
    assert semiring_service.closed_form_add(one, two, "supertropical", tropical) == two
    assert semiring_service.closed_form_mul(ghost, two, "supertropical", tropical) == semiring_service.ghost(
        "supertropical", 2, tropical
    )


@pytest.mark.unit
def test_linearised_ghost_is_absorbed_by_units() -> None:
    F = catalog_service.builtin("layer(GF(2),Q)")
    unit = symbolic_service.singleton(Layered(1, 0), F)
    ghost = semiring_service.ghost("linearised", 0, F)
    assert not ghost.finite_part
    assert semiring_service.closed_form_add(unit, ghost, "linearised", F) == unit
    assert semiring_service.closed_form_add(unit, unit, "linearised", F) == ghost
