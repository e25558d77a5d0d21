from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.services import catalog_service, construction_service, isomorphism_service, kernel_service

SAMPLES = ["K", "S", "GF(4)", "GF(5)", "GF(7)", "Z/6", "C(4)"]


def _relabel_strategy(n: int):
    return st.permutations(list(range(1, n))).map(lambda rest: (0, *rest))


@pytest.mark.unit
@pytest.mark.parametrize("name", SAMPLES)
def test_find_isomorphism_to_itself_is_verified(name) -> None:
    t = catalog_service.finite_builtin(name)
    mapping = isomorphism_service.find_isomorphism(t, t)
    assert mapping is not None
    assert kernel_service.is_isomorphism(mapping, t, t)


@pytest.mark.unit
@settings(max_examples=30, deadline=None)
@given(data=st.data(), name=st.sampled_from(SAMPLES))
def test_relabelled_copies_share_canonical_key(data, name) -> None:
    """任意固定 0 的重编号不改变规范形，且能找回同构。"""

    t = catalog_service.finite_builtin(name)
    perm = data.draw(_relabel_strategy(t.n))
    copy = t.relabel(perm, name="copy")
    assert isomorphism_service.canonical_form(copy) == isomorphism_service.canonical_form(t)
    mapping = isomorphism_service.find_isomorphism(t, copy)
    assert mapping is not None
    assert kernel_service.is_isomorphism(mapping, t, copy)


@pytest.mark.unit
def test_canonical_structure_is_isomorphic_to_input(gf5) -> None:
    form = isomorphism_service.canonical_form(gf5)
    assert form.structure.n == 5
    assert isomorphism_service.are_isomorphic(form.structure, gf5)
    assert gf5.relabel(form.perm).same_tables(form.structure)


@pytest.mark.unit
@pytest.mark.parametrize(
    "left, right",
    [
        ("K", "S"),
        ("GF(4)", "Z/4"),
        ("C(4)", "GF(4)"),
        ("GF(3)", "S"),
    ],
)
def test_non_isomorphic_pairs(left, right) -> None:
    a = catalog_service.finite_builtin(left)
    b = catalog_service.finite_builtin(right)
    assert isomorphism_service.find_isomorphism(a, b) is None
    if a.n == b.n and a.is_multiplicative == b.is_multiplicative:
        assert isomorphism_service.canonical_form(a) != isomorphism_service.canonical_form(b)


@pytest.mark.unit
def test_additive_reducts_can_coincide() -> None:
    """GF(4) 与 C(2)×C(2) 的加法部分同构。"""

    klein = construction_service.product(catalog_service.cyclic_group(2), catalog_service.cyclic_group(2))
    additive = catalog_service.finite_field(4).additive()
    assert isomorphism_service.are_isomorphic(klein, additive)
    assert isomorphism_service.canonical_form(klein) == isomorphism_service.canonical_form(additive)
    assert not isomorphism_service.are_isomorphic(catalog_service.cyclic_group(4), additive)


@pytest.mark.unit
def test_quotients_by_conjugate_choice_agree() -> None:
    field = catalog_service.finite_field(7)
    squares = construction_service.quotient(field, [1, 2, 4])
    relabelled = squares.relabel((0, 2, 1))
    assert isomorphism_service.are_isomorphic(squares, relabelled)
