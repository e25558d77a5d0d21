"""伴随半环：有限结构的单点集闭包，以及分层超域的三族闭式半环。"""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterator

from ..config import SEMIRING_CAP
from ..errors import CapacityError, PreconditionError, TheoremViolationError
from ..models.report import CheckReport, Violation
from ..models.semiring import LayeredSemiring, SemiringFamily, SemiringTable
from ..models.structure import FiniteHyperStructure
from ..models.symbolic import ZERO, Layered, SetDescription, SymbolicHyperfield, ZeroElement
from . import classify_service, kernel_service, ordered_service, symbolic_service

logger = logging.getLogger(__name__)


def associated_semiring(t: FiniteHyperStructure, cap: int = SEMIRING_CAP) -> SemiringTable:
    """单点集在集合层面的 ⊕、⊙ 下的闭包（工作表算法）。"""

    if t.mul is None:
        raise PreconditionError(f"{t.label} 没有乘法，无法构造伴随半环")
    if t.n > cap:
        raise CapacityError(f"{t.label} 的 {t.n} 个单点集已超过伴随半环上限 {cap}")
    dd, witness = kernel_service.is_doubly_distributive(t)
    if not dd:
        raise PreconditionError(f"{t.label} 不是双重分配的，见证 {witness}")

    seen: set[int] = set()
    found: list[int] = []
    queue: deque[int] = deque()
    for x in range(t.n):
        mask = 1 << x
        seen.add(mask)
        found.append(mask)
        queue.append(mask)

    while queue:
        a = queue.popleft()
        for b in list(found):
            for c in (t.set_sum(a, b), t.set_sum(b, a), t.set_product(a, b), t.set_product(b, a)):
                if c in seen:
                    continue
                if len(seen) >= cap:
                    raise CapacityError(f"{t.label} 的伴随半环超过上限 {cap}")
                seen.add(c)
                found.append(c)
                queue.append(c)

    elements = tuple(sorted(found, key=lambda mask: (mask.bit_count(), mask)))
    position = {mask: i for i, mask in enumerate(elements)}
    add = tuple(tuple(position[t.set_sum(a, b)] for b in elements) for a in elements)
    mul = tuple(tuple(position[t.set_product(a, b)] for b in elements) for a in elements)
    logger.info("%s 的伴随半环含 %d 个元素", t.label, len(elements))
    return SemiringTable(
        source=t.label,
        elements=elements,
        add=add,
        mul=mul,
        generators=tuple(position[1 << x] for x in range(t.n)),
        one_index=position[1 << t.one_index],
    )


def _semiring_violations(s: SemiringTable) -> Iterator[Violation]:
    n = s.size
    add = s.add
    mul = s.mul
    zero = s.index_of(1)
    one = s.one_index
    for x in range(n):
        if add[zero][x] != x or add[x][zero] != x:
            yield Violation(axiom="AdditiveIdentity", witness=(x,))
        if mul[one][x] != x or mul[x][one] != x:
            yield Violation(axiom="MultiplicativeIdentity", witness=(x,))
        if mul[zero][x] != zero or mul[x][zero] != zero:
            yield Violation(axiom="Absorption", witness=(x,))
        for y in range(n):
            if add[x][y] != add[y][x]:
                yield Violation(axiom="AdditiveCommutativity", witness=(x, y))
            for z in range(n):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    yield Violation(axiom="AdditiveAssociativity", witness=(x, y, z))
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    yield Violation(axiom="MultiplicativeAssociativity", witness=(x, y, z))
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    yield Violation(axiom="LeftDistributivity", witness=(x, y, z))
                if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]:
                    yield Violation(axiom="RightDistributivity", witness=(x, y, z))


def check_semiring(s: SemiringTable) -> CheckReport:
    return kernel_service.collect_violations(_semiring_violations(s))


def semiring_family(F: SymbolicHyperfield) -> SemiringFamily:
    """按基结构（𝕂 / 𝕊 / 域）决定闭式半环所属的族。"""

    tag = classify_service.identify_layer(F.base.additive())
    if tag.kind == "Krasner":
        return "supertropical"
    if tag.kind == "Sign":
        return "symmetrised"
    if not (F.group.is_dense or F.group.is_trivial):
        raise PreconditionError(f"{F.label} 以域为基且 {F.group.label} 不稠密，不是双重分配的")
    return "linearised"


def _level(a: SetDescription):
    if a.has_downset:
        return a.downset_below
    return next(x.layer for x in a.finite_part if isinstance(x, Layered))


def _is_zero(a: SetDescription) -> bool:
    return not a.has_downset and len(a.finite_part) == 1 and isinstance(a.finite_part[0], ZeroElement)


def _is_unit(a: SetDescription) -> bool:
    return not a.has_downset and len(a.finite_part) == 1 and isinstance(a.finite_part[0], Layered)


def ghost(family: SemiringFamily, layer, F: SymbolicHyperfield) -> SetDescription:
    """层 g 处的非单点元：g^ν、g° 或线性化族中的 g。"""

    if family == "supertropical":
        units = (Layered(F.base.one_index, layer),)
    elif family == "symmetrised":
        units = tuple(Layered(u, layer) for u in F.units)
    else:
        units = ()
    return symbolic_service.normalize(SetDescription(units, layer), F)


def closed_form_add(a: SetDescription, b: SetDescription, family: SemiringFamily, F: SymbolicHyperfield) -> SetDescription:
    if _is_zero(a):
        return b
    if _is_zero(b):
        return a
    order = ordered_service.cmp(F.group, _level(a), _level(b))
    if family == "linearised":
        # x ⊕ g = x 当 ψ(x) ≥ g
        if order == 0 and _is_unit(a) != _is_unit(b):
            return a if _is_unit(a) else b
    if order > 0:
        return a
    if order < 0:
        return b
    layer = _level(a)
    if _is_unit(a) and _is_unit(b):
        total = symbolic_service.sym_add(a.finite_part[0], b.finite_part[0], F)
        if not total.has_downset and len(total.finite_part) == 1:
            return total
    return ghost(family, layer, F)


def closed_form_mul(a: SetDescription, b: SetDescription, family: SemiringFamily, F: SymbolicHyperfield) -> SetDescription:
    if _is_zero(a) or _is_zero(b):
        return symbolic_service.singleton(ZERO, F)
    if _is_unit(a) and _is_unit(b):
        return symbolic_service.singleton(symbolic_service.sym_mul(a.finite_part[0], b.finite_part[0], F), F)
    layer = ordered_service.group_op(F.group, _level(a), _level(b))
    return ghost(family, layer, F)


def closed_form_elements(F: SymbolicHyperfield, family: SemiringFamily, window: tuple[int, int]) -> list[SetDescription]:
    elements = [symbolic_service.singleton(ZERO, F)]
    for layer in symbolic_service.window_layers(F, window):
        elements.extend(symbolic_service.singleton(Layered(u, layer), F) for u in F.units)
        elements.append(ghost(family, layer, F))
    return elements


def _windowed_closure(F: SymbolicHyperfield, window: tuple[int, int]) -> tuple[set[int], bool, dict]:
    table = symbolic_service.window_table(F, window)
    t = table.structure
    seen = {1 << x for x in range(t.n)}
    queue = deque(seen)
    while queue:
        a = queue.popleft()
        for b in list(seen):
            for c in (t.set_sum(a, b), t.set_sum(b, a)):
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
    position = {x: i for i, x in enumerate(table.elements)}
    return seen, table.truncated, position


def layered_semiring(F: SymbolicHyperfield, window: tuple[int, int]) -> LayeredSemiring:
    """闭式半环，并与符号集合代数、窗口上的 ⊕ 闭包双重核对。"""

    family = semiring_family(F)
    elements = closed_form_elements(F, family, window)

    for a in elements:
        for b in elements:
            expected = symbolic_service.sym_set_add(a, b, F)
            if closed_form_add(a, b, family, F) != expected:
                raise TheoremViolationError(
                    f"{F.label} 的 {family} 加法与集合代数不一致："
                    f"{symbolic_service.format_description(a, F)} ⊕ {symbolic_service.format_description(b, F)}"
                )
            expected = symbolic_service.sym_set_mul(a, b, F)
            if closed_form_mul(a, b, family, F) != expected:
                raise TheoremViolationError(
                    f"{F.label} 的 {family} 乘法与集合代数不一致："
                    f"{symbolic_service.format_description(a, F)} ⊙ {symbolic_service.format_description(b, F)}"
                )

    closure, truncated, position = _windowed_closure(F, window)
    materialized = set()
    for a in elements:
        items, _ = symbolic_service.materialize(a, F, window)
        mask = 0
        for x in items:
            mask |= 1 << position[x]
        materialized.add(mask)
    if materialized != closure:
        raise TheoremViolationError(
            f"{F.label} 在窗口 {window[0]}..{window[1]} 上的 ⊕ 闭包（{len(closure)} 个）"
            f"与闭式描述（{len(materialized)} 个）不一致"
        )
    if truncated:
        logger.warning("%s 的半环核对基于截断窗口 %s..%s", F.label, window[0], window[1])
    return LayeredSemiring(
        source=F.label,
        family=family,
        window=window,
        elements=tuple(elements),
        layers=tuple(symbolic_service.window_layers(F, window)),
        closure_size=len(closure),
        truncated=truncated,
    )
