"""G-分层超域的符号运算：元素加乘、结果集合代数与窗口截断。

加法按四种情形计算：

- 有一方为 0：返回另一方；
- 层不同：层高者吸收层低者；
- 同层且 0 ∉ u ⊞ v：层内求和；
- 同层且 0 ∈ u ⊞ v：层内和的非零部分，再并上该层以下的全部元素与 0。
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable

from ..config import WINDOW_CAPACITY
from ..errors import CapacityError, InvalidArgumentError, PreconditionError
from ..models.elemset import bits_of
from ..models.ordered import GroupElement
from ..models.report import CheckReport, Violation
from ..models.structure import FiniteHyperStructure
from ..models.symbolic import (
    ZERO,
    ZERO_NAME,
    Layered,
    SetDescription,
    SymbolicHyperfield,
    SymElement,
    WindowTable,
    ZeroElement,
)
from . import kernel_service, ordered_service

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def _permutation_power(action: tuple[int, ...], times: int) -> tuple[int, ...]:
    result = tuple(range(len(action)))
    step = action
    if times < 0:
        inverse = [0] * len(action)
        for x, image in enumerate(action):
            inverse[image] = x
        step = tuple(inverse)
        times = -times
    while times:
        if times & 1:
            result = tuple(step[x] for x in result)
        step = tuple(step[x] for x in step)
        times >>= 1
    return result


def act(F: SymbolicHyperfield, unit: int, layer: GroupElement) -> int:
    """σ^{n(g)}(u)。"""

    if F.is_trivial_action:
        return unit
    times = ordered_service.integer_part(F.group, layer)
    return _permutation_power(F.action, times)[unit]


def validate_element(x: object, F: SymbolicHyperfield) -> SymElement:
    if isinstance(x, ZeroElement):
        return ZERO
    if isinstance(x, Layered):
        if not 1 <= x.unit < F.base.n:
            raise InvalidArgumentError(f"{x.unit} 不是 {F.base.label} 的非零下标")
        ordered_service.validate(F.group, x.layer)
        return x
    raise InvalidArgumentError(f"{x!r} 不是 {F.label} 的元素")


def psi(x: SymElement, F: SymbolicHyperfield) -> GroupElement:
    """元素所在的层，0 没有层。"""

    if isinstance(x, ZeroElement):
        raise InvalidArgumentError("0 不在任何层中")
    return x.layer


def sym_neg(x: SymElement, F: SymbolicHyperfield) -> SymElement:
    if isinstance(x, ZeroElement):
        return ZERO
    return Layered(F.base.neg[x.unit], x.layer)


def sym_mul(x: SymElement, y: SymElement, F: SymbolicHyperfield) -> SymElement:
    """(u, g)·(v, h) = (u·σ_g(v), g + h)，0 吸收。"""

    x = validate_element(x, F)
    y = validate_element(y, F)
    if isinstance(x, ZeroElement) or isinstance(y, ZeroElement):
        return ZERO
    unit = F.base.mul[x.unit][act(F, y.unit, x.layer)]
    return Layered(unit, ordered_service.group_op(F.group, x.layer, y.layer))


def sym_inv(x: SymElement, F: SymbolicHyperfield) -> SymElement:
    x = validate_element(x, F)
    if isinstance(x, ZeroElement):
        raise InvalidArgumentError("0 没有乘法逆元")
    layer = ordered_service.group_inv(F.group, x.layer)
    unit = kernel_service.multiplicative_inverse(F.base, x.unit)
    return Layered(act(F, unit, layer), layer)


def _sort_key(x: SymElement, F: SymbolicHyperfield):
    if isinstance(x, ZeroElement):
        return (0,)
    return (1, ordered_service.sort_key(F.group, x.layer), x.unit)


def normalize(desc: SetDescription, F: SymbolicHyperfield) -> SetDescription:
    """去重、排序，并丢掉已被下集覆盖的有限元素。"""

    g = desc.downset_below
    if g is not None and F.group.is_trivial:
        # 平凡群没有更低的层
        return SetDescription(finite_part=_ordered(set(desc.finite_part) | {ZERO}, F))
    items = set(desc.finite_part)
    if g is not None:
        items = {
            x
            for x in items
            if not isinstance(x, ZeroElement) and not ordered_service.less(F.group, x.layer, g)
        }
    return SetDescription(finite_part=_ordered(items, F), downset_below=g)


def _ordered(items: Iterable[SymElement], F: SymbolicHyperfield) -> tuple[SymElement, ...]:
    return tuple(sorted(items, key=lambda x: _sort_key(x, F)))


def singleton(x: SymElement, F: SymbolicHyperfield) -> SetDescription:
    return SetDescription(finite_part=(validate_element(x, F),))


def downset(g: GroupElement, F: SymbolicHyperfield) -> SetDescription:
    return normalize(SetDescription(downset_below=ordered_service.validate(F.group, g)), F)


def union(left: SetDescription, right: SetDescription, F: SymbolicHyperfield) -> SetDescription:
    g = left.downset_below
    h = right.downset_below
    if g is None:
        top = h
    elif h is None:
        top = g
    else:
        top = ordered_service.max_element(F.group, g, h)
    return normalize(SetDescription(left.finite_part + right.finite_part, top), F)


def contains(desc: SetDescription, x: SymElement, F: SymbolicHyperfield) -> bool:
    x = validate_element(x, F)
    if x in desc.finite_part:
        return True
    g = desc.downset_below
    if g is None:
        return False
    return isinstance(x, ZeroElement) or ordered_service.less(F.group, x.layer, g)


def sym_add(x: SymElement, y: SymElement, F: SymbolicHyperfield) -> SetDescription:
    x = validate_element(x, F)
    y = validate_element(y, F)
    if isinstance(x, ZeroElement):
        return singleton(y, F)
    if isinstance(y, ZeroElement):
        return singleton(x, F)

    order = ordered_service.cmp(F.group, x.layer, y.layer)
    if order > 0:
        return singleton(x, F)
    if order < 0:
        return singleton(y, F)

    mask = F.base.add[x.unit][y.unit]
    units = tuple(Layered(w, x.layer) for w in bits_of(mask) if w)
    if mask & 1:
        return normalize(SetDescription(units, x.layer), F)
    return normalize(SetDescription(units), F)


def _add_to_downset(x: SymElement, g: GroupElement, F: SymbolicHyperfield) -> SetDescription:
    if isinstance(x, ZeroElement) or ordered_service.less(F.group, x.layer, g):
        return downset(g, F)
    return singleton(x, F)


def sym_set_add(left: SetDescription, right: SetDescription, F: SymbolicHyperfield) -> SetDescription:
    """A ⊞ B 的闭式：x ⊞ D(g) 为 {x} 或 D(g)，D(g) ⊞ D(h) = D(max(g, h))。"""

    result = SetDescription()
    for x in left.finite_part:
        for y in right.finite_part:
            result = union(result, sym_add(x, y, F), F)
        if right.has_downset:
            result = union(result, _add_to_downset(x, right.downset_below, F), F)
    if left.has_downset:
        for y in right.finite_part:
            result = union(result, _add_to_downset(y, left.downset_below, F), F)
        if right.has_downset:
            result = union(result, downset(ordered_service.max_element(F.group, left.downset_below, right.downset_below), F), F)
    return result


def _product_of_downsets(g: GroupElement, h: GroupElement, F: SymbolicHyperfield) -> SetDescription:
    top = ordered_service.group_op(F.group, g, h)
    epsilon = ordered_service.least_positive(F.group)
    if epsilon is not None:
        # 离散群中 a, b < 1 的乘积恰好是 ≤ gh·ε⁻² 的层
        top = ordered_service.group_sub(F.group, top, epsilon)
    return downset(top, F)


def sym_set_mul(left: SetDescription, right: SetDescription, F: SymbolicHyperfield) -> SetDescription:
    """A ⊙ B 的闭式：x·D(g) = D(ψ(x)g)，D(g)·D(h) 在稠密群中为 D(gh)。"""

    result = SetDescription()
    for x in left.finite_part:
        for y in right.finite_part:
            result = union(result, singleton(sym_mul(x, y, F), F), F)
        if right.has_downset:
            if isinstance(x, ZeroElement):
                result = union(result, singleton(ZERO, F), F)
            else:
                shifted = ordered_service.group_op(F.group, x.layer, right.downset_below)
                result = union(result, downset(shifted, F), F)
    if left.has_downset:
        for y in right.finite_part:
            if isinstance(y, ZeroElement):
                result = union(result, singleton(ZERO, F), F)
            else:
                shifted = ordered_service.group_op(F.group, left.downset_below, y.layer)
                result = union(result, downset(shifted, F), F)
        if right.has_downset:
            result = union(result, _product_of_downsets(left.downset_below, right.downset_below, F), F)
    return result


def window_layers(F: SymbolicHyperfield, window: tuple[int, int]) -> list[GroupElement]:
    lo, hi = window
    return ordered_service.window(F.group, lo, hi)


def window_elements(F: SymbolicHyperfield, window: tuple[int, int]) -> list[SymElement]:
    elements: list[SymElement] = [ZERO]
    for layer in window_layers(F, window):
        elements.extend(Layered(unit, layer) for unit in F.units)
    return elements


def materialize(
    desc: SetDescription,
    F: SymbolicHyperfield,
    window: tuple[int, int],
) -> tuple[tuple[SymElement, ...], bool]:
    """把结果集合与窗口求交，返回 (元素, 是否截断)。"""

    layers = window_layers(F, window)
    layer_set = set(layers)
    out: list[SymElement] = []
    truncated = False
    for x in desc.finite_part:
        if isinstance(x, ZeroElement) or x.layer in layer_set:
            out.append(x)
        else:
            truncated = True
    g = desc.downset_below
    if g is not None:
        out.append(ZERO)
        for layer in layers:
            if ordered_service.less(F.group, layer, g):
                out.extend(Layered(unit, layer) for unit in F.units)
        if not F.group.is_trivial:
            truncated = True
    return _ordered(set(out), F), truncated


def format_element(x: SymElement, F: SymbolicHyperfield) -> str:
    if isinstance(x, ZeroElement):
        return ZERO_NAME
    layer = ordered_service.format_element(F.group, x.layer)
    if F.base.n == 2:
        return layer
    return f"({F.base.names[x.unit]},{layer})"


def parse_element(text: str, F: SymbolicHyperfield) -> SymElement:
    raw = str(text).strip()
    if raw == ZERO_NAME:
        return ZERO
    if F.base.n == 2:
        return Layered(1, ordered_service.parse_element(F.group, raw))
    if not (raw.startswith("(") and raw.endswith(")")) or "," not in raw:
        raise InvalidArgumentError(f"符号元素应写成 (u,g)：{raw!r}")
    unit_name, layer_text = raw[1:-1].split(",", 1)
    unit = F.base.index_of(unit_name.strip())
    if unit == 0:
        raise InvalidArgumentError("层元素的单位部分不能为 0")
    return Layered(unit, ordered_service.parse_element(F.group, layer_text))


def format_description(desc: SetDescription, F: SymbolicHyperfield) -> str:
    parts = [format_element(x, F) for x in desc.finite_part]
    if desc.has_downset:
        below = ordered_service.format_element(F.group, desc.downset_below)
        parts.append(f"{{z | z < {below}}}")
        parts.append(ZERO_NAME)
    return "{" + ", ".join(parts) + "}"


def window_table(F: SymbolicHyperfield, window: tuple[int, int]) -> WindowTable:
    """窗口层上的有限加法表；下集被截断到窗口内。"""

    elements = window_elements(F, window)
    n = len(elements)
    if n > WINDOW_CAPACITY:
        raise CapacityError(f"窗口 {window[0]}..{window[1]} 含 {n} 个元素，超出容量 {WINDOW_CAPACITY}，请缩小窗口")
    position = {x: i for i, x in enumerate(elements)}
    add = []
    truncated = False
    for x in elements:
        row = []
        for y in elements:
            items, cut = materialize(sym_add(x, y, F), F, window)
            truncated = truncated or cut
            mask = 0
            for z in items:
                mask |= 1 << position[z]
            row.append(mask)
        add.append(row)
    if truncated:
        logger.info("%s 在窗口 %s..%s 上的加法表含截断的下集", F.label, window[0], window[1])
    structure = FiniteHyperStructure(
        names=[format_element(x, F) for x in elements],
        add=add,
        kind="hypergroup",
        name=f"{F.label}[{window[0]}..{window[1]}]",
        capacity=WINDOW_CAPACITY,
    )
    return WindowTable(
        structure=structure,
        elements=tuple(elements),
        layers=tuple(window_layers(F, window)),
        window=window,
        truncated=truncated,
    )


def as_finite(F: SymbolicHyperfield) -> FiniteHyperStructure:
    """平凡群上的分层就是基结构本身。"""

    if not F.group.is_trivial:
        raise PreconditionError(f"{F.label} 的层群 {F.group.label} 不平凡，无法化为有限结构")
    base = F.base
    return FiniteHyperStructure(
        names=base.names,
        add=base.add,
        mul=base.mul,
        one_index=base.one_index,
        kind=base.kind,
        name=F.label,
    )


def check_window(F: SymbolicHyperfield, window: tuple[int, int]) -> CheckReport:
    """窗口上的超群公理、严格性、分配律与层同构。"""

    table = window_table(F, window)
    t = table.structure
    report = kernel_service.check_hypergroup(t)
    violations = list(report.violations)

    base_stringent, _ = kernel_service.is_stringent(F.base)
    if base_stringent:
        stringent, witness = kernel_service.is_stringent(t)
        if not stringent:
            violations.append(Violation(axiom="Stringency", witness=witness))

    elements = table.elements
    for i, x in enumerate(elements):
        if isinstance(x, ZeroElement):
            continue
        for j, y in enumerate(elements):
            for k, z in enumerate(elements):
                yz = sym_add(y, z, F)
                left = sym_set_mul(singleton(x, F), yz, F)
                expected = sym_set_add(singleton(sym_mul(x, y, F), F), singleton(sym_mul(x, z, F), F), F)
                if left != expected:
                    violations.append(Violation(axiom="LeftDistributivity", witness=(i, j, k)))
                right = sym_set_mul(yz, singleton(x, F), F)
                expected = sym_set_add(singleton(sym_mul(y, x, F), F), singleton(sym_mul(z, x, F), F), F)
                if right != expected:
                    violations.append(Violation(axiom="RightDistributivity", witness=(i, j, k)))

    base_add = F.base.add
    for layer in table.layers:
        for u in F.units:
            for v in F.units:
                result = sym_add(Layered(u, layer), Layered(v, layer), F)
                mask = 1 if result.has_downset else 0
                for x in result.finite_part:
                    if isinstance(x, Layered) and x.layer == layer:
                        mask |= 1 << x.unit
                if mask != base_add[u][v]:
                    violations.append(
                        Violation(
                            axiom="LayerIsomorphism",
                            witness=(table.index_of(Layered(u, layer)), table.index_of(Layered(v, layer))),
                        )
                    )

    return kernel_service.collect_violations(iter(violations))
