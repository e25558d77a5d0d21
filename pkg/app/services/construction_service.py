"""构造：积、楔和、G-分层与 Krasner 商。"""

from __future__ import annotations

import logging
from typing import Sequence

from ..config import CARRIER_CAPACITY
from ..errors import CapacityError, InvalidArgumentError, PreconditionError
from ..models.elemset import bits_of
from ..models.ordered import OrderedIndex
from ..models.structure import FiniteHyperStructure
from ..models.symbolic import SymbolicHyperfield
from . import kernel_service

logger = logging.getLogger(__name__)


def product(left: FiniteHyperStructure, right: FiniteHyperStructure) -> FiniteHyperStructure:
    """分量运算的积结构，载体为有序对 (a, b)。"""

    n = left.n * right.n
    if n > CARRIER_CAPACITY:
        raise CapacityError(f"积结构含 {n} 个元素，超出容量 {CARRIER_CAPACITY}")
    m = right.n

    def pair(a: int, b: int) -> int:
        return a * m + b

    names = [f"({x},{y})" for x in left.names for y in right.names]
    add = []
    for a1 in range(left.n):
        for b1 in range(m):
            row = []
            for a2 in range(left.n):
                for b2 in range(m):
                    mask = 0
                    for a in bits_of(left.add[a1][a2]):
                        for b in bits_of(right.add[b1][b2]):
                            mask |= 1 << pair(a, b)
                    row.append(mask)
            add.append(row)

    mul = None
    one = None
    kind = "hypergroup"
    if left.mul is not None and right.mul is not None:
        mul = [
            [pair(left.mul[a1][a2], right.mul[b1][b2]) for a2 in range(left.n) for b2 in range(m)]
            for a1 in range(left.n)
            for b1 in range(m)
        ]
        one = pair(left.one_index, right.one_index)
        kind = "hyperring"
    return FiniteHyperStructure(
        names=names,
        add=add,
        mul=mul,
        one_index=one,
        kind=kind,
        name=f"{left.label}×{right.label}",
    )


def wedge_sum(
    layers: Sequence[FiniteHyperStructure],
    index: OrderedIndex | None = None,
    *,
    name: str = "",
    capacity: int = CARRIER_CAPACITY,
) -> FiniteHyperStructure:
    """按链的顺序把各层在公共的 0 处粘合，高层吸收低层。

    同层且 0 ∈ x ⊞_g y 时，结果再并上全部更低层的元素。非零元素按
    ``<原名>_<层位置>`` 重命名。
    """

    layers = list(layers)
    if not layers:
        raise InvalidArgumentError("楔和至少需要一层")
    if index is None:
        index = OrderedIndex.chain(len(layers))
    if index.variant != "chain" or index.param != len(layers):
        raise InvalidArgumentError(f"楔和的下标必须是 chain({len(layers)})")
    n = 1 + sum(layer.n - 1 for layer in layers)
    if n > capacity:
        raise CapacityError(f"楔和含 {n} 个元素，超出容量 {capacity}")

    names = ["0"]
    owner = [-1]
    local = [0]
    offsets = []
    for position, layer in enumerate(layers):
        offsets.append(len(names))
        for x in range(1, layer.n):
            names.append(f"{layer.names[x]}_{position}")
            owner.append(position)
            local.append(x)

    def embed(position: int, x: int) -> int:
        return 0 if x == 0 else offsets[position] + x - 1

    below = [0] * len(layers)
    mask = 1
    for position, layer in enumerate(layers):
        below[position] = mask
        for x in range(1, layer.n):
            mask |= 1 << embed(position, x)

    add = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == 0 or y == 0:
                add[x][y] = 1 << (x or y)
                continue
            gx, gy = owner[x], owner[y]
            if gx > gy:
                add[x][y] = 1 << x
            elif gx < gy:
                add[x][y] = 1 << y
            else:
                inner = layers[gx].add[local[x]][local[y]]
                cell = 0
                for z in bits_of(inner):
                    cell |= 1 << embed(gx, z)
                if inner & 1:
                    cell |= below[gx]
                add[x][y] = cell
    logger.debug("楔和：%d 层，共 %d 个元素", len(layers), n)
    return FiniteHyperStructure(names=names, add=add, kind="hypergroup", name=name or "wedge", capacity=capacity)


def layering(
    base: FiniteHyperStructure,
    group: OrderedIndex,
    action: Sequence[int] | None = None,
    *,
    name: str = "",
) -> SymbolicHyperfield:
    """M ⋊ G：作用 σ 必须是 M 的自同构；非平凡作用只允许 ℤ 与 ℤ^k。"""

    if not group.is_group:
        raise InvalidArgumentError(f"{group.label} 不是有序群，不能作为层群")
    report = kernel_service.check_hyperfield(base)
    if not report.passed:
        raise PreconditionError(f"{base.label} 不是超域：{', '.join(report.axioms()[:3])}")

    identity = tuple(range(base.n))
    action = identity if action is None else tuple(action)
    if len(action) != base.n or sorted(action) != list(identity):
        raise InvalidArgumentError("作用必须是基结构载体上的置换")
    if action != identity:
        if not kernel_service.is_isomorphism(action, base, base):
            raise InvalidArgumentError(f"作用 {action} 不是 {base.label} 的自同构")
        if group.variant not in ("Z", "lex") or group.is_trivial:
            raise InvalidArgumentError(f"{group.label} 上只支持平凡作用")
    return SymbolicHyperfield(base=base, group=group, action=action, name=name)


def _generated_subgroup(field: FiniteHyperStructure, generators: Sequence[int]) -> frozenset[int]:
    mul = field.mul
    members = {field.one_index}
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = mul[x][g]
            if y not in members:
                members.add(y)
                frontier.append(y)
    return frozenset(members)


def _require_field(field: FiniteHyperStructure) -> None:
    if not kernel_service.is_single_valued(field) or not kernel_service.is_hyperfield(field):
        raise InvalidArgumentError(f"{field.label} 不是有限域")


def krasner_subgroups(field: FiniteHyperStructure) -> list[tuple[int, ...]]:
    """有限域乘法群的全部子群（乘法群循环，逐个元素生成即可穷尽）。"""

    _require_field(field)
    found = {_generated_subgroup(field, [x]) for x in range(1, field.n)}
    return sorted((tuple(sorted(group)) for group in found), key=lambda group: (len(group), group))


def quotient(field: FiniteHyperStructure, subgroup: Sequence[int], *, name: str = "") -> FiniteHyperStructure:
    """K/U：陪集加 0，[g] ⊞ [h] 为与 gU + hU 相交的陪集。"""

    _require_field(field)
    members = frozenset(subgroup)
    if not members or 0 in members or any(not 0 < u < field.n for u in members):
        raise InvalidArgumentError("子群必须是非空的非零元素集合")
    mul = field.mul
    one = field.one_index
    for a in members:
        if kernel_service.multiplicative_inverse(field, a) not in members:
            raise InvalidArgumentError(f"子群对逆元不封闭：{field.names[a]}")
        for b in members:
            if mul[a][b] not in members:
                raise InvalidArgumentError(f"子群对乘法不封闭：{field.names[a]}·{field.names[b]}")
    if one not in members:
        raise InvalidArgumentError("子群必须含乘法单位元")

    coset_of = [0] * field.n
    representatives = [0]
    for x in range(1, field.n):
        if coset_of[x]:
            continue
        label = len(representatives)
        representatives.append(x)
        for u in members:
            coset_of[mul[x][u]] = label

    k = len(representatives)
    add = []
    for g in representatives:
        row = []
        for h in representatives:
            mask = 0
            for u in members if g else (0,):
                left = mul[g][u] if g else 0
                for v in members if h else (0,):
                    right = mul[h][v] if h else 0
                    for f in bits_of(field.add[left][right]):
                        mask |= 1 << coset_of[f]
            row.append(mask)
        add.append(row)
    product_table = [[coset_of[mul[g][h]] for h in representatives] for g in representatives]
    names = ["0"] + [f"[{field.names[x]}]" for x in representatives[1:]]
    logger.info("商 %s/U：|U| = %d，%d 个陪集", field.label, len(members), k - 1)
    return FiniteHyperStructure(
        names=names,
        add=add,
        mul=product_table,
        one_index=coset_of[one],
        kind="hyperfield",
        name=name or f"{field.label}/U{len(members)}",
    )
