"""同构判定与规范形。

两者共用一套与标号无关的元素不变量（和集大小的多重集、超逆是否为自身、
乘法阶等），再按邻接关系迭代细化。
"""

from __future__ import annotations

import logging
from itertools import permutations, product
from math import factorial
from typing import Sequence

from ..errors import CapacityError
from ..models.canonical import CanonicalForm
from ..models.elemset import bits_of, map_mask
from ..models.structure import FiniteHyperStructure
from . import kernel_service

logger = logging.getLogger(__name__)

CANONICAL_PERMUTATION_LIMIT = 200_000


def _multiplicative_order(t: FiniteHyperStructure, x: int) -> int:
    mul = t.mul
    seen = {x}
    power = x
    for step in range(1, t.n + 1):
        power = mul[power][x]
        if power in seen:
            return step
        seen.add(power)
    return t.n + 1


def _base_invariant(t: FiniteHyperStructure, x: int) -> tuple:
    add = t.add
    row = tuple(sorted(cell.bit_count() for cell in add[x]))
    column = tuple(sorted(add[y][x].bit_count() for y in range(t.n)))
    neg = t.neg[x]
    key = (
        x != 0,
        row,
        column,
        add[x][x].bit_count(),
        neg == x,
        neg is None,
        bool(add[x][x] >> x & 1),
    )
    if t.mul is not None:
        key += (x != t.one_index, _multiplicative_order(t, x), t.mul[x][x] == x)
    return key


def _refine(structures: Sequence[FiniteHyperStructure]) -> list[list[int]]:
    """对若干结构联合细化，返回可跨结构比较的整数键。"""

    signatures = [[_base_invariant(t, x) for x in range(t.n)] for t in structures]
    keys = _compress(signatures)
    classes = len({k for row in keys for k in row})
    while True:
        signatures = []
        for t, row in zip(structures, keys):
            current = []
            for x in range(t.n):
                outgoing = []
                incoming = []
                for y in range(t.n):
                    out_cell = tuple(sorted(row[z] for z in bits_of(t.add[x][y])))
                    in_cell = tuple(sorted(row[z] for z in bits_of(t.add[y][x])))
                    out_prod = row[t.mul[x][y]] if t.mul is not None else -1
                    in_prod = row[t.mul[y][x]] if t.mul is not None else -1
                    outgoing.append((row[y], out_cell, out_prod))
                    incoming.append((row[y], in_cell, in_prod))
                current.append((row[x], tuple(sorted(outgoing)), tuple(sorted(incoming))))
            signatures.append(current)
        refined = _compress(signatures)
        count = len({k for row in refined for k in row})
        keys = refined
        if count == classes:
            return keys
        classes = count


def _compress(signatures: list[list[tuple]]) -> list[list[int]]:
    ranking = {sig: i for i, sig in enumerate(sorted({sig for row in signatures for sig in row}))}
    return [[ranking[sig] for sig in row] for row in signatures]


def find_isomorphism(source: FiniteHyperStructure, target: FiniteHyperStructure) -> tuple[int, ...] | None:
    """回溯搜索固定 0（有乘法时也固定 1）的双射，找到后用同态检查双向验证。"""

    n = source.n
    if n != target.n or source.is_multiplicative != target.is_multiplicative:
        return None
    keys_a, keys_b = _refine([source, target])
    if sorted(keys_a) != sorted(keys_b):
        return None

    candidates = [[y for y in range(n) if keys_b[y] == keys_a[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    forward: list[int | None] = [None] * n
    backward: list[int | None] = [None] * n

    def consistent(x: int, y: int) -> bool:
        for a in range(n):
            fa = y if a == x else forward[a]
            if fa is None:
                continue
            for left, right, image_left, image_right in ((x, a, y, fa), (a, x, fa, y)):
                cell_a = source.add[left][right]
                cell_b = target.add[image_left][image_right]
                if cell_a.bit_count() != cell_b.bit_count():
                    return False
                for z in bits_of(cell_a):
                    fz = y if z == x else forward[z]
                    if fz is not None and not cell_b >> fz & 1:
                        return False
                for w in bits_of(cell_b):
                    pre = x if w == y else backward[w]
                    if pre is not None and not cell_a >> pre & 1:
                        return False
                if source.mul is not None:
                    p = source.mul[left][right]
                    q = target.mul[image_left][image_right]
                    fp = y if p == x else forward[p]
                    if fp is not None and fp != q:
                        return False
                    pre = x if q == y else backward[q]
                    if pre is not None and pre != p:
                        return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in candidates[x]:
            if backward[y] is not None or not consistent(x, y):
                continue
            forward[x] = y
            backward[y] = x
            if search(depth + 1):
                return True
            forward[x] = None
            backward[y] = None
        return False

    if not search(0):
        return None
    mapping = tuple(forward)
    if not kernel_service.is_isomorphism(mapping, source, target):
        logger.error("%s -> %s：回溯得到的映射未通过同态验证", source.label, target.label)
        return None
    return mapping


def are_isomorphic(source: FiniteHyperStructure, target: FiniteHyperStructure) -> bool:
    return find_isomorphism(source, target) is not None


def _serialize(t: FiniteHyperStructure, order: Sequence[int], perm: Sequence[int]) -> tuple:
    add = tuple(map_mask(t.add[x][y], perm) for x in order for y in order)
    if t.mul is None:
        return (t.n, add)
    mul = tuple(perm[t.mul[x][y]] for x in order for y in order)
    return (t.n, add, mul, perm[t.one_index])


def canonical_form(t: FiniteHyperStructure) -> CanonicalForm:
    """在与不变量相容的重编号中取序列化最小者。"""

    keys = _refine([t])[0]
    blocks: dict[int, list[int]] = {}
    for x in range(t.n):
        blocks.setdefault(keys[x], []).append(x)
    ordered_blocks = [blocks[k] for k in sorted(blocks)]

    total = 1
    for block in ordered_blocks:
        total *= factorial(len(block))
    if total > CANONICAL_PERMUTATION_LIMIT:
        raise CapacityError(f"{t.label} 的对称性过高，需要尝试 {total} 种重编号")

    best = None
    best_perm: tuple[int, ...] = ()
    for choice in product(*(permutations(block) for block in ordered_blocks)):
        order = [x for block in choice for x in block]
        if order[0] != 0:
            continue
        perm = [0] * t.n
        for new, old in enumerate(order):
            perm[old] = new
        serial = _serialize(t, order, perm)
        if best is None or serial < best:
            best = serial
            best_perm = tuple(perm)
    return CanonicalForm(key=best, structure=t.relabel(best_perm), perm=best_perm)
