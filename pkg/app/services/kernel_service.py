"""超运算表的集合运算与穷举公理检查。

检查器都是纯函数：先以生成器逐条产出违例，``check_*`` 收集成
``CheckReport``，``is_*`` 在第一条违例处短路，供枚举器使用。
"""

from __future__ import annotations

import logging
from itertools import islice
from typing import Iterator, Sequence

from ..config import MAX_VIOLATIONS
from ..errors import InvalidArgumentError
from ..models.elemset import ElemSet, bits_of
from ..models.report import CheckReport, Violation
from ..models.structure import FiniteHyperStructure

logger = logging.getLogger(__name__)

Witness = tuple[int, ...] | None


def extend_sum(left: ElemSet, right: ElemSet, structure: FiniteHyperStructure) -> ElemSet:
    """A ⊞ B：对 a ∈ A、b ∈ B 取 a ⊞ b 的并。"""

    if left.is_empty() or right.is_empty():
        raise InvalidArgumentError("extend_sum 的输入集合不能为空")
    if left.carrier_size != structure.n or right.carrier_size != structure.n:
        raise InvalidArgumentError("元素集合与结构的载体规模不一致")
    return ElemSet(structure.set_sum(left.bits, right.bits), structure.n)


def collect_violations(violations: Iterator[Violation]) -> CheckReport:
    items = list(islice(violations, MAX_VIOLATIONS + 1))
    truncated = len(items) > MAX_VIOLATIONS
    if truncated:
        items = items[:MAX_VIOLATIONS]
    return CheckReport.from_violations(items, truncated=truncated)


def _hypergroup_violations(t: FiniteHyperStructure) -> Iterator[Violation]:
    n = t.n
    add = t.add

    identity_ok = True
    for x in range(n):
        if add[0][x] != 1 << x or add[x][0] != 1 << x:
            identity_ok = False
            yield Violation(axiom="Identity", witness=(x,))

    for x in range(n):
        right = [y for y in range(n) if add[x][y] & 1]
        left = [y for y in range(n) if add[y][x] & 1]
        if not right or not left:
            yield Violation(axiom="NoInverse", witness=(x,))
        elif len(right) > 1 or len(left) > 1:
            extra = right if len(right) > 1 else left
            yield Violation(axiom="InverseNotUnique", witness=(x, *extra[:2]))
        elif right != left:
            yield Violation(axiom="InverseNotTwoSided", witness=(x, right[0], left[0]))

    if any(item is None for item in t.neg):
        # 后续公理都要用到 −x
        return

    neg = t.neg
    invertible = True
    for y in range(n):
        for z in range(n):
            image = add[neg[z]][neg[y]]
            for x in bits_of(add[y][z]):
                if not image >> neg[x] & 1:
                    invertible = False
                    yield Violation(axiom="Invertibility", witness=(x, y, z))

    associative = True
    for a in range(n):
        for b in range(n):
            ab = add[a][b]
            for c in range(n):
                if t.set_sum(ab, 1 << c) != t.set_sum(1 << a, add[b][c]):
                    associative = False
                    yield Violation(axiom="Associativity", witness=(a, b, c))

    # 其余公理成立时，可逆性与可反转性必须同真同假
    if identity_ok and associative and invertible != _is_reversible(t):
        logger.error("%s：可逆性与可反转性判定不一致", t.label)
        yield Violation(axiom="FormulationMismatch", detail="invertibility 与 reversibility 判定不一致")


def _is_reversible(t: FiniteHyperStructure) -> bool:
    """x ∈ y ⊞ z 蕴含 y ∈ x ⊞ −z 且 z ∈ −y ⊞ x。"""

    neg = t.neg
    add = t.add
    for y in range(t.n):
        for z in range(t.n):
            for x in bits_of(add[y][z]):
                if not add[x][neg[z]] >> y & 1:
                    return False
                if not add[neg[y]][x] >> z & 1:
                    return False
    return True


def is_reversible(t: FiniteHyperStructure) -> bool:
    if any(item is None for item in t.neg):
        return False
    return _is_reversible(t)


def check_hypergroup(t: FiniteHyperStructure) -> CheckReport:
    """单位元、唯一双边超逆、和的可逆性、扩展和结合律。"""

    return collect_violations(_hypergroup_violations(t))


def is_hypergroup(t: FiniteHyperStructure) -> bool:
    return next(_hypergroup_violations(t), None) is None


def _require_mul(t: FiniteHyperStructure) -> None:
    if t.mul is None:
        raise InvalidArgumentError(f"{t.label} 缺少乘法表")


def _skew_hyperring_violations(t: FiniteHyperStructure) -> Iterator[Violation]:
    _require_mul(t)
    n = t.n
    add = t.add
    mul = t.mul
    one = t.one_index

    yield from _hypergroup_violations(t)

    for x in range(n):
        for y in range(x + 1, n):
            if add[x][y] != add[y][x]:
                yield Violation(axiom="Commutativity", witness=(x, y))

    for x in range(n):
        if mul[one][x] != x or mul[x][one] != x:
            yield Violation(axiom="MonoidIdentity", witness=(x,))

    for x in range(n):
        if mul[0][x] != 0 or mul[x][0] != 0:
            yield Violation(axiom="Absorption", witness=(x,))

    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    yield Violation(axiom="MonoidAssociativity", witness=(a, b, c))

    for a in range(n):
        for b in range(n):
            for c in range(n):
                bc = add[b][c]
                left = t.set_product(1 << a, bc)
                if left != add[mul[a][b]][mul[a][c]]:
                    yield Violation(axiom="LeftDistributivity", witness=(a, b, c))
                right = t.set_product(bc, 1 << a)
                if right != add[mul[b][a]][mul[c][a]]:
                    yield Violation(axiom="RightDistributivity", witness=(a, b, c))


def check_skew_hyperring(t: FiniteHyperStructure) -> CheckReport:
    """加法交换超群 + 乘法幺半群 + 吸收律 + 双边分配律。"""

    _require_mul(t)
    return collect_violations(_skew_hyperring_violations(t))


def is_skew_hyperring(t: FiniteHyperStructure) -> bool:
    _require_mul(t)
    return next(_skew_hyperring_violations(t), None) is None


def _multiplicative_inverse(t: FiniteHyperStructure, x: int) -> int | None:
    mul = t.mul
    one = t.one_index
    for y in range(t.n):
        if mul[x][y] == one and mul[y][x] == one:
            return y
    return None


def _hyperfield_violations(t: FiniteHyperStructure) -> Iterator[Violation]:
    _require_mul(t)
    if t.one_index == 0:
        yield Violation(axiom="ZeroEqualsOne", witness=(0,))
    for x in range(1, t.n):
        if _multiplicative_inverse(t, x) is None:
            yield Violation(axiom="NoMultiplicativeInverse", witness=(x,))
    yield from _skew_hyperring_violations(t)


def check_hyperfield(t: FiniteHyperStructure) -> CheckReport:
    _require_mul(t)
    return collect_violations(_hyperfield_violations(t))


def is_hyperfield(t: FiniteHyperStructure) -> bool:
    _require_mul(t)
    return next(_hyperfield_violations(t), None) is None


def multiplicative_inverse(t: FiniteHyperStructure, x: int) -> int:
    _require_mul(t)
    inverse = _multiplicative_inverse(t, x)
    if inverse is None:
        raise InvalidArgumentError(f"{t.names[x]} 没有乘法逆元")
    return inverse


def is_doubly_distributive(t: FiniteHyperStructure) -> tuple[bool, Witness]:
    """(a ⊞ b)(c ⊞ d) = ac ⊞ ad ⊞ bc ⊞ bd 对全部四元组成立。"""

    _require_mul(t)
    n = t.n
    add = t.add
    mul = t.mul
    for a in range(n):
        for b in range(n):
            ab = add[a][b]
            for c in range(n):
                ac = mul[a][c]
                bc = mul[b][c]
                for d in range(n):
                    left = t.set_product(ab, add[c][d])
                    right = t.set_sum(t.set_sum(add[ac][mul[a][d]], 1 << bc), 1 << mul[b][d])
                    if left != right:
                        return False, (a, b, c, d)
    return True, None


def is_stringent(t: FiniteHyperStructure) -> tuple[bool, Witness]:
    """a ≠ −b 时 a ⊞ b 必为单点集。"""

    neg = t.neg
    for a in range(t.n):
        for b in range(t.n):
            if b == neg[a]:
                continue
            if t.add[a][b].bit_count() != 1:
                return False, (a, b)
    return True, None


def is_commutative(t: FiniteHyperStructure) -> bool:
    return all(t.add[x][y] == t.add[y][x] for x in range(t.n) for y in range(x + 1, t.n))


def is_single_valued(t: FiniteHyperStructure) -> bool:
    return all(cell.bit_count() == 1 for row in t.add for cell in row)


def is_homomorphism(
    f: Sequence[int],
    source: FiniteHyperStructure,
    target: FiniteHyperStructure,
) -> tuple[bool, Witness]:
    """f(0)=0、f(x ⊞ y) ⊆ f(x) ⊞ f(y)，双方都有乘法时再要求 f(1)=1 与保积。"""

    f = tuple(f)
    if len(f) != source.n:
        raise InvalidArgumentError("映射必须在源载体上处处有定义")
    if any(type(image) is not int or not 0 <= image < target.n for image in f):
        raise InvalidArgumentError("映射的像超出目标载体")

    if f[0] != 0:
        return False, (0,)
    for x in range(source.n):
        for y in range(source.n):
            image = 0
            for z in bits_of(source.add[x][y]):
                image |= 1 << f[z]
            if image & ~target.add[f[x]][f[y]]:
                return False, (x, y)

    if source.mul is not None and target.mul is not None:
        if f[source.one_index] != target.one_index:
            return False, (source.one_index,)
        for x in range(source.n):
            for y in range(source.n):
                if f[source.mul[x][y]] != target.mul[f[x]][f[y]]:
                    return False, (x, y)
    return True, None


def is_isomorphism(f: Sequence[int], source: FiniteHyperStructure, target: FiniteHyperStructure) -> bool:
    """双射且正反两个方向都是同态。"""

    f = tuple(f)
    if source.n != target.n or sorted(f) != list(range(target.n)):
        return False
    inverse = [0] * len(f)
    for x, image in enumerate(f):
        inverse[image] = x
    return is_homomorphism(f, source, target)[0] and is_homomorphism(inverse, target, source)[0]


def squares(t: FiniteHyperStructure) -> int:
    _require_mul(t)
    mask = 0
    for x in range(t.n):
        mask |= 1 << t.mul[x][x]
    return mask
