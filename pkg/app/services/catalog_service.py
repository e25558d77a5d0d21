"""内置结构：有限域、𝕂、𝕊、循环群，以及分层超域的名字解析。"""

from __future__ import annotations

import logging
import re
from functools import lru_cache

from ..errors import InvalidArgumentError, NotFoundError
from ..models.structure import FiniteHyperStructure
from ..models.symbolic import SymbolicHyperfield
from . import construction_service, ordered_service

logger = logging.getLogger(__name__)

# 不可约多项式按 p 进制编码：x²+x+1 -> 7，x³+x+1 -> 11，x²+1 -> 10
FIELD_MODULI: dict[int, tuple[int, int, int]] = {
    2: (2, 1, 0),
    3: (3, 1, 0),
    4: (2, 2, 7),
    5: (5, 1, 0),
    7: (7, 1, 0),
    8: (2, 3, 11),
    9: (3, 2, 10),
}

SYMBOLIC_ALIASES = {
    "Zminusinf": ("GF(2)", "Z"),
    "trop(Z)": ("K", "Z"),
    "trop(Q)": ("K", "Q"),
    "sign(Z)": ("S", "Z"),
}

_GF = re.compile(r"^GF\((\d+)\)$")
_CYCLIC = re.compile(r"^C\((\d+)\)$")
_RING = re.compile(r"^Z/(\d+)$")
_LAYER = re.compile(r"^layer\((.+)\)$")


def _digits(value: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(value % p)
        value //= p
    return out


def _from_digits(digits: list[int], p: int) -> int:
    value = 0
    for digit in reversed(digits):
        value = value * p + digit
    return value


def _poly_mul(a: int, b: int, p: int, k: int, modulus: int) -> int:
    """GF(p^k) 中的乘法：系数在 GF(p) 上的多项式乘积对不可约多项式取模。"""

    left = _digits(a, p, k)
    right = _digits(b, p, k)
    product = [0] * (2 * k - 1)
    for i, x in enumerate(left):
        if not x:
            continue
        for j, y in enumerate(right):
            product[i + j] = (product[i + j] + x * y) % p

    reducer = _digits(modulus, p, k + 1)
    # 首一多项式，x^k = -(低次部分)
    for degree in range(len(product) - 1, k - 1, -1):
        lead = product[degree]
        if not lead:
            continue
        for i in range(k + 1):
            product[degree - k + i] = (product[degree - k + i] - lead * reducer[i]) % p
    return _from_digits(product[:k], p)


def _poly_name(value: int, p: int, k: int) -> str:
    if k == 1:
        return str(value)
    if value == 0:
        return "0"
    terms = []
    for degree, coeff in reversed(list(enumerate(_digits(value, p, k)))):
        if not coeff:
            continue
        if degree == 0:
            terms.append(str(coeff))
            continue
        power = "a" if degree == 1 else f"a^{degree}"
        terms.append(power if coeff == 1 else f"{coeff}{power}")
    return "+".join(terms)


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteHyperStructure:
    """GF(q)，下标即多项式系数的 p 进制编码。"""

    if q not in FIELD_MODULI:
        raise NotFoundError(f"没有内置的 GF({q})，支持 {sorted(FIELD_MODULI)}")
    p, k, modulus = FIELD_MODULI[q]
    names = [_poly_name(value, p, k) for value in range(q)]
    add = []
    for a in range(q):
        da = _digits(a, p, k)
        row = []
        for b in range(q):
            db = _digits(b, p, k)
            row.append(1 << _from_digits([(x + y) % p for x, y in zip(da, db)], p))
        add.append(row)
    if k == 1:
        mul = [[(a * b) % p for b in range(q)] for a in range(q)]
    else:
        mul = [[_poly_mul(a, b, p, k, modulus) for b in range(q)] for a in range(q)]
    return FiniteHyperStructure(names=names, add=add, mul=mul, one_index=1, kind="hyperfield", name=f"GF({q})")


def characteristic(q: int) -> int:
    return FIELD_MODULI[q][0]


def frobenius(field: FiniteHyperStructure) -> tuple[int, ...]:
    """x ↦ x^p 作为下标置换。"""

    if field.n not in FIELD_MODULI or field.name != f"GF({field.n})":
        raise InvalidArgumentError(f"{field.label} 不是内置有限域，无法取 Frobenius")
    p = FIELD_MODULI[field.n][0]
    out = []
    for x in range(field.n):
        value = field.one_index
        for _ in range(p):
            value = field.mul[value][x]
        out.append(value)
    return tuple(out)


@lru_cache(maxsize=None)
def krasner() -> FiniteHyperStructure:
    return FiniteHyperStructure(
        names=("0", "1"),
        add=((0b01, 0b10), (0b10, 0b11)),
        mul=((0, 0), (0, 1)),
        one_index=1,
        kind="hyperfield",
        name="K",
    )


@lru_cache(maxsize=None)
def sign() -> FiniteHyperStructure:
    return FiniteHyperStructure(
        names=("0", "1", "-1"),
        add=((0b001, 0b010, 0b100), (0b010, 0b010, 0b111), (0b100, 0b111, 0b100)),
        mul=((0, 0, 0), (0, 1, 2), (0, 2, 1)),
        one_index=1,
        kind="hyperfield",
        name="S",
    )


@lru_cache(maxsize=None)
def trivial() -> FiniteHyperStructure:
    """单元素环，0 = 1。"""

    return FiniteHyperStructure(names=("0",), add=((1,),), mul=((0,),), one_index=0, kind="hyperring", name="trivial")


@lru_cache(maxsize=None)
def cyclic_group(n: int) -> FiniteHyperStructure:
    if n < 1:
        raise InvalidArgumentError("循环群阶数至少为 1")
    add = [[1 << ((a + b) % n) for b in range(n)] for a in range(n)]
    return FiniteHyperStructure(names=[str(i) for i in range(n)], add=add, kind="hypergroup", name=f"C({n})")


@lru_cache(maxsize=None)
def integers_mod(n: int) -> FiniteHyperStructure:
    if n < 1:
        raise InvalidArgumentError("模数至少为 1")
    add = [[1 << ((a + b) % n) for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteHyperStructure(
        names=[str(i) for i in range(n)],
        add=add,
        mul=mul,
        one_index=1 % n,
        kind="hyperring",
        name=f"Z/{n}",
    )


def finite_builtin(name: str) -> FiniteHyperStructure:
    structure = builtin(name)
    if not isinstance(structure, FiniteHyperStructure):
        raise InvalidArgumentError(f"{name} 不是有限结构")
    return structure


def _split_arguments(body: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    current = ""
    for char in body:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        if char == "," and depth == 0:
            parts.append(current.strip())
            current = ""
            continue
        current += char
    parts.append(current.strip())
    return parts


def _layered(base_name: str, group_text: str, *, twisted: bool = False, name: str = "") -> SymbolicHyperfield:
    base = finite_builtin(base_name)
    group = ordered_service.parse_index(group_text)
    action = frobenius(base) if twisted else None
    return construction_service.layering(base, group, action, name=name)


def builtin(name: str) -> FiniteHyperStructure | SymbolicHyperfield:
    """按名字取内置结构，未知名字为 not-found。"""

    key = str(name or "").strip()
    if key == "K":
        return krasner()
    if key == "S":
        return sign()
    if key == "trivial":
        return trivial()
    match = _GF.match(key)
    if match:
        return finite_field(int(match.group(1)))
    match = _CYCLIC.match(key)
    if match:
        return cyclic_group(int(match.group(1)))
    match = _RING.match(key)
    if match:
        return integers_mod(int(match.group(1)))
    if key in SYMBOLIC_ALIASES:
        base_name, group_text = SYMBOLIC_ALIASES[key]
        return _layered(base_name, group_text, name=key)
    match = _LAYER.match(key)
    if match:
        arguments = _split_arguments(match.group(1))
        if len(arguments) == 2:
            return _layered(arguments[0], arguments[1], name=key)
        if len(arguments) == 3 and arguments[2] == "frobenius":
            return _layered(arguments[0], arguments[1], twisted=True, name=key)
        raise InvalidArgumentError(f"layer 需要 (M,G) 或 (M,G,frobenius)：{key}")
    raise NotFoundError(f"未知的内置结构：{key!r}")

