"""全序集 / 全序群的比较、群运算、窗口与稠密性。"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from ..config import LEX_WINDOW_RADIUS, RATIONAL_BOUND, WINDOW_DENOMINATOR
from ..errors import (
    ArithmeticOverflowError,
    InvalidArgumentError,
    UnsupportedOperationError,
)
from ..models.ordered import Comparison, GroupElement, OrderedIndex

INDEX_PATTERN = re.compile(r"^\s*(?:chain\((\d+)\)|(Z)\^(\d+)|(Z)|(Q)|(1))\s*$")
WINDOW_PATTERN = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_index(text: str) -> OrderedIndex:
    """解析 ``chain(n)`` / ``Z`` / ``Z^k`` / ``Q``（``1`` 表示平凡群）。"""

    match = INDEX_PATTERN.match(str(text or ""))
    if not match:
        raise InvalidArgumentError(f"无法识别的有序下标集：{text!r}")
    chain_size, _, arity, integers, rationals, trivial = match.groups()
    if chain_size is not None:
        size = int(chain_size)
        if size < 1:
            raise InvalidArgumentError("chain 至少含一个元素")
        return OrderedIndex.chain(size)
    if arity is not None:
        return OrderedIndex.lex(int(arity))
    if integers:
        return OrderedIndex.integers()
    if rationals:
        return OrderedIndex.rationals()
    return OrderedIndex.trivial()


def validate(index: OrderedIndex, g: object) -> GroupElement:
    """确认 g 属于 index，不符即为 invalid-argument。"""

    variant = index.variant
    if variant == "chain":
        if type(g) is int and 0 <= g < index.param:
            return g
    elif variant == "Z":
        if type(g) is int:
            return g
    elif variant == "lex":
        if isinstance(g, tuple) and len(g) == index.param and all(type(c) is int for c in g):
            return g
    elif variant == "Q":
        if isinstance(g, Fraction):
            return _checked_fraction(g)
        if type(g) is int:
            return _checked_fraction(Fraction(g))
    raise InvalidArgumentError(f"{g!r} 不是 {index.label} 的元素")


def _checked_fraction(value: Fraction) -> Fraction:
    if abs(value.numerator) > RATIONAL_BOUND or value.denominator > RATIONAL_BOUND:
        raise ArithmeticOverflowError(f"有理数 {value} 超出 64 位范围")
    return value


def sort_key(index: OrderedIndex, g: GroupElement):
    """与全序一致的排序键。"""

    return validate(index, g)


def cmp(index: OrderedIndex, g: object, h: object) -> Comparison:
    a = validate(index, g)
    b = validate(index, h)
    # 元组按最左不同坐标比较，Python 原生语义即字典序
    if a < b:
        return Comparison.LESS
    if a > b:
        return Comparison.GREATER
    return Comparison.EQUAL


def less(index: OrderedIndex, g: object, h: object) -> bool:
    return cmp(index, g, h) is Comparison.LESS


def max_element(index: OrderedIndex, g: object, h: object) -> GroupElement:
    return validate(index, h) if less(index, g, h) else validate(index, g)


def _require_group(index: OrderedIndex) -> None:
    if not index.is_group:
        raise UnsupportedOperationError(f"{index.label} 只是有序集，没有群运算")


def identity(index: OrderedIndex) -> GroupElement:
    _require_group(index)
    return index.identity()


def group_op(index: OrderedIndex, g: object, h: object) -> GroupElement:
    _require_group(index)
    a = validate(index, g)
    b = validate(index, h)
    if index.variant == "lex":
        return tuple(x + y for x, y in zip(a, b))
    if index.variant == "Q":
        return _checked_fraction(a + b)
    return a + b


def group_inv(index: OrderedIndex, g: object) -> GroupElement:
    _require_group(index)
    a = validate(index, g)
    if index.variant == "lex":
        return tuple(-x for x in a)
    if index.variant == "Q":
        return _checked_fraction(-a)
    return -a


def group_sub(index: OrderedIndex, g: object, h: object) -> GroupElement:
    return group_op(index, g, group_inv(index, h))


def scale(index: OrderedIndex, g: object, times: int) -> GroupElement:
    """g 的 times 倍（加法记号下的幂）。"""

    _require_group(index)
    a = validate(index, g)
    if index.variant == "lex":
        return tuple(x * times for x in a)
    if index.variant == "Q":
        return _checked_fraction(a * times)
    return a * times


def least_positive(index: OrderedIndex) -> GroupElement | None:
    """离散群的最小正元 ε；稠密群（ℚ）与平凡群返回 None。"""

    _require_group(index)
    if index.variant == "Z":
        return 1
    if index.variant == "lex" and index.param > 0:
        return (0,) * (index.param - 1) + (1,)
    return None


def factor_below_identity(index: OrderedIndex, c: object) -> tuple[GroupElement, GroupElement] | None:
    """给出 a, b < 1_G 且 a·b = c 的一组分解；不存在时返回 None。"""

    _require_group(index)
    value = validate(index, c)
    zero = identity(index)
    if not less(index, value, zero):
        return None
    if index.variant == "Q":
        half = _checked_fraction(value / 2)
        return half, half
    epsilon = least_positive(index)
    if epsilon is None:
        return None
    a = group_inv(index, epsilon)
    b = group_op(index, value, epsilon)
    if less(index, b, zero):
        return a, b
    return None


def density_witness(index: OrderedIndex) -> GroupElement | None:
    """{ab | a, b < 1_G} ≠ {c | c < 1_G} 的见证元；稠密时为 None。

    离散群中最大的负元 -ε 不能写成两个负元之积。
    """

    epsilon = least_positive(index)
    if epsilon is None:
        return None
    return group_inv(index, epsilon)


def integer_part(index: OrderedIndex, g: object) -> int:
    """到 ℤ 的同态（取首坐标），用来把 ℤ 的作用推到 ℤ^k。"""

    a = validate(index, g)
    if index.variant == "Z":
        return a
    if index.variant == "lex" and index.param > 0:
        return a[0]
    raise UnsupportedOperationError(f"{index.label} 上没有非平凡的整数作用")


def parse_window(text: str) -> tuple[int, int]:
    match = WINDOW_PATTERN.match(str(text or ""))
    if not match:
        raise InvalidArgumentError(f"窗口格式应为 a..b，收到 {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise InvalidArgumentError(f"窗口下界 {lo} 大于上界 {hi}")
    return lo, hi


def window(index: OrderedIndex, lo: int, hi: int) -> list[GroupElement]:
    """窗口内的层，按全序升序。

    ℤ 取闭区间；ℚ 取 1/WINDOW_DENOMINATOR 网格；ℤ^k 首坐标取区间、其余坐标取
    [-LEX_WINDOW_RADIUS, LEX_WINDOW_RADIUS]；平凡群只有单位元；chain 取全部位置。
    """

    if index.variant == "chain":
        return list(range(index.param))
    if index.variant == "Z":
        return list(range(lo, hi + 1))
    if index.variant == "Q":
        d = WINDOW_DENOMINATOR
        return [Fraction(k, d) for k in range(lo * d, hi * d + 1)]
    if index.param == 0:
        return [()]
    radius = range(-LEX_WINDOW_RADIUS, LEX_WINDOW_RADIUS + 1)
    layers: list[tuple[int, ...]] = [(head,) for head in range(lo, hi + 1)]
    for _ in range(index.param - 1):
        layers = [prefix + (c,) for prefix in layers for c in radius]
    return sorted(layers)


def parse_element(index: OrderedIndex, text: str) -> GroupElement:
    raw = str(text).strip()
    try:
        if index.variant == "lex":
            body = raw.strip("()")
            parts = [part for part in body.split(",") if part.strip()]
            return validate(index, tuple(int(part) for part in parts))
        if index.variant == "Q":
            return validate(index, Fraction(raw))
        return validate(index, int(raw))
    except (ValueError, ZeroDivisionError):
        raise InvalidArgumentError(f"无法把 {raw!r} 解析为 {index.label} 的元素") from None


def format_element(index: OrderedIndex, g: GroupElement) -> str:
    if index.variant == "lex":
        return "(" + ",".join(str(c) for c in g) + ")"
    return str(g)


def sorted_elements(index: OrderedIndex, items: Iterable[GroupElement]) -> list[GroupElement]:
    return sorted(items, key=lambda g: sort_key(index, g))
