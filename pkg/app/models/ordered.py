"""全序集与全序群（层的下标集 G）。"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Literal, Union

OrderedVariant = Literal["chain", "Z", "lex", "Q"]

# chain 位置 / 整数 / 整数元组 / 既约分数
GroupElement = Union[int, tuple[int, ...], Fraction]


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderedIndex:
    """层下标集。

    - ``chain``：有限链 0 < 1 < ... < size-1，没有群运算；
    - ``Z``：整数加法群；
    - ``lex``：ℤ^k 字典序，k = 0 时是平凡群；
    - ``Q``：有理数加法群。

    群一律写成加法，1_G 对应 0。
    """

    variant: OrderedVariant
    param: int = 0

    @classmethod
    def chain(cls, size: int) -> OrderedIndex:
        return cls("chain", size)

    @classmethod
    def integers(cls) -> OrderedIndex:
        return cls("Z")

    @classmethod
    def lex(cls, arity: int) -> OrderedIndex:
        return cls("lex", arity)

    @classmethod
    def rationals(cls) -> OrderedIndex:
        return cls("Q")

    @classmethod
    def trivial(cls) -> OrderedIndex:
        return cls("lex", 0)

    def identity(self) -> GroupElement:
        if self.variant == "lex":
            return (0,) * self.param
        if self.variant == "Q":
            return Fraction(0)
        return 0

    @property
    def is_group(self) -> bool:
        return self.variant != "chain"

    @property
    def is_trivial(self) -> bool:
        return self.variant == "lex" and self.param == 0

    @property
    def is_dense(self) -> bool:
        return self.variant == "Q"

    @property
    def label(self) -> str:
        if self.variant == "chain":
            return f"chain({self.param})"
        if self.variant == "lex":
            return "1" if self.param == 0 else f"Z^{self.param}"
        return self.variant
