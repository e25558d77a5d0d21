"""惰性形式幂级数 k((G)) 与扭曲的 M[[G]]。

支撑写成指数；支撑上有界、落在格 (1/d)ℤ 内，从最高指数往下枚举，
所以首项是最大指数（≤′ 下的最小元）。
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Literal, Union

from ..errors import DivisionByZeroError
from .elemset import only_element
from .ordered import OrderedIndex
from .structure import FiniteHyperStructure

Coefficient = Union[int, Fraction]
Position = Union[int, Fraction]
RingKind = Literal["field", "rational"]


@dataclass(frozen=True)
class SupportFrontier:
    """{top - k/denominator | k ≥ 0}，top 本身在格上。"""

    top: Position
    denominator: int = 1

    def position(self, k: int) -> Position:
        if self.denominator == 1:
            return self.top - k
        return self.top - Fraction(k, self.denominator)

    def positions(self) -> Iterator[Position]:
        k = 0
        while True:
            yield self.position(k)
            k += 1

    def offset(self, g: Position) -> int | None:
        """g 在枚举中的序号；不在格上或高于 top 时为 None。"""

        steps = (self.top - g) * self.denominator
        if steps < 0 or Fraction(steps).denominator != 1:
            return None
        return int(steps)

    def contains(self, g: Position) -> bool:
        return self.offset(g) is not None


@dataclass(frozen=True)
class SeriesRing:
    """系数环：有限域表（可带 Frobenius 扭曲 σ）或有理数。"""

    kind: RingKind
    field: FiniteHyperStructure | None = None
    action: tuple[int, ...] | None = None
    inverses: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        if self.kind == "rational":
            return "Q"
        twist = "σ" if self.is_twisted else ""
        return f"{self.field.label}{twist}"

    @property
    def is_twisted(self) -> bool:
        return self.action is not None and self.action != tuple(range(self.field.n))

    @property
    def zero(self) -> Coefficient:
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self) -> Coefficient:
        return Fraction(1) if self.kind == "rational" else self.field.one_index

    def is_zero(self, a: Coefficient) -> bool:
        return a == 0

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.kind == "rational":
            return a + b
        return only_element(self.field.add[a][b])

    def neg(self, a: Coefficient) -> Coefficient:
        if self.kind == "rational":
            return -a
        return self.field.neg[a]

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        if self.kind == "rational":
            return a * b
        return self.field.mul[a][b]

    def inv(self, a: Coefficient) -> Coefficient:
        if self.is_zero(a):
            raise DivisionByZeroError("系数 0 没有逆元")
        if self.kind == "rational":
            return 1 / a
        return self.inverses[a]

    def twist(self, a: Coefficient, times: int) -> Coefficient:
        """σ^times(a)。"""

        if not self.is_twisted or times == 0:
            return a
        action = self.action
        if times < 0:
            inverse = [0] * len(action)
            for x, image in enumerate(action):
                inverse[image] = x
            action = tuple(inverse)
            times = -times
        for _ in range(times % self._order):
            a = action[a]
        return a

    @property
    def _order(self) -> int:
        perm = self.action
        current = perm
        order = 1
        identity = tuple(range(len(perm)))
        while current != identity:
            current = tuple(perm[x] for x in current)
            order += 1
        return order

    def format(self, a: Coefficient) -> str:
        if self.kind == "rational":
            return str(a)
        name = self.field.names[a]
        if any(ch in name for ch in "+- "):
            return f"[{name}]"
        return name


class LazySeries:
    """按需求值的系数，带备忘录。

    ``coeff`` 自上而下逐个位置填写备忘录，规则只会读取更高位置或其他级数，
    因此不会深递归。备忘录由可重入锁保护，可在线程间共享。
    ``bottom`` 是已知有限支撑的最低位置，无限支撑时为 None。
    """

    def __init__(
        self,
        ring: SeriesRing,
        group: OrderedIndex,
        frontier: SupportFrontier | None,
        rule: Callable[[Position], Coefficient],
        *,
        label: str = "",
        bottom: Position | None = None,
    ) -> None:
        self.ring = ring
        self.group = group
        self.frontier = frontier
        self.label = label
        self.bottom = bottom
        self._rule = rule
        self._memo: dict[Position, Coefficient] = {}
        self._filled = 0
        self._lock = threading.RLock()

    @property
    def is_zero_series(self) -> bool:
        return self.frontier is None

    def support_within(self, limit: int) -> bool:
        """支撑有下界（bottom）且落在边界的前 limit 个位置内。"""

        if self.frontier is None:
            return True
        if self.bottom is None:
            return False
        offset = self.frontier.offset(self.bottom)
        return offset is not None and offset < limit

    def coeff(self, g: Position) -> Coefficient:
        frontier = self.frontier
        if frontier is None:
            return self.ring.zero
        offset = frontier.offset(g)
        if offset is None:
            return self.ring.zero
        with self._lock:
            while self._filled <= offset:
                position = frontier.position(self._filled)
                self._memo[position] = self._rule(position)
                self._filled += 1
            return self._memo[frontier.position(offset)]

    def force(self, depth: int) -> None:
        """预先算出前 depth 个位置；之后只读共享总是安全的。"""

        if self.frontier is not None and depth > 0:
            self.coeff(self.frontier.position(depth - 1))

    def terms(self, depth: int) -> list[tuple[Position, Coefficient]]:
        if self.frontier is None:
            return []
        out = []
        for k in range(depth):
            g = self.frontier.position(k)
            value = self.coeff(g)
            if not self.ring.is_zero(value):
                out.append((g, value))
        return out

    def __repr__(self) -> str:
        return f"LazySeries({self.label or '…'}, ring={self.ring.label}, group={self.group.label})"


@dataclass(frozen=True)
class LeadingTerm:
    """首项 a·x^g（g = m_p）。"""

    position: Position
    coefficient: Coefficient
    offset: int = field(default=0, compare=False)
