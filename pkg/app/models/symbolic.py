"""G-分层超域 M ⋊ G 的符号表示。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .ordered import GroupElement, OrderedIndex
from .structure import FiniteHyperStructure

ZERO_NAME = "-inf"


@dataclass(frozen=True)
class ZeroElement:
    """加法单位元（层之外）。"""

    def __repr__(self) -> str:
        return "ZERO"


ZERO = ZeroElement()


@dataclass(frozen=True)
class Layered:
    """非零元 (u, g)：u 是 M 的非零下标，g 是所在层。"""

    unit: int
    layer: GroupElement


SymElement = Union[ZeroElement, Layered]


@dataclass(frozen=True)
class SymbolicHyperfield:
    """分裂扩张 H = M^× ⋊ G 上的分层超域。

    ``action`` 是 M 的一个自同构（下标置换）σ，层 g 以 σ^{n(g)} 作用，
    n 为 G 到 ℤ 的首坐标同态；恒等置换即平凡作用。乘法
    (u, g)·(v, h) = (u·σ_g(v), g + h)。
    """

    base: FiniteHyperStructure
    group: OrderedIndex
    action: tuple[int, ...]
    name: str = ""

    @property
    def is_trivial_action(self) -> bool:
        return self.action == tuple(range(self.base.n))

    @property
    def units(self) -> tuple[int, ...]:
        return tuple(range(1, self.base.n))

    @property
    def one(self) -> Layered:
        return Layered(self.base.one_index, self.group.identity())

    @property
    def label(self) -> str:
        return self.name or f"{self.base.label}⋊{self.group.label}"


@dataclass(frozen=True)
class SetDescription:
    """符号超加法的结果：有限部分 ∪（可选）g 以下全部层 ∪ {0}。

    ``downset_below`` 为 g 时表示所有层严格小于 g 的元素，外加 ZERO。
    """

    finite_part: tuple[SymElement, ...] = ()
    downset_below: GroupElement | None = None

    @property
    def has_downset(self) -> bool:
        return self.downset_below is not None


@dataclass(frozen=True)
class WindowTable:
    """窗口内各层加上 ZERO 构成的有限加法表（即窗口层的楔和）。"""

    structure: FiniteHyperStructure
    elements: tuple[SymElement, ...]
    layers: tuple[GroupElement, ...]
    window: tuple[int, int]
    truncated: bool

    def index_of(self, element: SymElement) -> int:
        return self.elements.index(element)
