"""分类流水线的结果类型。"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .ordered import GroupElement, OrderedIndex
from .report import CheckReport
from .structure import FiniteHyperStructure
from .symbolic import SymElement

LayerKind = Literal["Krasner", "Sign", "Group"]
BaseKind = Literal["Krasner", "Sign", "Field"]
HyperringVerdict = Literal["Ring", "Hyperfield"]


@dataclass(frozen=True)
class LessRelation:
    """x <_F y：x ⊞ y = y ⊞ x = {y} 且 x ≠ y。"""

    n: int
    pairs: frozenset[tuple[int, int]]

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs

    def comparable(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs or (y, x) in self.pairs


@dataclass(frozen=True)
class OrderedPartition:
    """~_F 的等价类，按提升后的全序升序排列。"""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class LayerTag:
    kind: LayerKind
    order: int
    witness: tuple[int, ...] | None = None

    @property
    def label(self) -> str:
        if self.kind == "Group":
            return f"Group({self.order})"
        return self.kind


@dataclass(frozen=True)
class WedgeDecomposition:
    """源结构 ≅ 按类序重建的楔和，``iso`` 为源下标到重建下标的映射。"""

    source: str
    classes: tuple[tuple[int, ...], ...]
    layers: tuple[FiniteHyperStructure, ...]
    tags: tuple[LayerTag, ...]
    rebuilt: FiniteHyperStructure
    iso: tuple[int, ...]

    @property
    def labels(self) -> list[str]:
        return [tag.label for tag in self.tags]


@dataclass(frozen=True)
class LayeringExtraction:
    """class_table 是由乘法提升得到的类群表；窗口外的积记为 None。"""

    base: FiniteHyperStructure
    base_kind: BaseKind
    group: OrderedIndex
    projection: dict[str, GroupElement] = field(compare=False)
    window: tuple[int, int] | None = None
    truncated: bool = False
    class_table: tuple[tuple[int | None, ...], ...] = ()
    unit_class: int = 0


@dataclass(frozen=True)
class Valuation:
    """ν：非零元取所在层，0 取 −∞。"""

    values: dict[str, str] = field(compare=False)
    kernel: FiniteHyperStructure
    kernel_kind: BaseKind
    report: CheckReport
    pairs_checked: int
    window: tuple[int, int] | None = None


@dataclass(frozen=True)
class OrderingResult:
    ordering: tuple[int, ...] | None
    is_real: bool

    @property
    def found(self) -> bool:
        return self.ordering is not None


@dataclass(frozen=True)
class PositiveCones:
    """窗口上的正锥；每个锥在每层恰有一个元素，且对窗口内乘积封闭。"""

    cones: tuple[tuple[SymElement, ...], ...]
    window: tuple[int, int]
    split_verified: bool
