"""伴随半环。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .ordered import GroupElement
from .symbolic import SetDescription

SemiringFamily = Literal["supertropical", "symmetrised", "linearised"]


@dataclass(frozen=True)
class SemiringTable:
    """单点集在 ⊕、⊙ 下的闭包；元素是源结构载体的位集。

    下标 0 恒为 {0}，``generators`` 是各单点集的下标。
    """

    source: str
    elements: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]
    one_index: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, mask: int) -> int:
        return self.elements.index(mask)


@dataclass(frozen=True)
class LayeredSemiring:
    """分层超域伴随半环的闭式描述，限制在窗口上。"""

    source: str
    family: SemiringFamily
    window: tuple[int, int]
    elements: tuple[SetDescription, ...]
    layers: tuple[GroupElement, ...]
    closure_size: int
    truncated: bool
