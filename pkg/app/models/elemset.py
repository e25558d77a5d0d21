"""元素集合（单字位集）。"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from ..config import CARRIER_CAPACITY
from ..errors import CapacityError, InvalidArgumentError


@lru_cache(maxsize=1 << 16)
def bits_of(mask: int) -> tuple[int, ...]:
    """位集展开为升序下标元组。"""

    out = []
    index = 0
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def map_mask(mask: int, mapping: tuple[int, ...] | list[int]) -> int:
    """按下标映射搬运位集。"""

    out = 0
    for index in bits_of(mask):
        out |= 1 << mapping[index]
    return out


def only_element(mask: int) -> int:
    """单元素位集中的那个下标。"""

    return mask.bit_length() - 1


@dataclass(frozen=True)
class ElemSet:
    """载体子集，容量 64。"""

    bits: int
    carrier_size: int

    def __post_init__(self) -> None:
        if not 0 < self.carrier_size <= CARRIER_CAPACITY:
            raise CapacityError(f"载体规模 {self.carrier_size} 超出容量 {CARRIER_CAPACITY}")
        if self.bits < 0 or self.bits >> self.carrier_size:
            raise InvalidArgumentError("元素集合含有越界下标")

    @classmethod
    def of(cls, indices: Iterable[int], carrier_size: int) -> ElemSet:
        indices = list(indices)
        if any(index < 0 or index >= carrier_size for index in indices):
            raise InvalidArgumentError(f"下标越界：{indices}")
        return cls(mask_of(indices), carrier_size)

    @classmethod
    def singleton(cls, index: int, carrier_size: int) -> ElemSet:
        return cls.of([index], carrier_size)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(bits_of(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def is_empty(self) -> bool:
        return self.bits == 0

    def union(self, other: ElemSet) -> ElemSet:
        return ElemSet(self.bits | other.bits, self.carrier_size)

    def issubset(self, other: ElemSet) -> bool:
        return self.bits & ~other.bits == 0

    def indices(self) -> tuple[int, ...]:
        return bits_of(self.bits)
