"""有限超结构（超群 / 超环 / 超域）的表格表示。"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

from ..config import CARRIER_CAPACITY
from ..errors import CapacityError, InvalidArgumentError
from .elemset import ElemSet, bits_of, full_mask, map_mask

StructureKind = Literal["hypergroup", "hyperring", "hyperfield"]
STRUCTURE_KINDS: tuple[str, ...] = ("hypergroup", "hyperring", "hyperfield")

AddTable = tuple[tuple[int, ...], ...]
MulTable = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(cell) for cell in row) for row in rows)


@dataclass(frozen=True)
class FiniteHyperStructure:
    """下标 0 恒为加法单位元；加法表每格是位集。

    乘法表只做形状与下标范围校验，结合律、单位元与吸收律交给
    ``kernel_service.check_skew_hyperring`` 报告，便于加载被篡改的表。
    ``capacity`` 默认是 64；只有符号结构的窗口表会放宽它。
    """

    names: tuple[str, ...]
    add: AddTable
    mul: MulTable | None = None
    one_index: int | None = None
    kind: StructureKind = "hypergroup"
    name: str = ""
    capacity: int = field(default=CARRIER_CAPACITY, compare=False, repr=False)
    neg: tuple[int | None, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(str(item) for item in self.names))
        object.__setattr__(self, "add", _freeze(self.add))
        if self.mul is not None:
            object.__setattr__(self, "mul", _freeze(self.mul))

        n = len(self.names)
        if n == 0:
            raise InvalidArgumentError("载体不能为空")
        if n > self.capacity:
            raise CapacityError(f"载体规模 {n} 超出容量 {self.capacity}")
        if len(set(self.names)) != n:
            raise InvalidArgumentError("元素名称重复")
        if self.kind not in STRUCTURE_KINDS:
            raise InvalidArgumentError(f"未知结构类型：{self.kind}")

        limit = full_mask(n)
        if len(self.add) != n or any(len(row) != n for row in self.add):
            raise InvalidArgumentError("加法表必须是 n×n")
        for x, row in enumerate(self.add):
            for y, cell in enumerate(row):
                if cell == 0:
                    raise InvalidArgumentError(f"{self.names[x]} ⊞ {self.names[y]} 为空集")
                if cell & ~limit:
                    raise InvalidArgumentError("加法表含越界元素")

        if (self.mul is None) != (self.one_index is None):
            raise InvalidArgumentError("乘法表与乘法单位元必须同时给出")
        if self.mul is not None:
            if len(self.mul) != n or any(len(row) != n for row in self.mul):
                raise InvalidArgumentError("乘法表必须是 n×n")
            if any(not 0 <= cell < n for row in self.mul for cell in row):
                raise InvalidArgumentError("乘法表含越界元素")
            if not 0 <= self.one_index < n:
                raise InvalidArgumentError("乘法单位元下标越界")
        elif self.kind != "hypergroup":
            raise InvalidArgumentError(f"{self.kind} 需要乘法表")

        object.__setattr__(self, "neg", self._derive_negation())

    def _derive_negation(self) -> tuple[int | None, ...]:
        # 推导失败记为 None，由 check_hypergroup 报告
        out: list[int | None] = []
        for x in range(self.n):
            right = [y for y in range(self.n) if self.add[x][y] & 1]
            left = [y for y in range(self.n) if self.add[y][x] & 1]
            if len(right) == 1 and right == left:
                out.append(right[0])
            else:
                out.append(None)
        return tuple(out)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def zero_index(self) -> int:
        return 0

    @property
    def is_multiplicative(self) -> bool:
        return self.mul is not None

    @property
    def label(self) -> str:
        return self.name or f"<{self.kind} n={self.n}>"

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(str(name))
        except ValueError:
            raise InvalidArgumentError(f"{self.label} 中没有元素 {name!r}") from None

    def add_set(self, x: int, y: int) -> ElemSet:
        return ElemSet(self.add[x][y], self.n)

    def set_sum(self, left: int, right: int) -> int:
        """位集层面的 A ⊞ B。"""

        out = 0
        add = self.add
        for a in bits_of(left):
            row = add[a]
            for b in bits_of(right):
                out |= row[b]
        return out

    def set_product(self, left: int, right: int) -> int:
        """位集层面的 A ⊙ B = {ab}。"""

        out = 0
        mul = self.mul
        for a in bits_of(left):
            row = mul[a]
            for b in bits_of(right):
                out |= 1 << row[b]
        return out

    def neg_mask(self, mask: int) -> int:
        out = 0
        for x in bits_of(mask):
            image = self.neg[x]
            if image is None:
                raise InvalidArgumentError(f"{self.names[x]} 没有唯一的超逆元")
            out |= 1 << image
        return out

    def format_mask(self, mask: int) -> str:
        return "{" + ", ".join(self.names[i] for i in bits_of(mask)) + "}"

    def additive(self) -> FiniteHyperStructure:
        """只保留加法部分。"""

        return FiniteHyperStructure(
            names=self.names, add=self.add, kind="hypergroup", name=self.name, capacity=self.capacity
        )

    def relabel(self, perm: Sequence[int], *, name: str | None = None) -> FiniteHyperStructure:
        """按 perm（旧下标 -> 新下标）重新编号，要求 perm[0] == 0。"""

        n = self.n
        if sorted(perm) != list(range(n)) or perm[0] != 0:
            raise InvalidArgumentError("重编号必须是固定 0 的置换")
        perm = tuple(perm)
        names = [""] * n
        add = [[0] * n for _ in range(n)]
        for x in range(n):
            names[perm[x]] = self.names[x]
            for y in range(n):
                add[perm[x]][perm[y]] = map_mask(self.add[x][y], perm)
        mul = None
        one = None
        if self.mul is not None:
            mul = [[0] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    mul[perm[x]][perm[y]] = perm[self.mul[x][y]]
            one = perm[self.one_index]
        return FiniteHyperStructure(
            names=tuple(names),
            add=add,
            mul=mul,
            one_index=one,
            kind=self.kind,
            name=self.name if name is None else name,
            capacity=self.capacity,
        )

    def renamed(self, names: Sequence[str], *, name: str | None = None) -> FiniteHyperStructure:
        return FiniteHyperStructure(
            names=tuple(names),
            add=self.add,
            mul=self.mul,
            one_index=self.one_index,
            kind=self.kind,
            name=self.name if name is None else name,
            capacity=self.capacity,
        )

    def same_tables(self, other: FiniteHyperStructure) -> bool:
        return (
            self.add == other.add
            and self.mul == other.mul
            and self.one_index == other.one_index
        )
