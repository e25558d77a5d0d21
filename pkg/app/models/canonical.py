"""规范形。"""

from __future__ import annotations

from dataclasses import dataclass, field

from .structure import FiniteHyperStructure


@dataclass(frozen=True)
class CanonicalForm:
    """同构的结构有相同的 ``key``；相等与哈希只看 ``key``。"""

    key: tuple
    structure: FiniteHyperStructure = field(compare=False)
    perm: tuple[int, ...] = field(compare=False)
