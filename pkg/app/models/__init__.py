"""模型集合。"""

from .canonical import CanonicalForm
from .classification import (
    LayerTag,
    LayeringExtraction,
    LessRelation,
    OrderedPartition,
    OrderingResult,
    PositiveCones,
    Valuation,
    WedgeDecomposition,
)
from .elemset import ElemSet
from .ordered import OrderedIndex
from .report import CheckReport, CommandReport, SampleCheckReport, Violation
from .semiring import LayeredSemiring, SemiringTable
from .series import LazySeries, LeadingTerm, SeriesRing, SupportFrontier
from .structure import FiniteHyperStructure
from .symbolic import ZERO, Layered, SetDescription, SymbolicHyperfield, WindowTable

__all__ = [
    "CanonicalForm",
    "CheckReport",
    "CommandReport",
    "ElemSet",
    "FiniteHyperStructure",
    "LayerTag",
    "Layered",
    "LayeredSemiring",
    "LayeringExtraction",
    "LazySeries",
    "LeadingTerm",
    "LessRelation",
    "OrderedIndex",
    "OrderedPartition",
    "OrderingResult",
    "PositiveCones",
    "SampleCheckReport",
    "SemiringTable",
    "SeriesRing",
    "SetDescription",
    "SupportFrontier",
    "SymbolicHyperfield",
    "Valuation",
    "Violation",
    "WedgeDecomposition",
    "WindowTable",
    "ZERO",
]
