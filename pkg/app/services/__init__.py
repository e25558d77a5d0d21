"""计算服务层。"""

from app.services import (
    catalog_service,
    classify_service,
    construction_service,
    enumeration_service,
    isomorphism_service,
    kernel_service,
    ordered_service,
    report_service,
    semiring_service,
    series_service,
    structure_file_service,
    symbolic_service,
)

__all__ = [
    "catalog_service",
    "classify_service",
    "construction_service",
    "enumeration_service",
    "isomorphism_service",
    "kernel_service",
    "ordered_service",
    "report_service",
    "semiring_service",
    "series_service",
    "structure_file_service",
    "symbolic_service",
]
