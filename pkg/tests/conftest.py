"""测试公共 fixture。"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from app.models.structure import FiniteHyperStructure  # noqa: E402
from app.services import catalog_service  # noqa: E402

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def krasner() -> FiniteHyperStructure:
    return catalog_service.krasner()


@pytest.fixture(scope="session")
def sign() -> FiniteHyperStructure:
    return catalog_service.sign()


@pytest.fixture(scope="session")
def gf4() -> FiniteHyperStructure:
    return catalog_service.finite_field(4)


@pytest.fixture(scope="session")
def gf5() -> FiniteHyperStructure:
    return catalog_service.finite_field(5)


@pytest.fixture(scope="session")
def zminusinf():
    return catalog_service.builtin("Zminusinf")


@pytest.fixture(scope="session")
def tropical():
    return catalog_service.builtin("trop(Z)")


@pytest.fixture(scope="session")
def signed_tropical():
    return catalog_service.builtin("sign(Z)")
