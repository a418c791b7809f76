"""Shared fixtures: small rings, isolated settings and a clean structure memo."""

from __future__ import annotations

import pytest

from catalog import Subject, build_subject
from config import configure, reset_settings
from constructions import matrix_ring, ring_Zn
from finite_ring import FiniteRing
from structure_sets import clear_memo

collect_ignore = ["examples"]


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--runslow", action="store_true", default=False, help="also run tests marked slow")


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: runs over the whole default catalog")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path):
    """Every test gets its own cache directory and an empty memo."""
    configure(cache_dir=tmp_path / "cache")
    clear_memo()
    yield
    reset_settings()
    clear_memo()


@pytest.fixture
def z2() -> FiniteRing:
    return ring_Zn(2)


@pytest.fixture
def z3() -> FiniteRing:
    return ring_Zn(3)


@pytest.fixture
def z4() -> FiniteRing:
    return ring_Zn(4)


@pytest.fixture
def m2z2() -> FiniteRing:
    return matrix_ring(ring_Zn(2), 2)


@pytest.fixture
def subject():
    """Factory: ``subject("K(Z2,1)")`` builds a verification subject."""
    def build(expr: str) -> Subject:
        return build_subject(expr)
    return build
