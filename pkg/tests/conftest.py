"""Shared fixtures and hypothesis profile."""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from graverkit.families.matrices import ab_matrix
from graverkit.linalg.matrix import IntMatrix
from graverkit.state.cache import Cache

# completions take longer than hypothesis' default deadline
settings.register_profile("graverkit", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("graverkit")


@pytest.fixture
def twisted_cubic() -> IntMatrix:
    """A_(1,2) = (1 1 1 1; 0 1 2 3)."""
    return ab_matrix(1, 2)


@pytest.fixture
def cache(tmp_path: Path) -> Iterator[Cache]:
    db = Cache(tmp_path / "cache.db")
    yield db
    db.close()
