import pytest

from app.core.config import settings


@pytest.fixture
def sparse_only(monkeypatch):
    """Force every block through the sparse elimination path."""
    monkeypatch.setattr(settings, "DENSE_BUDGET", 0)
