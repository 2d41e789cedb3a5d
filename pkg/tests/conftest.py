"""Shared fixtures: a clean settings singleton and a few standard rings."""
import pytest

from sabsorb.config import reset_settings
from sabsorb.dsl import elaborate, parse
from sabsorb.rings.core import make_zmod


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch, tmp_path):
    """No SABSORB_* variables and no stray .env file leak into a test."""
    import os

    for key in list(os.environ):
        if key.startswith("SABSORB_"):
            monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def z12():
    return make_zmod(12)


@pytest.fixture
def z8():
    return make_zmod(8)


@pytest.fixture
def build():
    """Elaborate description-language text; ring first, then objects inside it."""
    def _build(ring_text, *rest):
        ring = elaborate(parse(ring_text, "ring"))
        if not rest:
            return ring
        out = [ring]
        for sort, text in rest:
            out.append(elaborate(parse(text, sort), ring))
        return tuple(out)

    return _build
