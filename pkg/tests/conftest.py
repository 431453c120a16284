# -*- coding: utf-8 -*-
import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.processing.group_harmonics.provider import clear_memo  # noqa: E402
from src.processing.monoid_core.group_table import cyclic_group  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def fresh_memo():
    clear_memo()
    yield
    clear_memo()


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    monkeypatch.delenv("SPECTRA_CACHE_DIR", raising=False)
