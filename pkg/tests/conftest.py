from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

# make the sibling oracles module importable from every test file
sys.path.insert(0, str(Path(__file__).resolve().parent))


@pytest.fixture
def rng() -> np.random.RandomState:
    return np.random.RandomState(20240817)
