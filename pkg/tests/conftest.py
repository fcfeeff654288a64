import numpy as np
import pytest

from config import DEFAULT_SEED
from catalog import build_group
from galgebra import AlgebraContext


@pytest.fixture
def rng():
    print(f"sampling seed: {DEFAULT_SEED}")
    return np.random.default_rng(DEFAULT_SEED)


@pytest.fixture(scope="session")
def kq8():
    return AlgebraContext(build_group("q8"), 2)


@pytest.fixture(scope="session")
def kd8():
    return AlgebraContext(build_group("d8"), 2)


@pytest.fixture(scope="session")
def kc4c2():
    return AlgebraContext(build_group("c4xc2"), 2)
