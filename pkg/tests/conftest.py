import numpy as np
import pytest

from app.models.generator import GeneratorConvention


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def adopted():
    return GeneratorConvention(delta_sign=False, mixed_sign=-1)
