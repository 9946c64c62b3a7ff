from __future__ import annotations

import numpy as np
import pytest
from hypothesis import settings

from quditpair import SingleSpinState, SpinMagnitude

settings.register_profile("deterministic", derandomize=True, max_examples=120, deadline=None)
settings.load_profile("deterministic")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(411402)


@pytest.fixture
def random_state(rng):
    """Factory for unit-norm states with complex Gaussian amplitudes."""

    def make(s: SpinMagnitude) -> SingleSpinState:
        z = rng.standard_normal(s.d) + 1j * rng.standard_normal(s.d)
        return SingleSpinState(s, z / np.linalg.norm(z))

    return make
