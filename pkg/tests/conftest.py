import pytest
from hypothesis import settings

from helpers import make_instance

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture
def inst_4211():
    return make_instance([4, 2, 1, 1], width=4.0, height=2.0, names=["m4", "m2", "u1", "u2"])


@pytest.fixture
def inst_8_ones():
    return make_instance([8] + [1] * 8, width=4.0, height=4.0, names=["big"] + [f"u{i}" for i in range(8)])
