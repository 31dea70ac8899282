import numpy as np
import pytest
from hypothesis import settings

from pencilkit.field import GF, QQ

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIELDS = [GF(2), GF(7), QQ]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param
