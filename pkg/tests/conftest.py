import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as hs

from eulerhom import permgroups as pg
from eulerhom.z2linalg import BitMatrix

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@hs.composite
def bit_matrices(draw, max_rows=6, max_cols=6):
    rows = draw(hs.integers(0, max_rows))
    cols = draw(hs.integers(1, max_cols))
    data = draw(hs.lists(hs.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows))
    return BitMatrix(rows, cols, tuple(data))


seeds = hs.integers(0, 2**32 - 1)

SMALL_GROUPS = ["trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"]
ALL_GROUPS = list(pg.FIXTURE_GROUPS)


@pytest.fixture(scope="session")
def groups():
    return {name: make() for name, make in pg.FIXTURE_GROUPS.items()}


@pytest.fixture
def rng():
    return random.Random(20261015)
