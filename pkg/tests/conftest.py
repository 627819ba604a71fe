import random

import pytest

from boxverify import roundoff


@pytest.fixture(autouse=True)
def _fresh_fp_environment():
    # The underflow flag is process-global and sticky; isolate tests.
    roundoff._reset_for_tests()
    yield


@pytest.fixture
def rng():
    return random.Random(0xB0C5)
