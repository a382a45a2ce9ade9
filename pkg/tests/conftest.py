import math
import random

import pytest

from su21.compact import EulerAngles


def random_angles(rng: random.Random) -> EulerAngles:
    return EulerAngles(
        rng.uniform(-2 * math.pi, 2 * math.pi),
        rng.uniform(-math.pi, 3 * math.pi),
        rng.uniform(0.01, math.pi - 0.01),
        rng.uniform(-math.pi, math.pi),
    )


@pytest.fixture
def rng():
    return random.Random(20240905)
