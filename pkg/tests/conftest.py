import math

import pytest

PI_E_LIMIT = math.pi * math.exp(-1.5)


@pytest.fixture(scope="session")
def mp():
    import mpmath

    mpmath.mp.dps = 40
    return mpmath
