import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import F1, F3, G1, G2  # noqa: E402
from merojump import log_resolution, parse_polynomial  # noqa: E402


def resolve(f, g="1"):
    return log_resolution(parse_polynomial(f), parse_polynomial(g))


@pytest.fixture(scope="session")
def ex1():
    return resolve(F1, G1)


@pytest.fixture(scope="session")
def ex2():
    return resolve(F1, G2)


@pytest.fixture(scope="session")
def ex3():
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = resolve(F3, f"(y^2-x^3)^{k}")
        return cache[k]

    return get


@pytest.fixture(scope="session")
def cusp():
    return resolve("y^2-x^3")
