import functools

import pytest

from sgpoly.catalog import load


@functools.lru_cache(maxsize=None)
def entry(name):
    return load(name)


def diagram(name):
    return entry(name).diagram


OMEGAS = [f"omega{i}" for i in range(1, 11)]
THETAS = ["theta-planar", "theta-tilde"]
KNOTS = ["unknot", "unknot-kink", "trefoil", "figure-eight"]


@pytest.fixture
def omega7():
    return diagram("omega7")
