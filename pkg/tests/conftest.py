from __future__ import annotations

import itertools

import pytest

from pocgraph import WeightedGraph, is_valid_poc
from pocgraph.fixtures import load_fixture


@pytest.fixture(scope="session")
def c4w() -> WeightedGraph:
    return load_fixture("C4W")


@pytest.fixture(scope="session")
def chem() -> WeightedGraph:
    return load_fixture("CHEM")


@pytest.fixture(scope="session")
def k135() -> WeightedGraph:
    return load_fixture("K135")


@pytest.fixture(scope="session")
def p3w() -> WeightedGraph:
    return load_fixture("P3W")


def naive_chi_poc(g: WeightedGraph) -> int:
    """Independent reference: try every coloring function at growing palette."""
    from pocgraph import Coloring

    for theta in range(1, g.n + 1):
        for colors in itertools.product(range(1, theta + 1), repeat=g.n):
            if is_valid_poc(g, Coloring(colors, theta)):
                return theta
    raise AssertionError("every weighted graph admits a POC with n colors")
