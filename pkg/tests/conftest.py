from __future__ import annotations

import random

import pytest

from tamequiver.io import FIXTURES, fixture
from tamequiver.quiver import Quiver

# regular simples of the E6-tilde example, in the labelling used there
E6_SIMPLES = {
    1: (1, 1, 0, 1, 0, 0, 1),
    2: (0, 0, 1, 1, 0, 1, 1),
    3: (0, 1, 0, 0, 1, 1, 1),
    4: (1, 1, 0, 0, 0, 1, 1),
    5: (0, 0, 0, 1, 1, 1, 1),
    6: (0, 1, 1, 1, 0, 0, 1),
    7: (0, 1, 0, 1, 0, 1, 1),
    8: (1, 1, 1, 1, 1, 1, 2),
}
E6_ALPHA = (6, 10, 7, 14, 5, 9, 17)
E6_DELTA = (1, 2, 1, 2, 1, 2, 3)


def lin(*pairs):
    """Integer combination ``sum(c * v)`` of (coefficient, vector) pairs."""
    n = len(pairs[0][1])
    return tuple(sum(c * v[a] for c, v in pairs) for a in range(n))


def reorient(q: Quiver, rng: random.Random) -> Quiver:
    """Random acyclic orientation of the same underlying graph."""
    rank = list(range(q.n_vertices))
    rng.shuffle(rank)
    arrows = tuple((t, h) if rank[t] < rank[h] else (h, t) for t, h in q.arrows)
    return Quiver(q.n_vertices, arrows, q.labels)


@pytest.fixture(scope="session")
def e6t() -> Quiver:
    return fixture("e6t")


@pytest.fixture(scope="session")
def fixtures() -> dict[str, Quiver]:
    return {name: fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def a2() -> Quiver:
    return Quiver(2, ((0, 1),))
