import random

import pytest

from ppart import Poset, enumerate_posets


def random_poset(rng, n, p=0.3):
    """Random labelled poset: forward edges along a shuffled order."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rels.append((perm[i], perm[j]))
    return Poset(n, rels)


def random_posets(seed, count, sizes, p=0.3):
    rng = random.Random(seed)
    return [random_poset(rng, rng.choice(sizes), p) for _ in range(count)]


@pytest.fixture(scope="session")
def posets3():
    return list(enumerate_posets(3))


@pytest.fixture(scope="session")
def posets4():
    return list(enumerate_posets(4))


@pytest.fixture(scope="session")
def posets5():
    return list(enumerate_posets(5))
