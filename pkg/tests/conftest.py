"""Shared test helpers: deterministic random generators for domain values."""

import math
import random

import pytest

from t2orbits import FixedCycle, IsotropyPair, WeightSystem


def random_coprime_pair(rng: random.Random, bound: int = 20) -> IsotropyPair:
    while True:
        m = rng.randint(-bound, bound)
        n = rng.randint(-bound, bound)
        if math.gcd(m, n) == 1:
            return IsotropyPair(m, n)


def random_legal_cycle(rng: random.Random, length: int = None,
                       bound: int = 9) -> FixedCycle:
    r = length or rng.randint(2, 5)
    while True:
        pairs = [random_coprime_pair(rng, bound) for _ in range(r)]
        if all(pairs[w].det(pairs[(w + 1) % r]) != 0 for w in range(r)):
            return FixedCycle.from_pairs(pairs)


def random_legal_system(rng: random.Random, bound: int = 9) -> WeightSystem:
    cycles = tuple(random_legal_cycle(rng, bound=bound)
                   for _ in range(rng.randint(0, 2)))
    circles = tuple(random_coprime_pair(rng, bound)
                    for _ in range(rng.randint(0, 2)))
    closed = not cycles and not circles
    obstruction = (rng.randint(-3, 3), rng.randint(-3, 3)) if closed else (0, 0)
    return WeightSystem(
        obstruction=obstruction,
        orientation=rng.choice((1, -1)),
        genus=rng.randint(0, 2),
        circle_boundaries=circles,
        fixed_cycles=cycles,
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
