"""Shared fixtures: reproducible random presentation pools.

The pools are session scoped because several suites (engine vs oracle
agreement, order independence, bound checks) must talk about the same
instances.
"""

import random
from math import gcd

import pytest

from monofact.errors import InvalidInput, NotReduced
from monofact.monoid import numerical, presentation, validate_reduced


def random_reduced(rng, max_rank=2, max_n=5, max_entry=10):
    """A random reduced presentation, torsion allowed, retried until the
    pointedness check accepts it."""
    while True:
        m = rng.randint(1, max_rank)
        moduli = [rng.randint(2, 6)] if rng.random() < 0.4 else []
        n = rng.randint(1, max_n)
        gens = []
        for _ in range(n):
            free = tuple(rng.randint(-max_entry, max_entry) for _ in range(m))
            tors = tuple(rng.randrange(t) for t in moduli)
            gens.append(free + tors)
        try:
            return validate_reduced(presentation(m, moduli, sorted(set(gens))))
        except (NotReduced, InvalidInput):
            continue


def random_numerical(rng, max_n=5, max_gen=60):
    while True:
        n = rng.randint(2, max_n)
        vals = sorted(rng.sample(range(2, max_gen + 1), n))
        g = 0
        for v in vals:
            g = gcd(g, v)
        if g == 1:
            return validate_reduced(numerical(vals))


@pytest.fixture(scope="session")
def reduced_instances():
    rng = random.Random(91)
    return [random_reduced(rng) for _ in range(50)]


@pytest.fixture(scope="session")
def numerical_instances():
    rng = random.Random(92)
    return [random_numerical(rng) for _ in range(50)]
