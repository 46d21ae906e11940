"""
Shared test helpers: compact constructors and seeded random ideals.
"""

import itertools
import random
from typing import List, Tuple

from app.domain.ideals import MonomialIdeal, power
from app.domain.matroids import transversal_ideal, veronese_type
from app.domain.monomials import Monomial, PrimeSupport


def mono(*exps: int) -> Monomial:
    return Monomial(tuple(exps))


def ideal(n: int, *rows) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(rows, n)


def random_monomial(rng: random.Random, n: int, max_exp: int = 2) -> Monomial:
    return Monomial(tuple(rng.randint(0, max_exp) for _ in range(n)))


def random_ideal(
    rng: random.Random, n: int, max_gens: int = 6, max_exp: int = 2
) -> MonomialIdeal:
    """Proper nonzero ideal from 1..max_gens nonconstant rows."""
    rows: List[Tuple[int, ...]] = []
    count = rng.randint(1, max_gens)
    while len(rows) < count:
        row = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(row):
            rows.append(row)
    return MonomialIdeal.from_exponents(rows, n)


def oracle_ideal(seed: int) -> MonomialIdeal:
    """n <= 6 and at most 12 generators; every fourth seed is a square."""
    rng = random.Random(seed)
    if seed % 4 == 0:
        return power(random_ideal(rng, rng.randint(2, 4), max_gens=3, max_exp=1), 2)
    return random_ideal(rng, rng.randint(2, 6), max_gens=12)


def random_prime(rng: random.Random, n: int) -> PrimeSupport:
    size = rng.randint(1, n)
    return PrimeSupport(frozenset(rng.sample(range(n), size)))


def random_polymatroidal(rng: random.Random) -> MonomialIdeal:
    """A transversal or Veronese-type ideal on at most four variables."""
    n = rng.randint(2, 4)
    if rng.random() < 0.5:
        sets = [
            PrimeSupport(frozenset(rng.sample(range(n), rng.randint(1, n))))
            for _ in range(rng.randint(1, 2))
        ]
        return transversal_ideal(sets, n)
    d = rng.randint(1, 3)
    caps = [rng.randint(1, d) for _ in range(n)]
    if sum(caps) < d:
        caps[0] = d
    return veronese_type(n, d, caps)


def random_connected_edges(rng: random.Random, vertices: int) -> List[Tuple[int, int]]:
    """Spanning path in shuffled order plus a random subset of the other pairs."""
    order = list(range(1, vertices + 1))
    rng.shuffle(order)
    edges = {tuple(sorted(pair)) for pair in zip(order, order[1:])}
    for pair in itertools.combinations(range(1, vertices + 1), 2):
        if pair not in edges and rng.random() < 0.4:
            edges.add(pair)
    return sorted(edges)
