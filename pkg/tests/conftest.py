import random
from fractions import Fraction

import numpy as np
import pytest

from acbmetric import ACBStructure, LieAlgebra, Manifold, example_sasaki5, ratlin

GRID = [(0, 0), (1, 0), (0, 1), (2, -3), (Fraction(1, 2), Fraction(5, 7))]


def sasaki5(p=0, q=0) -> Manifold:
    return Manifold(example_sasaki5(p, q).structure())


def abelian3() -> ACBStructure:
    """Flat abelian structure with parallel phi (e1 -> e2 -> -e1)."""
    phi = ratlin.zeros((3, 3))
    phi[2, 1], phi[1, 2] = Fraction(1), Fraction(-1)
    return ACBStructure(LieAlgebra.abelian(3), np.diag([1, 1, -1]), phi, [1, 0, 0], [1, 0, 0])


def random_invertible(d, rng: random.Random):
    while True:
        P = ratlin.frac_array([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(d)]
                               for _ in range(d)])
        if ratlin.rank(P) == d:
            return P


def random_rational(rng, size=5):
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


@pytest.fixture(scope="session")
def m5():
    return sasaki5(Fraction(1, 2), -3)


@pytest.fixture(scope="session")
def grid():
    return [sasaki5(p, q) for p, q in GRID]
