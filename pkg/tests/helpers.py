"""Shared test helpers: hand-entered reference polynomials and random generators.

The F1/F2/F3 dicts are typed in term by term from the known closed forms,
independently of both the builder and the bundled text corpus, so they can
arbitrate between the two.
"""

from __future__ import annotations

import random

from oddpower.bipoly import BiPoly
from oddpower.rationals import Rational

F1 = BiPoly({(1, 1): 3, (0, 2): -3, (1, 2): 3, (0, 3): -2})

F2 = BiPoly(
    {
        (2, 1): 5,
        (1, 2): -15,
        (2, 2): 15,
        (0, 3): 10,
        (1, 3): -30,
        (2, 3): 10,
        (0, 4): 15,
        (1, 4): -15,
        (0, 5): 6,
    }
)

F3 = BiPoly(
    {
        (1, 1): -7,
        (2, 1): 14,
        (0, 2): 7,
        (1, 2): -42,
        (3, 2): 35,
        (0, 3): 28,
        (2, 3): -140,
        (3, 3): 70,
        (1, 4): 175,
        (2, 4): -210,
        (3, 4): 35,
        (0, 5): -70,
        (1, 5): 210,
        (2, 5): -84,
        (0, 6): -70,
        (1, 6): 70,
        (0, 7): -20,
    }
)

SUM1 = BiPoly({(1, 0): 3, (0, 1): -3, (1, 1): 6, (0, 2): -3})


def random_rational(rng: random.Random, num_bound: int = 100, den_bound: int = 20) -> Rational:
    return Rational(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def random_bipoly(
    rng: random.Random,
    max_terms: int = 6,
    max_degree: int = 6,
    num_bound: int = 100,
    den_bound: int = 20,
) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.randint(0, max_degree), rng.randint(0, max_degree))
        terms[key] = random_rational(rng, num_bound, den_bound)
    return BiPoly(terms)
