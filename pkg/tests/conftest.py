"""Shared generators for randomized (but seeded) test instances."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from votepower.model import VoteDistribution, pmf_structure
from votepower.poly import RationalPoly


def random_poly(rng: random.Random, max_degree: int = 8, max_terms: int = 5) -> RationalPoly:
    """Random sparse polynomial with small rational coefficients."""
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        coeffs[rng.randint(0, max_degree)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return RationalPoly(coeffs)


def random_distribution(
    rng: random.Random, max_support: int = 5, max_votes: int = 8
) -> VoteDistribution:
    """Random normalized vote distribution with exact probabilities."""
    size = rng.randint(1, max_support)
    votes = rng.sample(range(max_votes + 1), size)
    weights = [rng.randint(1, 9) for _ in votes]
    total = sum(weights)
    return pmf_structure([(v, Fraction(w, total)) for v, w in zip(votes, weights)])


def enum_product(polys) -> RationalPoly:
    """Oracle: expand a product by enumerating all term combinations.

    Independent of RationalPoly multiplication; sums the coefficient
    products per total degree.
    """
    coeffs: dict[int, Fraction] = {}
    for combo in product(*(list(p.items()) for p in polys)):
        degree = sum(d for d, _ in combo)
        value = Fraction(1)
        for _, c in combo:
            value *= c
        coeffs[degree] = coeffs.get(degree, Fraction(0)) + value
    return RationalPoly(coeffs)
