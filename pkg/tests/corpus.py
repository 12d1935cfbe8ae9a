"""Seeded random jobs and substitutions for the search tests."""

import itertools
import random
from fractions import Fraction

from supersplit.algebra import SuperPolynomial, Substitution, graded_piece_basis
from supersplit.analysis import VarietyJob
from supersplit.models import ModelSpec


def _coeff(rng):
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))


def _odd_sets(n, parity, min_len):
    return [I for k in range(min_len, n + 1) if k % 2 == parity
            for I in itertools.combinations(range(n), k)]


def random_generator(rng, spec, d, theta_terms=2, even_terms=3):
    """Homogeneous even polynomial of degree d with a nonzero theta-part, or None."""
    ne, n = spec.n_even, spec.n
    choices = []
    for I in _odd_sets(n, 0, 2):
        bI = sum(spec.b[i] for i in I)
        for e in graded_piece_basis(spec.a, d - bI):
            choices.append((e, I))
    if not choices:
        return None
    reduced = graded_piece_basis(spec.a, d)
    terms = {}
    for e in rng.sample(reduced, min(even_terms, len(reduced))):
        terms[(e, ())] = _coeff(rng)
    for mono in rng.sample(choices, min(theta_terms, len(choices))):
        terms[mono] = _coeff(rng)
    return SuperPolynomial(ne, n, terms)


def positive_corpus(count, seed=0, max_m=3, max_n=4, max_d=4):
    """Hypersurface jobs on positive specs whose odd weights dominate the even ones."""
    rng = random.Random(seed)
    jobs = []
    while len(jobs) < count:
        m = rng.randint(1, max_m)
        n = rng.randint(2, max_n)
        b = tuple(rng.randint(1, 3) for _ in range(n))
        top = min(b)
        a = tuple(rng.randint(1, top) if rng.random() < 0.3 else 1 for _ in range(m + 1))
        spec = ModelSpec.create(m, n, a, b)
        f = random_generator(rng, spec, rng.randint(1, max_d))
        if f is not None:
            jobs.append(VarietyJob(spec, (f,)))
    return jobs


def unconstrained_corpus(count, seed=0):
    """Jobs whose weights may violate positivity or odd dominance."""
    rng = random.Random(seed)
    jobs = []
    while len(jobs) < count:
        m = rng.randint(1, 3)
        n = rng.randint(2, 4)
        a = tuple(rng.randint(1, 3) for _ in range(m + 1))
        b = tuple(rng.randint(-1, 2) for _ in range(n))
        spec = ModelSpec.create(m, n, a, b)
        f = random_generator(rng, spec, rng.randint(0, 5), theta_terms=rng.randint(1, 3))
        if f is not None:
            jobs.append(VarietyJob(spec, (f,)))
    return jobs


def random_framed_substitution(rng, spec, density=0.5):
    """Weight-preserving substitution congruent to the identity modulo J^2."""
    ne, n = spec.n_even, spec.n
    even, odd = [], []
    for mu in range(ne):
        img = SuperPolynomial.even_var(mu, ne, n)
        for I in _odd_sets(n, 0, 2):
            for e in graded_piece_basis(spec.a, spec.a[mu] - sum(spec.b[i] for i in I)):
                if rng.random() < density:
                    img = img + SuperPolynomial(ne, n, {(e, I): _coeff(rng)})
        even.append(img)
    for j in range(n):
        img = SuperPolynomial.odd_var(j, ne, n)
        for K in _odd_sets(n, 1, 3):
            for e in graded_piece_basis(spec.a, spec.b[j] - sum(spec.b[i] for i in K)):
                if rng.random() < density:
                    img = img + SuperPolynomial(ne, n, {(e, K): _coeff(rng)})
        odd.append(img)
    return Substitution(tuple(even), tuple(odd), ne, n)
