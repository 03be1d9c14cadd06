"""Independent oracles shared by the unit and acceptance tests."""

import itertools
from fractions import Fraction
from functools import lru_cache

from zinbiel.groebner import Polynomial


@lru_cache(maxsize=None)
def q_pascal(n, d, q):
    """[n, d]_q = [n-1, d-1]_q + q^d [n-1, d]_q, independent of the product formula."""
    if d < 0 or d > n:
        return 0
    if d == 0 or d == n:
        return 1
    return q_pascal(n - 1, d - 1, q) + q ** d * q_pascal(n - 1, d, q)


def random_system(rng, nvars, count, degree=2, coeff=3):
    monos = [m for m in itertools.product(range(degree + 1), repeat=nvars) if sum(m) <= degree]
    F = []
    for _ in range(count):
        terms = {}
        for m in rng.sample(monos, rng.randint(1, min(4, len(monos)))):
            c = rng.randint(-coeff, coeff)
            if c:
                terms[m] = Fraction(c)
        if terms:
            F.append(Polynomial(terms, nvars))
    return F or [Polynomial.variable(0, nvars)]


def eval_mod(f, point, p):
    """f(point) mod p, or None when a coefficient does not reduce."""
    total = 0
    for m, c in f.terms.items():
        if c.denominator % p == 0:
            return None
        term = c.numerator * pow(c.denominator, -1, p)
        for xi, e in zip(point, m):
            term *= pow(xi, e, p)
        total += term
    return total % p


def fp_solutions(F, nvars, p):
    return [pt for pt in itertools.product(range(p), repeat=nvars)
            if all(eval_mod(f, pt, p) == 0 for f in F)]
