import itertools
import random
from fractions import Fraction

import pytest
from oracles import eval_mod, fp_solutions, random_system

from zinbiel.groebner import (Budget, GroebnerBudgetError, Polynomial, buchberger, find_rational_point,
                              is_infeasible, parse_polynomial, polynomial_ring, reduce, s_polynomial,
                              verify_basis)

x, y = polynomial_ring(["x", "y"])
one = Polynomial.constant(1, 2)


def test_reduce_examples():
    assert reduce(x * x, [x]).is_zero()
    assert reduce(x * y + 1, [x]) == one


def test_buchberger_examples():
    G = buchberger([x * x - 1, x - 1])
    assert [str(g) for g in G.polys] == ["x1 - 1"]
    assert buchberger([x, 1 - x]).is_unit
    G = buchberger([x * x, x * y, y * y - x])
    assert G.verified and not G.is_unit
    # <x^2, xy, y^2 - x> contains y^3 but not x
    assert reduce(y ** 3, G.polys).is_zero()
    assert not reduce(x, G.polys).is_zero()


def test_feasibility_examples():
    r = is_infeasible([x * x + 1, x - y])
    assert r.status == "no" and r.point is None
    assert is_infeasible([x, 1 - x]).status == "yes"
    r = is_infeasible([x * x - 4, x * y - 2])
    assert r.status == "no" and r.point == (2, 1)


def test_unlucky_primes_are_tracked():
    G = buchberger([3 * x - 1, x])
    assert G.is_unit
    assert 3 in G.unlucky_primes and not G.specializes_mod(3) and G.specializes_mod(5)


def test_budget_exhaustion():
    z = polynomial_ring(["a", "b", "c"])
    F = [z[0] ** 2 - z[1] * z[2], z[1] ** 2 - z[0] * z[2] + 1, z[2] ** 2 - z[0] * z[1] - 2]
    with pytest.raises(GroebnerBudgetError):
        buchberger(F, Budget(max_pairs=1))
    assert is_infeasible(F, Budget(max_pairs=1)).status == "unknown"


def test_random_systems_closure_and_membership():
    rng = random.Random(1234)
    for _ in range(40):
        nv = rng.randint(1, 3)
        F = random_system(rng, nv, rng.randint(1, 3))
        G = buchberger(F)
        assert G.verified and verify_basis(G, F)
        for f in F:
            assert reduce(f, G.polys).is_zero()
        for g, h in itertools.combinations(G.polys, 2):
            assert reduce(s_polynomial(g, h), G.polys).is_zero()
        combo = sum((Polynomial({m: Fraction(rng.randint(-2, 2))}, nv) * f
                     for f in F for m in [tuple(rng.randint(0, 1) for _ in range(nv))]),
                    Polynomial.constant(0, nv))
        assert reduce(combo, G.polys).is_zero()


def test_determinism():
    rng = random.Random(99)
    for _ in range(10):
        F = random_system(rng, 3, 3)
        assert buchberger(F).polys == buchberger(list(F)).polys


def test_agreement_with_brute_force_mod_p():
    """{1} over Q means no F_p solutions whenever the computation specialises mod p."""
    rng = random.Random(2024)
    checked = 0
    for _ in range(50):
        nv = rng.randint(1, 3)
        F = random_system(rng, nv, rng.randint(2, 4))
        res = is_infeasible(F)
        assert res.status in ("yes", "no")
        for p in (2, 3, 5):
            sols = fp_solutions(F, nv, p)
            if res.infeasible and res.basis.specializes_mod(p):
                assert sols == []
                checked += 1
            if res.point is not None and all(Fraction(v).denominator % p for v in res.point):
                reduced = tuple(eval_mod(Polynomial.constant(v, 1), (0,), p) for v in res.point)
                if all(eval_mod(f, reduced, p) is not None for f in F):
                    assert reduced in sols
    assert checked > 0


def test_rational_points_satisfy_the_system():
    rng = random.Random(5)
    for _ in range(30):
        F = random_system(rng, 2, 2)
        point = find_rational_point(F)
        if point is not None:
            assert all(f.evaluate(point) == 0 for f in F)


def test_parse_polynomial():
    f = parse_polynomial("3/2*x^2*y - y + 1", ["x", "y"])
    assert f == Fraction(3, 2) * x * x * y - y + 1
    assert parse_polynomial("(x-1)**2", ["x", "y"]) == x * x - 2 * x + 1
    with pytest.raises(ValueError):
        parse_polynomial("x + z", ["x", "y"])
    with pytest.raises(ValueError):
        parse_polynomial("x^y", ["x", "y"])
