from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zinbiel.field import (QQ, FieldMismatchError, FieldTables, PrimeField, QuadraticExtension,
                           field_from_json, parse_rational, smallest_nonresidue)

PRIMES = [2, 3, 5, 7, 11]


def _elements(F):
    return st.builds(lambda a, b: F.element(a, b), st.integers(0, F.p - 1), st.integers(0, F.p - 1)) \
        if isinstance(F, QuadraticExtension) else st.builds(F, st.integers(0, F.p - 1))


@pytest.mark.parametrize("F", [PrimeField(p) for p in PRIMES] + [QuadraticExtension(p) for p in (2, 3, 5)],
                         ids=lambda F: F.name)
def test_field_axioms(F):
    @settings(max_examples=60, deadline=None)
    @given(_elements(F), _elements(F), _elements(F))
    def check(a, b, c):
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + F.zero == a and a * F.one == a
        assert a - a == F.zero
        if a:
            assert a * a.inv() == F.one
            assert (b / a) * a == b

    check()


def test_every_nonzero_element_is_invertible():
    for F in [PrimeField(p) for p in PRIMES] + [QuadraticExtension(p) for p in (2, 3, 5)]:
        nonzero = [x for x in F.elements() if x]
        assert len(nonzero) == F.order - 1
        assert all(x * x.inv() == F.one for x in nonzero)


def test_quadratic_extension_has_no_zero_divisors():
    # t^2 - c1 t - c0 must be irreducible for F_{p^2} to be a field
    for p in (2, 3, 5, 7):
        F = QuadraticExtension(p)
        prods = {a * b for a in F.elements() if a for b in F.elements() if b}
        assert F.zero not in prods


def test_f9_inverse_of_t():
    # F_9 = F_3[t]/(t^2 - 2): t * t = 2, so t^{-1} = t / 2 = 2t
    F = QuadraticExtension(3)
    assert smallest_nonresidue(3) == 2
    assert F.t * F.t == F(2)
    assert F.t.inv() == F.element(0, 2)


def test_f4_modulus():
    F = QuadraticExtension(2)
    assert F.t * F.t == F.t + F.one


def test_rationals_are_reduced():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert QQ.parse("-2/6") == Fraction(-1, 3)
    assert QQ.format(Fraction(4, 2)) == "2"


@settings(max_examples=200, deadline=None)
@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50), st.sampled_from([7, 11, 13]))
def test_reduction_is_a_ring_homomorphism(a, b, p):
    F = PrimeField(p)
    if a.denominator % p == 0 or b.denominator % p == 0:
        return
    assert F(a + b) == F(a) + F(b)
    assert F(a * b) == F(a) * F(b)
    if b and b.numerator % p:
        assert F(a / b) == F(a) / F(b)


def test_mixing_fields_is_refused():
    with pytest.raises(FieldMismatchError):
        PrimeField(3).one + PrimeField(5).one
    with pytest.raises(ZeroDivisionError):
        PrimeField(3)(Fraction(1, 3))
    with pytest.raises(ValueError):
        PrimeField(4)


def test_field_json_round_trip():
    for F in (QQ, PrimeField(5), QuadraticExtension(3)):
        assert field_from_json(F.to_json()) == F
    F = QuadraticExtension(5)
    x = F.element(2, 3)
    assert F.parse(F.format(x)) == x


def test_field_tables_match_arithmetic():
    for spec in (5, QuadraticExtension(3)):
        T = FieldTables(spec)
        for a in range(T.q):
            for b in range(T.q):
                x, y = T.decode(a), T.decode(b)
                assert T.decode(T.add[a][b]) == x + y
                assert T.decode(T.mul[a][b]) == x * y
        assert T.decode(0) == T.field.zero and T.decode(1) == T.field.one
