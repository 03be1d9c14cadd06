import pytest
from oracles import q_pascal

from zinbiel import catalog
from zinbiel.algebra import Subspace, is_abelian, is_ideal
from zinbiel.field import PrimeField
from zinbiel.search import (CapExceededError, abelian_subspaces, codes_to_subspace, count_subspaces_fp,
                            enumerate_subspaces_fp, gaussian_binomial, good_prime, max_abelian_dim,
                            tables_for)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_enumeration_counts_match_gaussian_binomials(p):
    for n in range(0, 7):
        for d in range(0, n + 1):
            assert count_subspaces_fp(n, d, p) == gaussian_binomial(n, d, p) == q_pascal(n, d, p)


def test_count_examples():
    assert count_subspaces_fp(5, 4, 2) == 31
    assert count_subspaces_fp(3, 3, 7) == 1
    assert count_subspaces_fp(4, 2, 3) == 130


def test_enumeration_is_exhaustive_and_distinct():
    F = PrimeField(3)
    for d in range(5):
        subs = list(enumerate_subspaces_fp(4, d, 3))
        assert len(subs) == len(set(subs)) == gaussian_binomial(4, d, 3)
        assert all(Subspace.span(U.basis, 4, F) == U for U in subs)


def test_cap_is_enforced():
    with pytest.raises(CapExceededError):
        next(enumerate_subspaces_fp(6, 3, 5, cap=1000))


def test_null_filiform_5_scan():
    A = catalog.null_filiform(5)
    T = tables_for(7)
    assert max_abelian_dim(A, T)[0] == 3
    assert max_abelian_dim(A, T, require_ideal=True)[0] == 3
    found = abelian_subspaces(A, 3, T, require_ideal=True)
    assert [codes_to_subspace(m, T) for m in found] == [Subspace.coordinate([3, 4, 5], 5, T.field)]


def test_scan_witnesses_verify():
    T = tables_for(5)
    for id_ in ("Z4_2", "Z4_12", "Z5_12", "Z5_30"):
        A = catalog.get(id_)
        Ap = A.reduce_mod(5)
        for ideal in (False, True):
            d, found = max_abelian_dim(A, T, require_ideal=ideal, collect=True)
            for m in found:
                W = codes_to_subspace(m, T)
                assert W.dim == d and is_abelian(Ap, W)
                assert not ideal or is_ideal(Ap, W)


def test_center_containment_does_not_change_the_maximum():
    T = tables_for(3)
    for id_ in ("Z4_2", "Z4_12", "Z5_30", "Z5_61"):
        A = catalog.get(id_)
        for ideal in (False, True):
            d = max_abelian_dim(A, T, require_ideal=ideal)[0]
            assert abelian_subspaces(A, d, T, ideal, contain=([], []), first_only=True)
            assert not abelian_subspaces(A, d + 1, T, ideal, contain=([], []), first_only=True)


def test_extension_field_scan():
    # Z3_3 at a = 1: the quadratic form x^2 + xy + y^2 is isotropic over F_4 but not over F_2
    A = catalog.get("Z3_3", a=1)
    assert max_abelian_dim(A, tables_for(2))[0] == 1
    assert max_abelian_dim(A, tables_for(("p2", 2)))[0] == 2


def test_good_prime():
    A = catalog.get("Z3_1")
    assert not good_prime(A, 2) and good_prime(A, 3)
