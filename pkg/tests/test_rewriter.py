import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zinbiel import catalog
from zinbiel.algebra import nilpotency_index
from zinbiel.rewriter import (Bracket, Generator, LinearCombo, ParseError, bracket_rewrites, bracket_words,
                              enumerate_bracketings, evaluate, is_left_normed, left_normalize, letters,
                              nonzero_basis_products, normal_form_mismatches, parse, random_environment,
                              word_to_expression)


def test_parse_examples():
    assert parse("[[a,b],c]") == Bracket(Bracket(Generator("a"), Generator("b")), Generator("c"))
    assert parse("a") == Generator("a")
    assert parse(" [ x1 , [y,z] ] ") == Bracket(Generator("x1"), Bracket(Generator("y"), Generator("z")))


@pytest.mark.parametrize("text, offset", [("[a,[b", 5), ("[a b]", 3), ("", 0), ("[a,b]]", 5), ("[1,a]", 1)])
def test_parse_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.offset == offset


def test_print_round_trip():
    for m in range(1, 6):
        for e in enumerate_bracketings(m):
            assert parse(str(e)) == e


def test_normalize_examples():
    assert str(left_normalize(parse("[[a,b],c]"))) == "1*[a,[b,c]] + 1*[a,[c,b]]"
    assert str(left_normalize(parse("[a,[b,c]]"))) == "1*[a,[b,c]]"
    four = left_normalize(parse("[[[a,b],c],d]"))
    # a stays in front and b is shuffled into every position among c, d
    assert sorted(w for w, _ in four) == sorted([
        ("a", "b", "c", "d"), ("a", "b", "d", "c"), ("a", "c", "b", "d"),
        ("a", "c", "d", "b"), ("a", "d", "b", "c"), ("a", "d", "c", "b")])
    assert all(c == 1 for _, c in four)


def test_four_letter_normal_form_agrees_in_z5_1():
    A = catalog.get("Z5_1")
    e = parse("[[[a,b],c],d]")
    nf = left_normalize(e)
    rng = random.Random(11)
    for _ in range(20):
        env = random_environment(A, "abcd", rng)
        assert evaluate(e, A, env) == evaluate(nf, A, env)


def test_repeated_letters_combine():
    combo = left_normalize(parse("[[a,a],a]"))
    assert combo.terms == ((("a", "a", "a"), Fraction(2)),)


@pytest.mark.parametrize("m, count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42), (7, 132)])
def test_bracketing_counts(m, count):
    bs = enumerate_bracketings(m)
    assert len(bs) == count == len(set(bs))
    assert all(letters(b) == [f"g{i}" for i in range(1, m + 1)] for b in bs)


def test_bracketing_range():
    for m in (0, 8):
        with pytest.raises(ValueError):
            enumerate_bracketings(m)


@st.composite
def expressions(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return Generator(draw(st.sampled_from("abcd")))
    return Bracket(draw(expressions(depth - 1)), draw(expressions(depth - 1)))


@settings(max_examples=150, deadline=None)
@given(expressions(depth=4))
def test_normal_form_shape(e):
    combo = left_normalize(e)
    multiset = Counter(letters(e))
    for word, c in combo:
        assert is_left_normed(word_to_expression(word))
        assert Counter(word) == multiset
        assert c == int(c) and c > 0
    words = [w for w, _ in combo]
    assert words == sorted(words) and len(set(words)) == len(words)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from("abc"), min_size=1, max_size=4), st.lists(st.sampled_from("def"), min_size=1, max_size=4))
def test_each_rewrite_replaces_one_term_by_two(u, v):
    # distinct letters in u and v keep every output word distinct, so the mass counts terms
    combo = bracket_words(u, v)
    assert sum(c for _, c in combo) == bracket_rewrites(u, v) + 1


@settings(max_examples=60, deadline=None)
@given(expressions(depth=4), st.integers(0, 10**6))
def test_normal_form_is_sound(e, seed):
    A = catalog.get("Z5_61")
    env = random_environment(A, sorted(set(letters(e))), random.Random(seed))
    assert evaluate(e, A, env) == evaluate(left_normalize(e), A, env)


def test_evaluate_examples():
    A = catalog.get("Z2_1")
    assert evaluate(parse("[e1,e1]"), A, {"e1": A.e(1)}) == A.e(2)
    assert evaluate(LinearCombo.zero(), A, {}) == A.zero_vector
    with pytest.raises(KeyError):
        evaluate(parse("[x,y]"), A, {"x": A.e(1)})


def test_soundness_across_catalog_sample():
    rng = random.Random(3)
    for e, v, A in list(catalog.sampled_algebras())[::10]:
        assert normal_form_mismatches(A, (3, 4), rng, environments=3) == []


def test_nilpotency_corollary_small():
    for id_ in ("Z3_1", "Z4_1", "Z4_12"):
        A = catalog.get(id_)
        m = nilpotency_index(A)
        assert nonzero_basis_products(A, m) == []
        assert nonzero_basis_products(A, m - 1) != []
