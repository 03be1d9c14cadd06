"""Bracketed words, their left-normed normal form, and evaluation in an algebra.

Grammar::

    expr := name | "[" expr "," expr "]"

A left-normed word ``(g1, g2, ..., gm)`` stands for ``[g1,[g2,[...[g_{m-1},g_m]...]]]``.
Normalisation applies the Zinbiel identity ``[[a,t],s] = [a,[t,s]] + [a,[s,t]]``
recursively; every step trades one bracket for two with fewer letters on the
inner level, so the recursion is on the total number of letters.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .algebra import Algebra, product


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Generator:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator names must be nonempty")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Bracket:
    left: "Expression"
    right: "Expression"

    def __str__(self):
        return f"[{self.left},{self.right}]"


Expression = Union[Generator, Bracket]
LeftNormedWord = tuple  # tuple of generator names, length >= 1


def letters(e: Expression) -> list[str]:
    if isinstance(e, Generator):
        return [e.name]
    return letters(e.left) + letters(e.right)


def is_left_normed(e: Expression) -> bool:
    while isinstance(e, Bracket):
        if not isinstance(e.left, Generator):
            return False
        e = e.right
    return True


def word_to_expression(word: Sequence[str]) -> Expression:
    expr: Expression = Generator(word[-1])
    for g in reversed(word[:-1]):
        expr = Bracket(Generator(g), expr)
    return expr


def format_word(word: Sequence[str]) -> str:
    return str(word_to_expression(word))


# --------------------------------------------------------------------------
# Parsing


def _is_name_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def parse(text: str) -> Expression:
    """Parse a bracketed expression; whitespace is ignored."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError(f"expected '{ch}' but input ended", pos)
        if text[pos] != ch:
            raise ParseError(f"expected '{ch}' but found '{text[pos]}'", pos)
        pos += 1

    def expr():
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError("expected an expression but input ended", pos)
        ch = text[pos]
        if ch == "[":
            pos += 1
            left = expr()
            expect(",")
            right = expr()
            expect("]")
            return Bracket(left, right)
        if _is_name_char(ch) and not ch.isdigit():
            start = pos
            while pos < n and _is_name_char(text[pos]):
                pos += 1
            return Generator(text[start:pos])
        raise ParseError(f"unexpected character '{ch}'", pos)

    result = expr()
    skip()
    if pos != n:
        raise ParseError(f"trailing input '{text[pos:]}'", pos)
    return result


# --------------------------------------------------------------------------
# Linear combinations of left-normed words


@dataclass(frozen=True)
class LinearCombo:
    """Sorted tuple of (word, coefficient) pairs with no zero coefficients."""

    terms: tuple

    @classmethod
    def from_dict(cls, d: Mapping[tuple, object]) -> LinearCombo:
        return cls(tuple((w, Fraction(c)) for w, c in sorted(d.items()) if c))

    @classmethod
    def zero(cls) -> LinearCombo:
        return cls(())

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{_fmt_coeff(c)}*{format_word(w)}" for w, c in self.terms)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _add_into(acc: dict, combo: dict, scale=1, prefix: tuple = ()):
    for w, c in combo.items():
        key = prefix + w
        acc[key] = acc.get(key, 0) + scale * c


@lru_cache(maxsize=None)
def _bracket_words(u: tuple, v: tuple) -> tuple:
    """Normal form of [u, v] for left-normed words u, v, as sorted (word, coeff) items."""
    if len(u) == 1:
        return ((u + v, 1),)
    a, t = u[:1], u[1:]
    acc: dict = {}
    _add_into(acc, dict(_bracket_words(t, v)), prefix=a)
    _add_into(acc, dict(_bracket_words(v, t)), prefix=a)
    return tuple(sorted(acc.items()))


def _normalize(e: Expression) -> dict:
    if isinstance(e, Generator):
        return {(e.name,): 1}
    left = _normalize(e.left)
    right = _normalize(e.right)
    acc: dict = {}
    for u, cu in left.items():
        for v, cv in right.items():
            _add_into(acc, dict(_bracket_words(u, v)), scale=cu * cv)
    return acc


def left_normalize(e: Expression) -> LinearCombo:
    """Rewrite e as a combination of left-normed words with integer coefficients."""
    return LinearCombo.from_dict(_normalize(e))


def bracket_rewrites(u: Sequence[str], v: Sequence[str]) -> int:
    """Number of identity applications used to normalise [u, v] for left-normed u, v.

    Each application replaces one term by two, so the normal form of [u, v]
    carries total coefficient mass ``bracket_rewrites(u, v) + 1``.
    """
    u, v = tuple(u), tuple(v)
    if len(u) == 1:
        return 0
    return 1 + bracket_rewrites(u[1:], v) + bracket_rewrites(v, u[1:])


def bracket_words(u: Sequence[str], v: Sequence[str]) -> LinearCombo:
    """Normal form of [u, v] where u and v are already left-normed words."""
    return LinearCombo.from_dict(dict(_bracket_words(tuple(u), tuple(v))))


# --------------------------------------------------------------------------
# Bracketings and evaluation


def enumerate_bracketings(m: int, names: Sequence[str] | None = None) -> list[Expression]:
    """All Catalan(m-1) bracketings of g1 ... gm in fixed order (1 <= m <= 7)."""
    if not 1 <= m <= 7:
        raise ValueError(f"m must lie in 1..7, got {m}")
    if names is None:
        names = [f"g{i}" for i in range(1, m + 1)]
    if len(names) != m:
        raise ValueError("need exactly m generator names")

    @lru_cache(maxsize=None)
    def build(lo: int, hi: int) -> tuple:
        if hi - lo == 1:
            return (Generator(names[lo]),)
        out = []
        for mid in range(lo + 1, hi):
            for left in build(lo, mid):
                for right in build(mid, hi):
                    out.append(Bracket(left, right))
        return tuple(out)

    return list(build(0, m))


def evaluate(e: Expression | LinearCombo, A: Algebra, env: Mapping[str, Sequence]) -> tuple:
    """Interpret brackets as the product of A with generators bound by env."""
    if isinstance(e, LinearCombo):
        total = [A.field.zero] * A.dim
        for word, c in e.terms:
            v = evaluate(word_to_expression(word), A, env)
            coeff = A.field(c)
            total = [t + coeff * x for t, x in zip(total, v)]
        return tuple(total)
    if isinstance(e, Generator):
        if e.name not in env:
            raise KeyError(f"generator '{e.name}' is not bound")
        return tuple(A.field(x) for x in env[e.name])
    return product(A, evaluate(e.left, A, env), evaluate(e.right, A, env))


def random_environment(A: Algebra, names: Sequence[str], rng: random.Random, bound: int = 5) -> dict:
    return {g: tuple(A.field(rng.randint(-bound, bound)) for _ in range(A.dim)) for g in names}


# --------------------------------------------------------------------------
# Checks over an algebra


def normal_form_mismatches(A: Algebra, m_values: Sequence[int], rng: random.Random,
                           environments: int = 10) -> list[tuple]:
    """Bracketings whose normal form evaluates differently from the bracketing itself.

    Each bracketing of ``m`` letters is evaluated in ``environments`` random
    assignments of the letters; returns (expression, environment) pairs that disagree.
    """
    bad = []
    for m in m_values:
        for expr in enumerate_bracketings(m):
            nf = left_normalize(expr)
            names = [f"g{i}" for i in range(1, m + 1)]
            for _ in range(environments):
                env = random_environment(A, names, rng)
                if evaluate(expr, A, env) != evaluate(nf, A, env):
                    bad.append((str(expr), env))
    return bad


def nonzero_basis_products(A: Algebra, m: int, rng: random.Random | None = None,
                           samples: int | None = None) -> list[tuple]:
    """Bracketings of m basis vectors with a nonzero value.

    Every basis tuple is tried when ``samples`` is None, otherwise that many
    random tuples drawn with ``rng``.  Returns (expression, indices) pairs.
    """
    n = A.dim
    names = [f"g{i}" for i in range(1, m + 1)]
    brackets = enumerate_bracketings(m, names)
    basis = [tuple(A.field.one if k == i else A.field.zero for k in range(n)) for i in range(n)]
    if samples is None:
        tuples = itertools.product(range(n), repeat=m)
    else:
        rng = rng or random.Random(0)
        tuples = (tuple(rng.randrange(n) for _ in range(m)) for _ in range(samples))
    bad = []
    for idx in tuples:
        env = {g: basis[i] for g, i in zip(names, idx)}
        for expr in brackets:
            if any(evaluate(expr, A, env)):
                bad.append((str(expr), tuple(i + 1 for i in idx)))
    return bad
