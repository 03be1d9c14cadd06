"""A small Buchberger engine over Q, tuned for feasibility questions.

Polynomials use degree-reverse-lexicographic order.  The public
:class:`Polynomial` carries exact Fraction coefficients; the inner loop works
on primitive integer polynomials (a Q-ideal does not change when generators
are rescaled), which keeps coefficient growth in check without modular
tricks.

``is_infeasible`` answers "is 1 in the ideal?", i.e. whether the system has
no common zero over C (weak Nullstellensatz).  When the answer is no,
``find_rational_point`` tries to produce an explicit rational solution by
linear elimination and small-value specialisation, checking feasibility of
each partial assignment with a fresh basis.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

DEFAULT_MAX_PAIRS = 50_000
DEFAULT_MAX_SECONDS = 60.0


class GroebnerBudgetError(RuntimeError):
    """Raised when Buchberger exceeds its pair or time budget."""

    def __init__(self, message: str, partial: list):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class Budget:
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_seconds: float = DEFAULT_MAX_SECONDS


# --------------------------------------------------------------------------
# Monomials


@lru_cache(maxsize=1 << 16)
def order_key(m: tuple) -> tuple:
    """Sort key realising degrevlex: larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(y - x for x, y in zip(b, a))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# --------------------------------------------------------------------------
# Public polynomial type


class Polynomial:
    """Sparse polynomial with Fraction coefficients in ``nvars`` variables."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[tuple, object], nvars: int):
        self.nvars = nvars
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise ValueError("exponents must be nonnegative")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        return cls({tuple(1 if j == i else 0 for j in range(nvars)): 1}, nvars)

    # ordering ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    @property
    def lm(self) -> tuple:
        return max(self.terms, key=order_key)

    @property
    def lc(self) -> Fraction:
        return self.terms[self.lm]

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                t[m] = t.get(m, 0) + c1 * c2
        return Polynomial(t, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial.constant(1, self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lc = self.lc
        return Polynomial({m: c / lc for m, c in self.terms.items()}, self.nvars)

    def __str__(self):
        return format_poly(self.terms, [f"x{i + 1}" for i in range(self.nvars)])

    def __repr__(self):
        return f"Polynomial({self})"


def format_poly(terms: Mapping[tuple, object], names: Sequence[str]) -> str:
    if not terms:
        return "0"
    out = []
    for m, c in sorted(terms.items(), key=lambda t: order_key(t[0]), reverse=True):
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
        c = Fraction(c)
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}*{mono}"
        out.append(s)
    text = out[0]
    for s in out[1:]:
        text += " - " + s[1:] if s.startswith("-") else " + " + s
    return text


def polynomial_ring(names: Sequence[str]) -> list[Polynomial]:
    """Generators of Q[names] as Polynomials."""
    n = len(names)
    return [Polynomial.variable(i, n) for i in range(n)]


# --------------------------------------------------------------------------
# Integer kernel


TRACKED_PRIMES = tuple(p for p in range(2, 100) if all(p % q for q in range(2, p)))


def _note(track: set | None, n: int):
    if track is not None and abs(n) != 1:
        track.update(p for p in TRACKED_PRIMES if n % p == 0)


def _primitive(t: dict, track: set | None = None) -> dict:
    """Divide out the content and make the leading coefficient positive.

    Primes dividing a removed content are added to ``track``.
    """
    if not t:
        return t
    g = 0
    for c in t.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = t[max(t, key=order_key)]
    if lead < 0:
        g = -g
    if g == 1:
        return t
    _note(track, g)
    return {m: c // g for m, c in t.items()}


def _to_integer(p: Polynomial, track: set | None = None) -> dict:
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    _note(track, den)
    return _primitive({m: int(c * den) for m, c in p.terms.items()}, track)


class _IntPoly:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: dict):
        self.terms = terms
        self.lm = max(terms, key=order_key)
        self.lc = terms[self.lm]


def _reduce_int(f: dict, G: Sequence[_IntPoly], track: set | None = None) -> dict:
    """Full fraction-free reduction of f by G; the result is primitive."""
    f = dict(f)
    rem: dict = {}
    while f:
        m = max(f, key=order_key)
        c = f[m]
        for g in G:
            if _divides(g.lm, m):
                break
        else:
            rem[m] = c
            del f[m]
            continue
        q = _mono_div(m, g.lm)
        d = gcd(g.lc, c)
        a = g.lc // d
        b = c // d
        if a != 1:
            f = {k: v * a for k, v in f.items()}
            rem = {k: v * a for k, v in rem.items()}
        for mg, cg in g.terms.items():
            k = _mono_mul(q, mg)
            v = f.get(k, 0) - b * cg
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    return _primitive(rem, track)


def _spoly(f: _IntPoly, g: _IntPoly) -> dict:
    L = _lcm(f.lm, g.lm)
    qf = _mono_div(L, f.lm)
    qg = _mono_div(L, g.lm)
    d = gcd(f.lc, g.lc)
    af = g.lc // d
    ag = f.lc // d
    t: dict = {}
    for m, c in f.terms.items():
        k = _mono_mul(qf, m)
        t[k] = t.get(k, 0) + af * c
    for m, c in g.terms.items():
        k = _mono_mul(qg, m)
        v = t.get(k, 0) - ag * c
        if v:
            t[k] = v
        else:
            t.pop(k, None)
    return {k: v for k, v in t.items() if v}


def _is_constant(t: dict) -> bool:
    return len(t) == 1 and not any(next(iter(t)))


def _linear_autoreduce(polys: list[dict], track: set | None = None) -> list[dict]:
    """Fraction-free Gauss-Jordan on the coefficient matrix, so leading monomials are distinct.

    Only integer row combinations and tracked content removals are used.
    """
    rows = [dict(p) for p in polys if p]
    out: list[dict] = []
    while rows:
        rows = [_primitive(r, track) for r in rows if r]
        if not rows:
            break
        piv = max(rows, key=lambda r: order_key(max(r, key=order_key)))
        rows.remove(piv)
        m = max(piv, key=order_key)
        a = piv[m]

        def elim(r):
            b = r.get(m, 0)
            if not b:
                return r
            g = gcd(a, b)
            x, y = a // g, b // g
            t = {k: x * v for k, v in r.items()}
            for k, v in piv.items():
                w = t.get(k, 0) - y * v
                if w:
                    t[k] = w
                else:
                    t.pop(k, None)
            return t

        rows = [elim(r) for r in rows]
        out = [_primitive(elim(r), track) for r in out]
        out.append(piv)
    return [r for r in out if r]


def _interreduce(G: list[_IntPoly], track: set | None = None) -> list[_IntPoly]:
    G = sorted(G, key=lambda g: order_key(g.lm))
    minimal = []
    for g in G:
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _reduce_int(g.terms, others, track)
        out.append(_IntPoly(r))
    out.sort(key=lambda g: order_key(g.lm), reverse=True)
    return out


@dataclass
class GroebnerBasis:
    polys: list[Polynomial]
    nvars: int
    pairs_processed: int = 0
    pairs_skipped: int = 0
    verified: bool = False
    unlucky_primes: frozenset = frozenset()
    _int: list = field(default_factory=list, repr=False)

    def specializes_mod(self, p: int) -> bool:
        """True when every division in the run was by a unit mod p.

        Then the same computation is valid over Z localized at p, so a unit
        basis also rules out points over every extension of F_p.
        """
        return p in TRACKED_PRIMES and p not in self.unlucky_primes

    @property
    def is_unit(self) -> bool:
        """True when the basis is {1}, i.e. the ideal is the whole ring."""
        return len(self.polys) == 1 and self.polys[0].is_constant() and not self.polys[0].is_zero()

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


def _run_buchberger(F: list[dict], nvars: int, budget: Budget, track: set | None = None):
    start = time.monotonic()
    F = [p for p in F if p]
    if any(_is_constant(p) for p in F):
        return [_IntPoly({(0,) * nvars: 1})], 0, 0
    if not F:
        return [], 0, 0
    G: list[_IntPoly] = []
    heap: list = []
    pending: set = set()
    processed = skipped = 0

    def add(h: dict):
        G.append(_IntPoly(h))
        t = len(G) - 1
        for i in range(t):
            L = _lcm(G[i].lm, G[t].lm)
            heapq.heappush(heap, (order_key(L), i, t))
            pending.add((i, t))

    for p in _linear_autoreduce(F, track):
        if _is_constant(p):
            return [_IntPoly({(0,) * nvars: 1})], 0, 0
        add(p)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        gi, gj = G[i], G[j]
        if _coprime(gi.lm, gj.lm):
            skipped += 1
            continue
        L = _lcm(gi.lm, gj.lm)
        chain = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides(G[k].lm, L) and (min(i, k), max(i, k)) not in pending \
                    and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            skipped += 1
            continue
        processed += 1
        if processed > budget.max_pairs:
            raise GroebnerBudgetError(f"pair budget {budget.max_pairs} exhausted",
                                      [g.terms for g in G])
        if time.monotonic() - start > budget.max_seconds:
            raise GroebnerBudgetError(f"time budget {budget.max_seconds}s exhausted",
                                      [g.terms for g in G])
        h = _reduce_int(_spoly(gi, gj), G, track)
        if not h:
            continue
        if _is_constant(h):
            return [_IntPoly({(0,) * nvars: 1})], processed, skipped
        add(h)
    return _interreduce(G, track), processed, skipped


def _from_int(t: dict, nvars: int) -> Polynomial:
    return Polynomial({m: Fraction(c) for m, c in t.items()}, nvars)


def buchberger(F: Iterable[Polynomial], budget: Budget | None = None, verify: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of <F> in degrevlex order.

    With ``verify`` the S-polynomial closure and the membership of every input
    are re-checked before returning.
    """
    F = list(F)
    if not F:
        raise ValueError("buchberger needs at least one polynomial")
    nvars = F[0].nvars
    track: set = set()
    ints = [_to_integer(f, track) for f in F]
    G, processed, skipped = _run_buchberger(ints, nvars, budget or Budget(), track)
    basis = GroebnerBasis([_from_int(g.terms, nvars) for g in G], nvars, processed, skipped,
                          unlucky_primes=frozenset(track), _int=G)
    if verify:
        if not verify_basis(basis, F):
            raise AssertionError("emitted basis failed post-hoc verification")
        basis.verified = True
    return basis


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    L = _lcm(f.lm, g.lm)
    mf = Polynomial({_mono_div(L, f.lm): 1 / f.lc}, f.nvars)
    mg = Polynomial({_mono_div(L, g.lm): 1 / g.lc}, f.nvars)
    return mf * f - mg * g


def reduce(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Exact normal form of f modulo G over Q (no term divisible by any lm of G)."""
    G = [g for g in G if not g.is_zero()]
    leads = [(g.lm, g.lc, g) for g in G]
    f_terms = dict(f.terms)
    rem: dict = {}
    while f_terms:
        m = max(f_terms, key=order_key)
        c = f_terms[m]
        for lm, lc, g in leads:
            if _divides(lm, m):
                q = _mono_div(m, lm)
                s = c / lc
                for mg, cg in g.terms.items():
                    k = _mono_mul(q, mg)
                    v = f_terms.get(k, 0) - s * cg
                    if v:
                        f_terms[k] = v
                    else:
                        f_terms.pop(k, None)
                break
        else:
            rem[m] = c
            del f_terms[m]
    return Polynomial(rem, f.nvars)


def verify_basis(basis: GroebnerBasis, F: Sequence[Polynomial]) -> bool:
    """S-polynomial closure plus reduction of every input to zero."""
    if basis.is_unit:
        # 1 in the ideal is certified by the reduction that produced it;
        # closure of {1} is trivial.
        return True
    G = basis._int or [_IntPoly(_to_integer(g)) for g in basis.polys]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if _coprime(G[i].lm, G[j].lm):
                continue
            if _reduce_int(_spoly(G[i], G[j]), G):
                return False
    return all(not _reduce_int(_to_integer(f), G) for f in F)


# --------------------------------------------------------------------------
# Feasibility


@dataclass
class FeasibilityResult:
    status: str  # "yes" (infeasible), "no" (feasible over C), "unknown" (budget)
    basis: GroebnerBasis | None = None
    point: tuple | None = None
    message: str = ""

    @property
    def infeasible(self) -> bool:
        return self.status == "yes"

    @property
    def feasible(self) -> bool:
        return self.status == "no"


def is_infeasible(F: Sequence[Polynomial], budget: Budget | None = None,
                  want_point: bool = True, verify: bool = True) -> FeasibilityResult:
    """Decide 1 in <F>.

    ``yes`` means no common zero over C.  ``no`` means the basis is not {1};
    a rational point is attached when the search finds one.  ``unknown`` is
    returned when the budget runs out.
    """
    F = list(F)
    if not F:
        return FeasibilityResult("no", None, None, "empty system")
    try:
        G = buchberger(F, budget, verify=verify)
    except GroebnerBudgetError as exc:
        return FeasibilityResult("unknown", None, None, str(exc))
    if G.is_unit:
        return FeasibilityResult("yes", G)
    point = None
    if want_point:
        try:
            point = find_rational_point(G.polys, budget=budget)
        except GroebnerBudgetError:
            point = None
    return FeasibilityResult("no", G, point)


# --------------------------------------------------------------------------
# Rational points


def _substitute(t: dict, j: int, expr: dict, den: int) -> dict:
    """Replace x_j by expr/den in an integer polynomial, clearing denominators."""
    D = max((m[j] for m in t), default=0)
    if D == 0:
        return t
    powers = [{tuple([0] * len(next(iter(t)))): 1}]
    for _ in range(D):
        prev = powers[-1]
        nxt: dict = {}
        for m1, c1 in prev.items():
            for m2, c2 in expr.items():
                k = _mono_mul(m1, m2)
                nxt[k] = nxt.get(k, 0) + c1 * c2
        powers.append({k: v for k, v in nxt.items() if v})
    out: dict = {}
    for m, c in t.items():
        e = m[j]
        rest = m[:j] + (0,) + m[j + 1:]
        scale = c * den ** (D - e)
        for mp, cp in powers[e].items():
            k = _mono_mul(rest, mp)
            out[k] = out.get(k, 0) + scale * cp
    return _primitive({k: v for k, v in out.items() if v})


def find_rational_point(F: Sequence[Polynomial], budget: Budget | None = None,
                        values: Sequence[int] = (0, 1, -1, 2, -2), max_nodes: int = 400) -> tuple | None:
    """Search for a common rational zero of F.

    Linear basis elements are used to eliminate a variable exactly; otherwise a
    variable is specialised to small integers, keeping only branches whose
    basis stays different from {1}.
    """
    F = list(F)
    if not F:
        return None
    nvars = F[0].nvars
    budget = budget or Budget()
    nodes = 0
    zero = (0,) * nvars

    def solve(system: list[dict], steps: list):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            return None
        G, _, _ = _run_buchberger(system, nvars, budget)
        terms = [g.terms for g in G]
        if any(_is_constant(t) for t in terms):
            return None
        if not terms:
            return steps
        for t in terms:
            if max(sum(m) for m in t) == 1:
                j = next(i for i in range(nvars) if t.get(tuple(1 if k == i else 0 for k in range(nvars))))
                unit = tuple(1 if k == j else 0 for k in range(nvars))
                cj = t[unit]
                expr = {m: -c for m, c in t.items() if m != unit}
                new = [_substitute(s, j, expr, cj) for s in terms]
                return solve([s for s in new if s], steps + [(j, expr, cj)])
        used = sorted({i for t in terms for m in t for i, e in enumerate(m) if e})
        j = used[0]
        for v in values:
            expr = {zero: v} if v else {}
            new = [_substitute(s, j, expr, 1) for s in terms]
            res = solve([s for s in new if s], steps + [(j, expr, 1)])
            if res is not None:
                return res
        return None

    steps = solve([_to_integer(f) for f in F], [])
    if steps is None:
        return None
    point = [Fraction(0)] * nvars
    for j, expr, den in reversed(steps):
        val = Fraction(0)
        for m, c in expr.items():
            term = Fraction(c)
            for i, e in enumerate(m):
                if e:
                    term *= point[i] ** e
            val += term
        point[j] = val / den
    point = tuple(point)
    if any(f.evaluate(point) != 0 for f in F):
        return None
    return point


# --------------------------------------------------------------------------
# Text input


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse ``"3/2*x^2*y - y + 1"`` over the given variable names.

    Supports + - * ^ (or **), parentheses, integers and fractions ``p/q``.
    """
    import re

    tokens = re.findall(r"\d+|[A-Za-z_]\w*|\*\*|[-+*/^()]|\S", text)
    index = {name: i for i, name in enumerate(names)}
    nv = len(names)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'a token'} at token {pos} in {text!r}")
        pos += 1
        return tok

    def atom():
        tok = peek()
        if tok == "(":
            take("(")
            v = expr()
            take(")")
            return v
        if tok is not None and tok.isdigit():
            take()
            num = Fraction(int(tok))
            if peek() == "/" and pos + 1 < len(tokens) and tokens[pos + 1].isdigit():
                take("/")
                num /= int(take())
            return Polynomial.constant(num, nv)
        if tok in index:
            take()
            return Polynomial.variable(index[tok], nv)
        raise ValueError(f"unexpected {tok!r} in {text!r}")

    def power():
        base = atom()
        if peek() in ("^", "**"):
            take()
            e = take()
            if not e.isdigit():
                raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
            base = base ** int(e)
        return base

    def unary():
        if peek() == "-":
            take()
            return -unary()
        if peek() == "+":
            take()
        return power()

    def term():
        v = unary()
        while peek() == "*":
            take()
            v = v * unary()
        return v

    def expr():
        v = term()
        while peek() in ("+", "-"):
            op = take()
            v = v + term() if op == "+" else v - term()
        return v

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input {tokens[pos]!r} in {text!r}")
    return result
