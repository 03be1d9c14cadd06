"""Exhaustive subspace searches over finite fields.

Subspaces are parametrised by echelon patterns (pivot columns) and the free
entries of their RREF basis.  Plain enumeration (``enumerate_subspaces_fp``)
walks every pattern and assignment.  The abelian search is smarter: it fills
the RREF rows from the bottom up, and because ``[x, y] = 0`` is linear in x
once y is fixed, each new row ranges over the solutions of a linear system
before the single quadratic condition ``[x, x] = 0`` is tested.

Every maximal abelian subalgebra (and every maximal abelian ideal) contains
the centre, because adding central elements keeps a subspace abelian and an
ideal an ideal.  Searches for the maximal dimension therefore only look at
subspaces containing the centre of the reduced algebra, which is exact over
any field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .algebra import Algebra, Subspace, center
from .field import FieldTables, PrimeField, QuadraticExtension

DEFAULT_CAP = 10 ** 7


class CapExceededError(RuntimeError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} subspaces exceed the enumeration cap {cap}")
        self.count = count
        self.cap = cap


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of F_q^n (product formula)."""
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def echelon_patterns(n: int, d: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), d))


def free_positions(pivots: Sequence[int], n: int, columns: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """(row, column) slots of an RREF basis that carry free entries."""
    cols = range(n) if columns is None else columns
    piv = set(pivots)
    return [(r, c) for r, p in enumerate(pivots) for c in cols if c > p and c not in piv]


def iter_subspace_blocks(n: int, d: int, q: int) -> Iterator[tuple[tuple, np.ndarray]]:
    """Yield (pivots, array of shape (N, d, n)) with every RREF matrix of that pattern.

    Entries are field codes ``0..q-1``.
    """
    for pivots in echelon_patterns(n, d):
        slots = free_positions(pivots, n)
        N = q ** len(slots)
        block = np.zeros((N, d, n), dtype=np.int16)
        for r, p in enumerate(pivots):
            block[:, r, p] = 1
        if slots:
            grid = np.indices((q,) * len(slots)).reshape(len(slots), -1).T
            rows = [s[0] for s in slots]
            cols = [s[1] for s in slots]
            block[:, rows, cols] = grid
        yield pivots, block


def count_subspaces_fp(n: int, d: int, p: int) -> int:
    """Count d-dimensional subspaces of F_p^n by walking the enumeration."""
    return sum(block.shape[0] for _, block in iter_subspace_blocks(n, d, p))


def enumerate_subspaces_fp(n: int, d: int, p: int, cap: int = DEFAULT_CAP) -> Iterator[Subspace]:
    """Every d-dimensional subspace of F_p^n exactly once, as a Subspace over F_p."""
    total = gaussian_binomial(n, d, p)
    if total > cap:
        raise CapExceededError(total, cap)
    F = PrimeField(p)
    for pivots, block in iter_subspace_blocks(n, d, p):
        for mat in block:
            rows = tuple(tuple(F(int(x)) for x in row) for row in mat)
            yield Subspace(n, rows, pivots, F)


# --------------------------------------------------------------------------
# Code-level linear algebra


def _rref_codes(rows: list[list[int]], ncols: int, T: FieldTables) -> tuple[list[list[int]], list[int]]:
    add, mul, neg, inv = T.add, T.mul, T.neg, T.inv
    m = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            li = inv[lead]
            m[r] = [mul[li][x] for x in m[r]]
        row_r = m[r]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f:
                nf = neg[f]
                mf = mul[nf]
                m[i] = [add[a][mf[b]] for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _solve_affine(eqs: list[list[int]], rhs: list[int], nvars: int, T: FieldTables):
    """Solutions of M t = rhs as (particular, kernel basis), or None if inconsistent."""
    if nvars == 0:
        return ([], []) if not any(rhs) else None
    aug = [row + [b] for row, b in zip(eqs, rhs)]
    red, pivots = _rref_codes(aug, nvars + 1, T)
    if nvars in pivots:
        return None
    part = [0] * nvars
    for row, pc in zip(red, pivots):
        part[pc] = row[nvars]
    free = [c for c in range(nvars) if c not in pivots]
    kernel = []
    for f in free:
        v = [0] * nvars
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = T.neg[row[f]]
        kernel.append(v)
    return part, kernel


class CodedAlgebra:
    """Structure constants of an algebra re-encoded over a finite field."""

    def __init__(self, A: Algebra, T: FieldTables):
        self.n = A.dim
        self.T = T
        self.sparse = {}
        for (i, j), terms in A._sparse.items():
            coded = tuple((k, T.code(c)) for k, c in terms)
            coded = tuple((k, c) for k, c in coded if c)
            if coded:
                self.sparse[(i, j)] = coded
        self.source = A

    def mult(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        add, mul = self.T.add, self.T.mul
        z = [0] * self.n
        for (i, j), terms in self.sparse.items():
            xi = x[i]
            if not xi:
                continue
            yj = y[j]
            if not yj:
                continue
            s = mul[xi][yj]
            ms = mul[s]
            for k, c in terms:
                z[k] = add[z[k]][ms[c]]
        return z

    def left_matrix(self, y: Sequence[int]) -> list[list[int]]:
        """Column i is [e_i, y]; returned as rows indexed by output coordinate."""
        n = self.n
        cols = [self.mult(_unit(i, n), y) for i in range(n)]
        return [[cols[i][k] for i in range(n)] for k in range(n)]

    def right_matrix(self, y: Sequence[int]) -> list[list[int]]:
        """Column i is [y, e_i]."""
        n = self.n
        cols = [self.mult(y, _unit(i, n)) for i in range(n)]
        return [[cols[i][k] for i in range(n)] for k in range(n)]


def _unit(i: int, n: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def _reduce_codes(v: Sequence[int], rows: list[list[int]], pivots: list[int], T: FieldTables) -> list[int]:
    v = list(v)
    add, mul, neg = T.add, T.mul, T.neg
    for row, pc in zip(rows, pivots):
        c = v[pc]
        if c:
            mc = mul[neg[c]]
            v = [add[a][mc[b]] for a, b in zip(v, row)]
    return v


def _is_ideal_codes(CA: CodedAlgebra, rows: list[list[int]], pivots: list[int]) -> bool:
    n, T = CA.n, CA.T
    for v in rows:
        for i in range(n):
            e = _unit(i, n)
            if any(_reduce_codes(CA.mult(e, v), rows, pivots, T)):
                return False
            if any(_reduce_codes(CA.mult(v, e), rows, pivots, T)):
                return False
    return True


# --------------------------------------------------------------------------
# Abelian search


@dataclass
class SearchStats:
    patterns: int = 0
    nodes: int = 0
    candidates: int = 0


def coded_center(A: Algebra, T: FieldTables) -> tuple[list[list[int]], list[int]]:
    Ared = A.reduce_mod(T.field)
    cen = center(Ared)
    rows = [[T.code(x) for x in r] for r in cen.basis]
    return rows, list(cen.pivots)


def _ideal_closure(CA: CodedAlgebra, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """RREF of the smallest ideal containing the span of rows."""
    n, T = CA.n, CA.T
    red, piv = _rref_codes(rows, n, T)
    queue = list(red)
    while queue:
        v = queue.pop()
        for i in range(n):
            e = _unit(i, n)
            for w in (CA.mult(e, v), CA.mult(v, e)):
                r = _reduce_codes(w, red, piv, T)
                if any(r):
                    red, piv = _rref_codes(red + [r], n, T)
                    queue.append(r)
    return red, piv


def _all_products_vanish(CA: CodedAlgebra, rows: list[list[int]]) -> bool:
    return not any(any(CA.mult(u, v)) for u in rows for v in rows)


def abelian_subspaces(A: Algebra, d: int, T: FieldTables, require_ideal: bool = False,
                      contain: tuple[list[list[int]], list[int]] | None = None,
                      first_only: bool = False, stats: SearchStats | None = None) -> list[tuple]:
    """All d-dimensional abelian subspaces (ideals) containing ``contain``.

    ``contain`` is an RREF (rows, pivots) over the field codes whose span must
    be central; by default the centre of A over this field.  Results are
    canonical RREF matrices (tuples of code tuples), in a deterministic order.

    Two prunings keep the backtracking small: every row still to be placed
    must keep a consistent linear system (forward checking), and in ideal
    mode the ideal generated by the rows placed so far must stay abelian,
    fit in d dimensions and have its pivots inside the pattern.
    """
    CA = CodedAlgebra(A, T)
    n = A.dim
    stats = stats if stats is not None else SearchStats()
    if contain is None:
        contain = coded_center(A, T)
    c_rows, c_piv = contain
    c = len(c_rows)
    if d < c or d > n:
        return []
    qcols = [col for col in range(n) if col not in c_piv]
    k = d - c
    found: list[tuple] = []
    mul, add = T.mul, T.add
    elements = range(T.q)

    for pattern in itertools.combinations(qcols, k):
        stats.patterns += 1
        piv_set = set(pattern)
        allowed_pivots = piv_set | set(c_piv)
        free_cols = [[col for col in qcols if col > p and col not in piv_set] for p in pattern]

        def system(r: int, mats: list[tuple]):
            # [x, y] = 0 and [y, x] = 0 for every placed y, as an affine system in row r's free entries
            p = pattern[r]
            fcols = free_cols[r]
            eqs: list[list[int]] = []
            rhs: list[int] = []
            for Lm, Rm in mats:
                for M in (Lm, Rm):
                    for row in M:
                        eqs.append([row[f] for f in fcols])
                        rhs.append(T.neg[row[p]])
            return _solve_affine(eqs, rhs, len(fcols), T)

        def place(r: int, chosen: list[list[int]], mats: list[tuple]) -> bool:
            # fill rows r, r-1, ..., 0; chosen holds rows r+1.. (the contained rows come on top)
            stats.nodes += 1
            if r < 0:
                stats.candidates += 1
                red, piv = _rref_codes([list(x) for x in c_rows] + chosen, n, T)
                if require_ideal and not _is_ideal_codes(CA, red, piv):
                    return False
                found.append(tuple(tuple(x) for x in red))
                return first_only
            sol = system(r, mats)
            if sol is None:
                return False
            part, kernel = sol
            p = pattern[r]
            fcols = free_cols[r]
            for coeffs in itertools.product(elements, repeat=len(kernel)):
                t = list(part)
                for a, kv in zip(coeffs, kernel):
                    if a:
                        ma = mul[a]
                        t = [add[x][ma[y]] for x, y in zip(t, kv)]
                x = _unit(p, n)
                for f, val in zip(fcols, t):
                    x[f] = val
                if any(CA.mult(x, x)):
                    continue
                # left_matrix(x) encodes [., x] and right_matrix(x) encodes [x, .]
                new_mats = mats + [(CA.right_matrix(x), CA.left_matrix(x))]
                if any(system(q, new_mats) is None for q in range(r)):
                    continue
                if require_ideal:
                    clo, cpiv = _ideal_closure(CA, [list(v) for v in c_rows] + [x] + chosen)
                    if len(clo) > d or not set(cpiv) <= allowed_pivots \
                            or not _all_products_vanish(CA, clo):
                        continue
                if place(r - 1, [x] + chosen, new_mats):
                    return True
            return False

        init = [(CA.right_matrix(v), CA.left_matrix(v)) for v in c_rows]
        if place(k - 1, [], init) and first_only:
            break
    found.sort()
    return found


def max_abelian_dim(A: Algebra, T: FieldTables, require_ideal: bool = False,
                    collect: bool = False, start: int | None = None) -> tuple[int, list[tuple]]:
    """Largest d with a d-dimensional abelian subalgebra (ideal) over the field.

    Descends from ``start`` (default n); with ``collect`` every maximal witness
    is returned, otherwise just the first one found.
    """
    contain = coded_center(A, T)
    d = A.dim if start is None else start
    while d >= len(contain[0]):
        found = abelian_subspaces(A, d, T, require_ideal, contain, first_only=not collect)
        if found:
            return d, found
        d -= 1
    raise AssertionError("the centre itself is always an abelian ideal")


def tables_for(spec) -> FieldTables:
    """FieldTables for an int p (F_p) or a ('p2', p) tag (F_{p^2})."""
    if isinstance(spec, FieldTables):
        return spec
    if isinstance(spec, tuple) and spec[0] == "p2":
        return _cached_tables(("p2", spec[1]))
    return _cached_tables(("p", int(spec)))


_TABLE_CACHE: dict = {}


def _cached_tables(key) -> FieldTables:
    if key not in _TABLE_CACHE:
        kind, p = key
        _TABLE_CACHE[key] = FieldTables(QuadraticExtension(p) if kind == "p2" else PrimeField(p))
    return _TABLE_CACHE[key]


def codes_to_subspace(mat: Sequence[Sequence[int]], T: FieldTables) -> Subspace:
    n = len(mat[0]) if mat else 0
    rows = [tuple(T.decode(c) for c in row) for row in mat]
    return Subspace.span(rows, n, T.field)


def lift_codes(mat: Sequence[Sequence[int]], T: FieldTables, n: int) -> Subspace | None:
    """Symmetric-range integer lift of a prime-field RREF matrix, as a rational Subspace."""
    if not T.is_prime_field:
        return None
    rows = [[T.lift(c) for c in row] for row in mat]
    sub = Subspace.span(rows, n)
    return sub if sub.dim == len(mat) else None


def good_prime(A: Algebra, p: int) -> bool:
    """p may be used for A: all structure constants reduce mod p without
    denominators and no nonzero constant vanishes."""
    for terms in A._sparse.values():
        for _, c in terms:
            c = Fraction(c)
            if c.denominator % p == 0 or c.numerator % p == 0:
                return False
    return True


def reducible_mod(A: Algebra, p: int) -> bool:
    return all(Fraction(c).denominator % p for terms in A._sparse.values() for _, c in terms)
