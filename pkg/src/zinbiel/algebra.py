"""Zinbiel algebras given by structure constants.

An :class:`Algebra` stores the dense tensor ``c[i][j][k]`` with
``[e_i, e_j] = sum_k c[i][j][k] e_k``.  Indices are 0-based internally;
everything user-facing (``Algebra.e``, JSON, printed output) is 1-based.

Vectors are plain tuples of scalars.  A :class:`Subspace` always holds the
reduced row echelon form of its span, so equality of subspaces is equality of
their bases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import QQ, field_from_json

Vector = tuple


class NotZinbielError(ValueError):
    """Invariant computations refuse algebras failing the Zinbiel identity."""


class NotSupportedError(ValueError):
    pass


# --------------------------------------------------------------------------
# Exact linear algebra over any field whose elements support + - * /


def rref(rows: Iterable[Sequence], ncols: int, zero=QQ.zero) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(matrix: Sequence[Sequence], ncols: int, field=QQ) -> list[list]:
    """Basis of {x : M x = 0}, one vector per free column, in RREF-friendly order."""
    red, pivots = rref(matrix, ncols, field.zero)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of F^n stored as its canonical RREF basis."""

    n: int
    basis: tuple
    pivots: tuple
    field: object = QQ

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int, field=QQ) -> Subspace:
        vecs = [tuple(field(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in a space of dimension {n}")
        rows, piv = rref(vecs, n, field.zero)
        return cls(n, tuple(tuple(r) for r in rows), tuple(piv), field)

    @classmethod
    def zero_space(cls, n: int, field=QQ) -> Subspace:
        return cls(n, (), (), field)

    @classmethod
    def whole(cls, n: int, field=QQ) -> Subspace:
        return cls.span(unit_vectors(n, field), n, field)

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int, field=QQ) -> Subspace:
        """Span of e_i for the given 1-based indices."""
        units = unit_vectors(n, field)
        return cls.span([units[i - 1] for i in indices], n, field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of v after clearing every pivot coordinate."""
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: Subspace) -> bool:
        return all(other.contains(r) for r in self.basis)

    def __le__(self, other: Subspace) -> bool:
        return self.issubspace(other)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.basis + other.basis, self.n, self.field)

    def to_lists(self) -> list[list]:
        return [[self.field.format(x) for x in row] for row in self.basis]

    def __str__(self):
        if not self.basis:
            return "0"
        return "span{" + ", ".join(format_vector(r) for r in self.basis) + "}"


def unit_vectors(n: int, field=QQ) -> list[tuple]:
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


def format_vector(v: Sequence) -> str:
    """Render a vector as a combination of e_1..e_n, e.g. ``e5-e6``."""
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        name = f"e{i + 1}"
        if c == 1:
            term = name
        elif c == -1:
            term = "-" + name
        else:
            term = f"{c}*{name}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


# --------------------------------------------------------------------------
# Algebras


@dataclass(frozen=True)
class ZinbielViolation:
    i: int
    j: int
    k: int
    lhs: tuple
    rhs: tuple

    def __str__(self):
        return (f"[[e{self.i},e{self.j}],e{self.k}] = {format_vector(self.lhs)} but "
                f"[e{self.i},[e{self.j},e{self.k}]] + [e{self.i},[e{self.k},e{self.j}]] = "
                f"{format_vector(self.rhs)}")


@dataclass(frozen=True, eq=False)
class Algebra:
    """Finite-dimensional algebra defined by structure constants.

    ``constants[i][j][k]`` is the e_{k+1} coordinate of ``[e_{i+1}, e_{j+1}]``.
    The Zinbiel identity is checked at construction; a failing algebra can
    still be inspected but invariant computations reject it.
    """

    dim: int
    constants: tuple
    field: object = QQ
    name: str = ""
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        f = self.field
        c = tuple(tuple(tuple(f(x) for x in row_k) for row_k in row_j) for row_j in self.constants)
        if len(c) != n or any(len(r) != n or any(len(v) != n for v in r) for r in c):
            raise ValueError(f"structure tensor must have shape {n}x{n}x{n}")
        object.__setattr__(self, "constants", c)
        sparse = {}
        for i in range(n):
            for j in range(n):
                terms = tuple((k, x) for k, x in enumerate(c[i][j]) if x)
                if terms:
                    sparse[(i, j)] = terms
        object.__setattr__(self, "_sparse", sparse)
        ok, violation = _zinbiel_check(self)
        object.__setattr__(self, "is_zinbiel", ok)
        object.__setattr__(self, "violation", violation)

    # construction helpers -------------------------------------------------

    @classmethod
    def from_products(cls, dim: int, products: dict, field=QQ, name: str = "",
                      params: dict | None = None) -> Algebra:
        """Build from a sparse 1-based table ``{(i, j): {k: coeff}}``."""
        c = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in products.items():
            for k, v in coeffs.items():
                c[i - 1][j - 1][k - 1] = field(v)
        return cls(dim, c, field, name, dict(params or {}))

    @classmethod
    def zero_algebra(cls, dim: int, field=QQ, name: str = "") -> Algebra:
        return cls.from_products(dim, {}, field, name or f"abelian{dim}")

    def products(self) -> dict:
        """Nonzero products as ``{(i, j): {k: coeff}}`` with 1-based indices."""
        return {(i + 1, j + 1): {k + 1: x for k, x in terms}
                for (i, j), terms in sorted(self._sparse.items())}

    def e(self, i: int) -> tuple:
        """The basis vector e_i (1-based)."""
        if not 1 <= i <= self.dim:
            raise IndexError(f"e_{i} is not a basis vector of a {self.dim}-dimensional algebra")
        return unit_vectors(self.dim, self.field)[i - 1]

    def vector(self, coords: Sequence) -> tuple:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.field(x) for x in coords)

    @property
    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def is_abelian_algebra(self) -> bool:
        return not self._sparse

    def require_zinbiel(self) -> None:
        if not self.is_zinbiel:
            raise NotZinbielError(f"{self.name or 'algebra'} violates the Zinbiel identity: {self.violation}")

    def reduce_mod(self, p_or_field) -> Algebra:
        """The same structure constants read in another field (e.g. F_p)."""
        from .field import PrimeField
        target = PrimeField(p_or_field) if isinstance(p_or_field, int) else p_or_field
        c = [[[target(x) for x in row] for row in plane] for plane in self.constants]
        return Algebra(self.dim, c, target, self.name, dict(self.params))

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim}, field={self.field.name})"

    # JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        prods = []
        for (i, j), coeffs in self.products().items():
            prods.append({"i": i, "j": j,
                          "coeffs": {str(k): self.field.format(v) for k, v in coeffs.items()}})
        return {"name": self.name, "dim": self.dim, "field": self.field.to_json(), "products": prods}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, obj: dict) -> Algebra:
        try:
            n = int(obj["dim"])
            fld = field_from_json(obj.get("field", "Q"))
            table = {}
            for entry in obj.get("products", []):
                i, j = int(entry["i"]), int(entry["j"])
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"product index ({i},{j}) out of range 1..{n}")
                coeffs = {}
                for k, v in entry["coeffs"].items():
                    k = int(k)
                    if not 1 <= k <= n:
                        raise ValueError(f"coefficient index {k} out of range 1..{n}")
                    coeffs[k] = fld.parse(v)
                if (i, j) in table:
                    raise ValueError(f"product ({i},{j}) listed twice")
                table[(i, j)] = coeffs
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed algebra JSON: {exc!r}") from exc
        return cls.from_products(n, table, fld, obj.get("name", ""))

    @classmethod
    def loads(cls, text: str) -> Algebra:
        return cls.from_json(json.loads(text))


def product(A: Algebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear product [x, y]."""
    n = A.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"vectors must have length {n}")
    z = [A.field.zero] * n
    for (i, j), terms in A._sparse.items():
        xi = x[i]
        if not xi:
            continue
        yj = y[j]
        if not yj:
            continue
        s = xi * yj
        for k, c in terms:
            z[k] = z[k] + s * c
    return tuple(z)


def _zinbiel_check(A: Algebra):
    n = A.dim
    units = unit_vectors(n, A.field)
    prod = [[product(A, units[i], units[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = product(A, prod[i][j], units[k])
                a = product(A, units[i], prod[j][k])
                b = product(A, units[i], prod[k][j])
                rhs = tuple(u + v for u, v in zip(a, b))
                if lhs != rhs:
                    return False, ZinbielViolation(i + 1, j + 1, k + 1, lhs, rhs)
    return True, None


def check_zinbiel(A: Algebra) -> tuple[bool, ZinbielViolation | None]:
    """Verify [[x,y],z] = [x,[y,z]] + [x,[z,y]] on all basis triples."""
    return A.is_zinbiel, A.violation


# --------------------------------------------------------------------------
# Subspaces of an algebra


def subspace_from_vectors(A: Algebra, vectors: Iterable[Sequence]) -> Subspace:
    return Subspace.span(vectors, A.dim, A.field)


def whole_space(A: Algebra) -> Subspace:
    return Subspace.whole(A.dim, A.field)


def zero_subspace(A: Algebra) -> Subspace:
    return Subspace.zero_space(A.dim, A.field)


def subspace_product(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    """span{[u, v]} over basis vectors of U and V."""
    return subspace_from_vectors(A, [product(A, u, v) for u in U.basis for v in V.basis])


def is_abelian(A: Algebra, U: Subspace) -> bool:
    return all(not any(product(A, u, v)) for u in U.basis for v in U.basis)


def is_subalgebra(A: Algebra, U: Subspace) -> bool:
    return all(U.contains(product(A, u, v)) for u in U.basis for v in U.basis)


def is_ideal(A: Algebra, U: Subspace) -> bool:
    """Two-sided ideal: [Z, U] and [U, Z] both lie in U."""
    units = unit_vectors(A.dim, A.field)
    for u in U.basis:
        for e in units:
            if not U.contains(product(A, e, u)) or not U.contains(product(A, u, e)):
                return False
    return True


def center(A: Algebra) -> Subspace:
    """Cen(Z) = {x : [x, y] = [y, x] = 0 for all y}."""
    n = A.dim
    c = A.constants
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([c[i][j][k] for i in range(n)])  # [x, e_j]
            rows.append([c[j][i][k] for i in range(n)])  # [e_j, x]
    return subspace_from_vectors(A, nullspace(rows, n, A.field))


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    stabilized: bool
    index: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    def term(self, k: int) -> Subspace:
        """Z^k (or Z^(k)) with 1-based k; past the end the series is constant."""
        return self.terms[min(k, len(self.terms)) - 1]


def _series(A: Algebra, kind: str) -> SeriesReport:
    A.require_zinbiel()
    Z = whole_space(A)
    terms = [Z]
    while True:
        prev = terms[-1]
        nxt = subspace_product(A, Z, prev) if kind == "lower-central" else subspace_product(A, prev, prev)
        terms.append(nxt)
        if nxt == prev:
            break
    index = None
    if terms[-1].dim == 0:
        index = next(k for k, t in enumerate(terms, start=1) if t.dim == 0)
    return SeriesReport(kind, tuple(terms), True, index)


def lower_central_series(A: Algebra) -> SeriesReport:
    """Z^1 = Z, Z^{k+1} = [Z, Z^k]; ``index`` is the least m with Z^m = 0."""
    return _series(A, "lower-central")


def derived_series(A: Algebra) -> SeriesReport:
    """Z^(1) = Z, Z^(k+1) = [Z^(k), Z^(k)]."""
    return _series(A, "derived")


def is_nilpotent(A: Algebra) -> bool:
    return lower_central_series(A).index is not None


def nilpotency_index(A: Algebra) -> int | None:
    return lower_central_series(A).index


# --------------------------------------------------------------------------
# Quotients and flags


@dataclass(frozen=True)
class Quotient:
    algebra: Algebra
    ideal: Subspace
    complement: tuple  # 0-based coordinates spanning the complement

    def project(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.complement)

    def lift(self, w: Sequence) -> tuple:
        n = self.ideal.n
        f = self.algebra.field
        v = [f.zero] * n
        for c, x in zip(self.complement, w):
            v[c] = x
        return tuple(v)


def quotient(A: Algebra, I: Subspace) -> Quotient:
    """Z/I on the standard coordinates outside the pivot set of I."""
    if not is_ideal(A, I):
        raise ValueError("quotient requires a two-sided ideal")
    n = A.dim
    comp = tuple(c for c in range(n) if c not in I.pivots)
    m = len(comp)
    units = unit_vectors(n, A.field)
    consts = [[[A.field.zero] * m for _ in range(m)] for _ in range(m)]
    stub = Quotient(A, I, comp)  # only used for projection
    for a, ca in enumerate(comp):
        for b, cb in enumerate(comp):
            consts[a][b] = list(stub.project(product(A, units[ca], units[cb])))
    Q = Algebra(m, consts, A.field, f"{A.name}/I" if A.name else "")
    return Quotient(Q, I, comp)


def is_supersolvable(A: Algebra) -> tuple[bool, list[Subspace]]:
    """Full flag of ideals built from central elements of successive quotients.

    Only nilpotent algebras are supported.
    """
    A.require_zinbiel()
    if not is_nilpotent(A):
        raise NotSupportedError("supersolvability is only implemented for nilpotent algebras")
    n = A.dim
    flag = [zero_subspace(A)]
    current = flag[0]
    while current.dim < n:
        if current.dim == 0:
            cen = center(A)
            pick = cen.basis[-1]
        else:
            q = quotient(A, current)
            cen = center(q.algebra)
            if cen.dim == 0:
                return False, flag
            pick = q.lift(cen.basis[-1])
        current = current + subspace_from_vectors(A, [pick])
        if not is_ideal(A, current):
            return False, flag
        flag.append(current)
    return True, flag
