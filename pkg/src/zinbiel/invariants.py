"""The invariants alpha (abelian subalgebras) and beta (abelian ideals) with certificates.

Both invariants are settled per dimension d by one question: is there a
d-dimensional abelian subspace (ideal) at all?  Three kinds of evidence are
combined.

* Exact witnesses over Q: coordinate subspaces, small-integer lifts of
  finite-field witnesses, or rational points found by the Groebner solver.
* Groebner certificates.  Each echelon pattern gives a polynomial system in
  the free RREF entries.  A basis {1} for every pattern proves that no
  subspace exists over any extension of Q, hence over C.  A basis other than
  {1} for some pattern proves one exists over C even when it has no rational
  point.
* Exhaustive scans over F_p and F_{p^2}.  They are fast but only
  probabilistic as statements about C.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (Algebra, NotSupportedError, Subspace, center, is_abelian, is_ideal,
                      is_nilpotent, is_subalgebra, is_supersolvable, unit_vectors)
from .field import DEFAULT_PRIMES, QQ
from .groebner import Budget, Polynomial, buchberger, GroebnerBudgetError, is_infeasible
from .search import (FieldTables, SearchStats, _is_ideal_codes, _rref_codes, _reduce_codes,
                     CodedAlgebra, abelian_subspaces, codes_to_subspace, coded_center,
                     good_prime, iter_subspace_blocks, lift_codes, max_abelian_dim,
                     reducible_mod, tables_for)

GROEBNER_MAX_DIM = 6
AUTO_GROEBNER_DIM = 5
EXTRA_PRIMES = (11, 13, 17, 19, 23, 29, 31)

GB_INFEASIBLE = "groebner-infeasible"
GB_FEASIBLE = "groebner-feasible"
EXHAUSTIVE_FP = "exhaustive-Fp"
RATIONAL = "rational-witness"
FINITE_ONLY = "finite-field-witness"
NONE = "none"


class InconsistentEvidenceError(RuntimeError):
    """Exact and finite-field evidence contradict each other (a bug or a bad prime)."""


class BadPrimeError(ValueError):
    pass


def _mode(require_ideal: bool) -> str:
    return "ideal" if require_ideal else "subalgebra"


# --------------------------------------------------------------------------
# Pattern systems


@dataclass
class PatternSystem:
    """Polynomial conditions on the free entries of one echelon pattern.

    ``pivots`` are 1-based.  Rows of ``contain`` (if any) are prepended to the
    basis and stay fixed; they must be central.
    """

    pivots: tuple
    variables: tuple
    rows: list
    abelian: list
    ideal: list
    contain: Subspace | None = None

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def polys(self, require_ideal: bool) -> list[Polynomial]:
        return self.abelian + (self.ideal if require_ideal else [])

    def subspace_at(self, point: Sequence) -> Subspace:
        rows = [[c.evaluate(point) for c in row] for row in self.rows]
        n = len(rows[0]) if rows else (self.contain.n if self.contain else 0)
        extra = list(self.contain.basis) if self.contain else []
        return Subspace.span(extra + rows, n)


def _poly_product(A: Algebra, x: Sequence, y: Sequence, nv: int) -> list[Polynomial]:
    zero = Polynomial({}, nv)
    z = [zero] * A.dim
    for (i, j), terms in A._sparse.items():
        xi, yj = x[i], y[j]
        if xi.is_zero() or yj.is_zero():
            continue
        s = xi * yj
        for k, c in terms:
            z[k] = z[k] + s * c
    return z


def _residual(w: Sequence[Polynomial], rows: list, pivots: Sequence[int],
              contain: Subspace | None) -> list[Polynomial]:
    w = list(w)
    if contain is not None:
        for crow, pc in zip(contain.basis, contain.pivots):
            c = w[pc]
            if not c.is_zero():
                w = [a - c * b for a, b in zip(w, crow)]
    for row, pc in zip(rows, pivots):
        c = w[pc]
        if not c.is_zero():
            w = [a - c * b for a, b in zip(w, row)]
    return w


def _dedupe(polys: Iterable[Polynomial]) -> list[Polynomial]:
    seen = set()
    out = []
    for p in polys:
        if p.is_zero():
            continue
        key = p.monic()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def pattern_system(A: Algebra, pivots: Sequence[int], contain: Subspace | None = None) -> PatternSystem:
    """Abelian and ideal conditions for subspaces with the given 1-based pivots."""
    n = A.dim
    piv0 = [p - 1 for p in pivots]
    cpiv = set(contain.pivots) if contain is not None else set()
    if cpiv & set(piv0):
        raise ValueError("pattern pivots must avoid the pivots of the contained subspace")
    slots = [(r, c) for r, p in enumerate(piv0) for c in range(n)
             if c > p and c not in piv0 and c not in cpiv]
    nv = len(slots)
    zero = Polynomial({}, nv)
    one = Polynomial.constant(1, nv)
    rows = []
    for r, p in enumerate(piv0):
        row = [zero] * n
        row[p] = one
        rows.append(row)
    for v, (r, c) in enumerate(slots):
        rows[r][c] = Polynomial.variable(v, nv)

    abelian = []
    for u in rows:
        for w in rows:
            abelian.extend(_poly_product(A, u, w, nv))
    units = [[one if i == j else zero for j in range(n)] for i in range(n)]
    ideal = []
    for u in rows:
        for e in units:
            ideal.extend(_residual(_poly_product(A, e, u, nv), rows, piv0, contain))
            ideal.extend(_residual(_poly_product(A, u, e, nv), rows, piv0, contain))
    variables = tuple((r + 1, c + 1) for r, c in slots)
    return PatternSystem(tuple(pivots), variables, rows, _dedupe(abelian), _dedupe(ideal), contain)


def pattern_systems(A: Algebra, d: int, contain: Subspace | None = None) -> list[PatternSystem]:
    """One system per echelon pattern of d-dimensional subspaces (containing ``contain``)."""
    c = contain.dim if contain is not None else 0
    if d < c or d > A.dim:
        return []
    cols = [i + 1 for i in range(A.dim) if contain is None or i not in contain.pivots]
    return [pattern_system(A, piv, contain) for piv in itertools.combinations(cols, d - c)]


# --------------------------------------------------------------------------
# Certificates


@dataclass
class PatternOutcome:
    pivots: tuple
    nvars: int
    status: str  # "infeasible" | "feasible" | "unknown"
    unlucky_primes: frozenset = frozenset()
    point: tuple | None = None


@dataclass
class DimensionCertificate:
    """What is known about subspaces of one dimension in one mode."""

    d: int
    mode: str
    method: str
    status: str  # "none-exist" | "exists" | "unknown"
    patterns: int = 0
    primes: tuple = ()
    outcomes: list = field(default_factory=list)
    witness: Subspace | None = None
    message: str = ""

    @property
    def groebner_grade(self) -> bool:
        return self.method in (GB_INFEASIBLE, GB_FEASIBLE)

    def unlucky_primes(self) -> frozenset:
        out: frozenset = frozenset()
        for o in self.outcomes:
            out |= o.unlucky_primes
        return out

    def to_json(self) -> dict:
        out = {"d": self.d, "mode": self.mode, "method": self.method, "status": self.status,
               "patterns": self.patterns}
        if self.primes:
            out["primes"] = [_field_label(p) for p in self.primes]
        if self.witness is not None:
            out["witness"] = self.witness.to_lists()
        if self.message:
            out["message"] = self.message
        return out


def certify_upper_bound(A: Algebra, d: int, require_ideal: bool = False,
                        budget: Budget | None = None, contain: Subspace | None = None,
                        find_point: bool = True, max_dim: int = GROEBNER_MAX_DIM) -> DimensionCertificate:
    """Decide over C whether a d-dimensional abelian subspace (ideal) exists.

    Every echelon pattern is tested with a Groebner basis.  ``none-exist``
    means every pattern gave {1}; ``exists`` means some pattern did not, and a
    rational witness is attached when one was found.
    """
    A.require_zinbiel()
    if A.dim > max_dim:
        raise NotSupportedError(f"Groebner certificates are limited to n <= {max_dim}")
    systems = pattern_systems(A, d, contain)
    mode = _mode(require_ideal)
    cert = DimensionCertificate(d, mode, GB_INFEASIBLE, "none-exist", len(systems))
    feasible_seen = False
    for ps in systems:
        polys = ps.polys(require_ideal)
        if not polys:
            point = (Fraction(0),) * ps.nvars
            cert.outcomes.append(PatternOutcome(ps.pivots, ps.nvars, "feasible", point=point))
            cert.method, cert.status = GB_FEASIBLE, "exists"
            cert.witness = ps.subspace_at(point)
            return cert
        res = is_infeasible(polys, budget, want_point=find_point)
        if res.status == "unknown":
            cert.outcomes.append(PatternOutcome(ps.pivots, ps.nvars, "unknown"))
            if not feasible_seen:
                cert.method, cert.status, cert.message = NONE, "unknown", res.message
            continue
        unlucky = res.basis.unlucky_primes if res.basis is not None else frozenset()
        if res.infeasible:
            cert.outcomes.append(PatternOutcome(ps.pivots, ps.nvars, "infeasible", unlucky))
            continue
        cert.outcomes.append(PatternOutcome(ps.pivots, ps.nvars, "feasible", unlucky, res.point))
        feasible_seen = True
        cert.method, cert.status, cert.message = GB_FEASIBLE, "exists", ""
        if res.point is not None:
            W = ps.subspace_at(res.point)
            if W.dim == d and is_abelian(A, W) and (not require_ideal or is_ideal(A, W)):
                cert.witness = W
                return cert
        if not find_point:
            return cert
    return cert


def _coordinate_witness(A: Algebra, d: int, require_ideal: bool) -> Subspace | None:
    for idx in itertools.combinations(range(1, A.dim + 1), d):
        W = Subspace.coordinate(idx, A.dim)
        if is_abelian(A, W) and (not require_ideal or is_ideal(A, W)):
            return W
    return None


def _central_witness(A: Algebra, d: int) -> Subspace | None:
    cen = center(A)
    if d <= cen.dim:
        return Subspace.span(cen.basis[:d], A.dim)
    return None


def _lift_candidates(T: FieldTables, mat, bound: int, limit: int = 4096):
    p = T.field.p
    per_entry = []
    for row in mat:
        for code in row:
            r = int(code) % p
            per_entry.append([v for v in range(-bound, bound + 1) if v % p == r])
    total = 1
    for opts in per_entry:
        total *= len(opts)
        if total > limit or total == 0:
            return
    width = len(mat[0])
    for combo in itertools.product(*per_entry):
        yield [list(combo[i * width:(i + 1) * width]) for i in range(len(mat))]


def _verified(A: Algebra, W: Subspace | None, d: int, require_ideal: bool) -> bool:
    return (W is not None and W.dim == d and is_abelian(A, W)
            and (not require_ideal or is_ideal(A, W)))


def lift_witnesses(A: Algebra, witnesses, T: FieldTables, d: int, require_ideal: bool,
                   bounds: Sequence[int] = (2, 5)) -> Subspace | None:
    """First small-integer lift of a finite-field witness that verifies over Q."""
    if not T.is_prime_field:
        return None
    for bound in bounds:
        for mat in witnesses:
            for cand in _lift_candidates(T, mat, bound):
                W = Subspace.span(cand, A.dim)
                if _verified(A, W, d, require_ideal):
                    return W
    return None


def certify_lower_bound(A: Algebra, d: int, require_ideal: bool = False,
                        primes: Sequence[int] = DEFAULT_PRIMES, budget: Budget | None = None,
                        use_groebner: bool | None = None) -> Subspace | None:
    """An exact d-dimensional abelian subspace (ideal) over Q, or None.

    Strategies in order: subspaces of the centre, coordinate subspaces, lifts
    of finite-field witnesses with entries in -2..2 then -5..5, and rational
    points of the pattern systems.  None does not prove nonexistence.
    """
    A.require_zinbiel()
    if d == 0:
        return Subspace.zero_space(A.dim)
    W = _central_witness(A, d)
    if W is None:
        W = _coordinate_witness(A, d, require_ideal)
    if W is not None:
        return W
    for p in primes:
        if not good_prime(A, p):
            continue
        T = tables_for(p)
        found = abelian_subspaces(A, d, T, require_ideal)
        W = lift_witnesses(A, found, T, d, require_ideal)
        if W is not None:
            return W
    if use_groebner is None:
        use_groebner = A.dim <= GROEBNER_MAX_DIM
    if use_groebner:
        cert = certify_upper_bound(A, d, require_ideal, budget)
        if _verified(A, cert.witness, d, require_ideal):
            return cert.witness
    return None


# --------------------------------------------------------------------------
# Finite-field evidence


def _field_label(spec) -> str:
    if isinstance(spec, tuple):
        return f"F{spec[1]}^2"
    return f"F{spec}"


def max_abelian_dim_fp(A: Algebra, p, require_ideal: bool = False,
                       collect: bool = False) -> tuple[int, list[Subspace]]:
    """Exact maximum over F_p (or F_{p^2} for ``('p2', p)``) with its witnesses."""
    A.require_zinbiel()
    base = p[1] if isinstance(p, tuple) else p
    if not good_prime(A, base):
        raise BadPrimeError(f"p={base} divides a denominator or a structure constant of {A.name or 'A'}")
    T = tables_for(p)
    d, found = max_abelian_dim(A, T, require_ideal, collect=collect)
    return d, [codes_to_subspace(m, T) for m in found]


@dataclass
class FieldEvidence:
    field: str
    alpha: int | None = None
    beta: int | None = None
    skipped: str = ""


def evidence_primes(A: Algebra, primes: Sequence[int], minimum: int = 2) -> list[int]:
    """The good primes among ``primes``, topped up from larger primes until there are ``minimum``."""
    good = [p for p in primes if good_prime(A, p)]
    for p in EXTRA_PRIMES:
        if len(good) >= minimum:
            break
        if p not in good and good_prime(A, p):
            good.append(p)
    return good


# --------------------------------------------------------------------------
# alpha and beta


@dataclass
class IdealEnumeration:
    d: int
    counts: dict
    ideals: list
    status: str  # "resolved" | "unresolved"
    groebner_count: int | None = None
    degenerate_counts: dict = field(default_factory=dict)
    message: str = ""

    @property
    def count(self) -> int | None:
        if self.groebner_count is not None:
            return self.groebner_count
        if self.status == "resolved":
            return len(self.ideals)
        return None

    def to_json(self) -> dict:
        return {"d": self.d, "status": self.status,
                "counts": {_field_label(p): c for p, c in self.counts.items()},
                "degenerate_counts": {_field_label(p): c for p, c in self.degenerate_counts.items()},
                "groebner_count": self.groebner_count,
                "ideals": [W.to_lists() for W in self.ideals], "message": self.message}


@dataclass
class AlphaBetaResult:
    alpha: int
    beta: int
    alpha_witness: Subspace | None
    beta_witness: Subspace | None
    alpha_lower: str
    beta_lower: str
    alpha_upper: DimensionCertificate | None
    beta_upper: list
    evidence: list
    grade: str  # "groebner" | "probabilistic"
    alpha_witness_ff: Subspace | None = None
    beta_witness_ff: Subspace | None = None
    maximal_abelian_ideals: IdealEnumeration | None = None
    name: str = ""

    @property
    def certified(self) -> bool:
        return self.grade == "groebner"

    def upper_certificates(self) -> list:
        return ([self.alpha_upper] if self.alpha_upper else []) + list(self.beta_upper)

    def to_json(self) -> dict:
        out = {
            "algebra": self.name, "alpha": self.alpha, "beta": self.beta, "grade": self.grade,
            "alpha_witness": self.alpha_witness.to_lists() if self.alpha_witness else None,
            "beta_witness": self.beta_witness.to_lists() if self.beta_witness else None,
            "alpha_lower_bound": self.alpha_lower, "beta_lower_bound": self.beta_lower,
            "upper_bound_certificates": [c.to_json() for c in self.upper_certificates()],
            "evidence": [{"field": e.field, "alpha": e.alpha, "beta": e.beta,
                          **({"skipped": e.skipped} if e.skipped else {})} for e in self.evidence],
        }
        if self.alpha_witness_ff is not None and self.alpha_witness is None:
            out["alpha_witness_finite_field"] = self.alpha_witness_ff.to_lists()
        if self.beta_witness_ff is not None and self.beta_witness is None:
            out["beta_witness_finite_field"] = self.beta_witness_ff.to_lists()
        if self.maximal_abelian_ideals is not None:
            out["maximal_abelian_ideals"] = self.maximal_abelian_ideals.to_json()
        return out


def _gather_evidence(A: Algebra, primes: Sequence[int], extension_primes: Sequence[int]):
    evidence = []
    witnesses = {False: [], True: []}  # mode -> [(spec, T, d, mats)]
    specs = list(primes) + [("p2", p) for p in extension_primes]
    for spec in specs:
        base = spec[1] if isinstance(spec, tuple) else spec
        label = _field_label(spec)
        if not good_prime(A, base):
            evidence.append(FieldEvidence(label, skipped="bad prime"))
            continue
        T = tables_for(spec)
        ev = FieldEvidence(label)
        for mode in (False, True):
            d, found = max_abelian_dim(A, T, mode)
            witnesses[mode].append((spec, T, d, found))
            if mode:
                ev.beta = d
            else:
                ev.alpha = d
        evidence.append(ev)
    return evidence, witnesses


def _check_consistency(A: Algebra, W: Subspace, require_ideal: bool, witnesses) -> None:
    """A rational witness reduces to a witness at every good prime coprime to its entries."""
    for spec, T, d, _ in witnesses:
        if isinstance(spec, tuple):
            p = spec[1]
        else:
            p = spec
        if any(Fraction(x).denominator % p == 0 for row in W.basis for x in row):
            continue
        if d < W.dim:
            raise InconsistentEvidenceError(
                f"{A.name}: exact {_mode(require_ideal)} witness of dim {W.dim} but "
                f"{_field_label(spec)} search found maximum {d}")


def _check_agreement(A: Algebra, cert: DimensionCertificate, require_ideal: bool, primes) -> None:
    """Groebner infeasibility that specialises mod p must match an empty F_p scan."""
    if cert.method != GB_INFEASIBLE:
        return
    for p in primes:
        if not reducible_mod(A, p) or p in cert.unlucky_primes():
            continue
        T = tables_for(p)
        hit = abelian_subspaces(A, cert.d, T, require_ideal, contain=([], []), first_only=True)
        if hit:
            raise InconsistentEvidenceError(
                f"{A.name}: Groebner certifies no {cert.d}-dim {_mode(require_ideal)} but F{p} has one")


def _settle(A: Algebra, start: int, require_ideal: bool, ceiling: int, groebner: bool,
            budget: Budget | None, primes, witnesses):
    """Largest d <= ceiling with a d-dim abelian subspace (ideal), with certificates.

    Returns (d, exact witness, lower kind, finite-field witness, upper certificates).
    """
    n = A.dim
    mode_w = witnesses[require_ideal]
    d = min(max(start, 0), ceiling)
    uppers: list[DimensionCertificate] = []
    tried_up: dict = {}

    def exists_cert(k):
        if k not in tried_up:
            tried_up[k] = certify_upper_bound(A, k, require_ideal, budget)
        return tried_up[k]

    while True:
        # lower bound at d
        W = certify_lower_bound(A, d, require_ideal, primes, budget, use_groebner=False)
        lower = RATIONAL if W is not None else None
        ff = None
        if W is None:
            for spec, T, dd, found in mode_w:
                if dd >= d:
                    sub = abelian_subspaces(A, d, T, require_ideal, first_only=True) if dd > d else found
                    if sub:
                        ff = codes_to_subspace(sub[0], T)
                        break
        if groebner:
            if W is None:
                c = exists_cert(d)
                if c.status == "exists":
                    W = c.witness if _verified(A, c.witness, d, require_ideal) else None
                    lower = RATIONAL if W is not None else GB_FEASIBLE
                elif c.status == "none-exist":
                    if d == 0:
                        raise AssertionError("the zero subspace always exists")
                    d -= 1
                    continue
                else:
                    lower = FINITE_ONLY if ff is not None else NONE
        elif W is None:
            lower = FINITE_ONLY if ff is not None else NONE
        # upper bound: nothing in d+1 .. ceiling (only d+1 for subalgebras, which are hereditary)
        if groebner:
            top = d + 1 if not require_ideal else ceiling
            bumped = False
            uppers = []
            for k in range(d + 1, min(top, ceiling) + 1):
                c = exists_cert(k)
                uppers.append(c)
                if c.status == "exists":
                    d = k
                    bumped = True
                    break
            if bumped:
                continue
        else:
            uppers = [DimensionCertificate(k, _mode(require_ideal), EXHAUSTIVE_FP, "none-exist",
                                           primes=tuple(s for s, *_ in mode_w))
                      for k in range(d + 1, min(d + 1 if not require_ideal else ceiling, ceiling) + 1)]
        return d, W, lower, ff, uppers


def alpha_beta(A: Algebra, primes: Sequence[int] = DEFAULT_PRIMES, groebner: bool | None = None,
               budget: Budget | None = None, enumerate_ideals: bool = False,
               extension_primes: Sequence[int] = (2, 3)) -> AlphaBetaResult:
    """alpha(A) and beta(A) over C with witnesses, certificates and per-field evidence.

    With ``groebner`` (default for n <= 5) both bounds are exact over C.
    Without it the values are the largest found by the finite-field scans and
    the upper bounds are graded probabilistic.
    """
    A.require_zinbiel()
    if A.field is not QQ:
        raise ValueError("alpha_beta works over Q; reduce afterwards for finite-field scans")
    n = A.dim
    if groebner is None:
        groebner = n <= AUTO_GROEBNER_DIM
    if groebner and n > GROEBNER_MAX_DIM:
        raise NotSupportedError(f"Groebner certificates are limited to n <= {GROEBNER_MAX_DIM}")
    ev_primes = evidence_primes(A, primes)
    evidence, witnesses = _gather_evidence(A, ev_primes, extension_primes)
    skipped = [FieldEvidence(_field_label(p), skipped="bad prime") for p in primes if p not in ev_primes]
    evidence = skipped + evidence

    start_a = max((d for _, _, d, _ in witnesses[False]), default=n)
    alpha, wa, la, ffa, ua = _settle(A, start_a, False, n, groebner, budget, ev_primes, witnesses)
    start_b = min(max((d for _, _, d, _ in witnesses[True]), default=alpha), alpha)
    beta, wb, lb, ffb, ub = _settle(A, start_b, True, alpha, groebner, budget, ev_primes, witnesses)

    if alpha < beta:
        raise InconsistentEvidenceError("alpha < beta is impossible")
    if wa is not None:
        _check_consistency(A, wa, False, witnesses[False])
    if wb is not None:
        _check_consistency(A, wb, True, witnesses[True])
    if groebner:
        for c in ua:
            _check_agreement(A, c, False, ev_primes)
        for c in ub:
            _check_agreement(A, c, True, ev_primes)

    grade = "groebner" if groebner and all(
        c.groebner_grade for c in ua + ub) and la != NONE and lb != NONE and \
        la != FINITE_ONLY and lb != FINITE_ONLY else "probabilistic"
    result = AlphaBetaResult(alpha, beta, wa, wb, la, lb, ua[0] if ua else None, ub, evidence, grade,
                             ffa, ffb, name=A.name)
    if enumerate_ideals:
        result.maximal_abelian_ideals = enumerate_maximal_abelian_ideals(
            A, beta, primes=ev_primes, groebner=groebner, budget=budget)
    return result


# --------------------------------------------------------------------------
# Maximal abelian ideals


def _groebner_count(A: Algebra, d: int, budget: Budget | None, contain: Subspace | None):
    """Number of complex d-dim abelian ideals containing ``contain``, when every pattern
    is either infeasible or a single reduced point; also the points found."""
    total = 0
    points = []
    for ps in pattern_systems(A, d, contain):
        polys = ps.polys(True)
        if not polys:
            if ps.nvars:
                return None, points
            total += 1
            points.append(ps.subspace_at(()))
            continue
        try:
            G = buchberger(polys, budget)
        except GroebnerBudgetError:
            return None, points
        if G.is_unit:
            continue
        if len(G.polys) == ps.nvars and all(g.degree == 1 for g in G.polys):
            point = [Fraction(0)] * ps.nvars
            for g in G.polys:
                m = g.lm
                j = m.index(1)
                rest = sum((c for mm, c in g.terms.items() if mm != m), Fraction(0))
                point[j] = -rest / g.lc
            total += 1
            points.append(ps.subspace_at(tuple(point)))
            continue
        return None, points
    return total, points


def enumerate_maximal_abelian_ideals(A: Algebra, d: int | None = None,
                                     primes: Sequence[int] = (5, 7), groebner: bool | None = None,
                                     budget: Budget | None = None,
                                     degenerate_primes: Sequence[int] = ()) -> IdealEnumeration:
    """Every abelian ideal of dimension d = beta(A).

    Each good prime gives an exhaustive list.  The exact list is reported when
    the counts agree and every finite-field ideal lifts to a verified ideal
    over Q.  With ``groebner`` the number of complex solutions is certified
    as well (every pattern must be infeasible or a single point).
    Abelian ideals of dimension beta contain the centre, which the searches use.
    """
    A.require_zinbiel()
    n = A.dim
    if d is None:
        d = alpha_beta(A, groebner=groebner, budget=budget).beta
    if groebner is None:
        groebner = n <= AUTO_GROEBNER_DIM
    counts: dict = {}
    lifted: dict = {}
    message = ""
    for p in primes:
        if not good_prime(A, p):
            continue
        T = tables_for(p)
        found = abelian_subspaces(A, d, T, require_ideal=True)
        counts[p] = len(found)
        subs = []
        for mat in found:
            W = lift_witnesses(A, [mat], T, d, True)
            subs.append(W)
        lifted[p] = subs
    degenerate = {}
    for p in degenerate_primes:
        if reducible_mod(A, p) and not good_prime(A, p):
            degenerate[p] = len(abelian_subspaces(A, d, tables_for(p), require_ideal=True))

    gcount = None
    exact: list[Subspace] = []
    if groebner and n <= GROEBNER_MAX_DIM:
        gcount, points = _groebner_count(A, d, budget, center(A))
        if gcount is not None:
            exact = [W for W in points if _verified(A, W, d, True)]
            if len(exact) != gcount:
                message = "some complex ideals are not rational"
    status = "unresolved"
    if counts and len(set(counts.values())) == 1:
        lists = [frozenset(tuple(map(tuple, W.basis)) for W in subs if W is not None)
                 for subs in lifted.values()]
        complete = all(all(W is not None for W in subs) for subs in lifted.values())
        if complete and len(set(lists)) == 1:
            status = "resolved"
            if not exact:
                exact = next(iter(lifted.values()))
        elif not message:
            message = "finite-field ideals did not all lift to Q"
    elif counts:
        message = "counts disagree across primes"
    if gcount is not None and counts and any(c != gcount for c in counts.values()):
        status = "unresolved"
        message = message or "finite-field counts differ from the complex count"
    exact = sorted(exact, key=lambda W: [[Fraction(x) for x in r] for r in W.basis])
    return IdealEnumeration(d, counts, exact, status, gcount, degenerate, message)


# --------------------------------------------------------------------------
# Theorem checks


@dataclass
class TheoremReport:
    theorem: str
    algebra: str
    hypotheses: bool
    conclusion: bool | None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Vacuous reports count as passing."""
        return not self.hypotheses or bool(self.conclusion)

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "algebra": self.algebra, "hypotheses": self.hypotheses,
                "conclusion": self.conclusion, "details": _jsonable(self.details)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Subspace):
        return x.to_lists()
    if isinstance(x, Fraction):
        return str(x)
    return x


def _extend(p: Polynomial, nv: int) -> Polynomial:
    pad = (0,) * (nv - p.nvars)
    return Polynomial({m + pad: c for m, c in p.terms.items()}, nv)


def abelian_implies_ideal(A: Algebra, d: int, budget: Budget | None = None) -> bool | None:
    """Certify over C that every d-dim abelian subalgebra is an ideal.

    For each pattern and each ideal residual r, the system abelian + {y*r - 1}
    must be infeasible (Rabinowitsch).  None when a budget runs out.
    """
    for ps in pattern_systems(A, d):
        nv = ps.nvars + 1
        base = [_extend(f, nv) for f in ps.abelian]
        y = Polynomial.variable(nv - 1, nv)
        for r in ps.ideal:
            res = is_infeasible(base + [y * _extend(r, nv) - 1], budget, want_point=False)
            if res.status == "unknown":
                return None
            if not res.infeasible:
                return False
    return True


def check_theorem_2_1(A: Algebra, primes: Sequence[int] = DEFAULT_PRIMES, groebner: bool | None = None,
                      budget: Budget | None = None, result: AlphaBetaResult | None = None) -> TheoremReport:
    """A codimension-one abelian subalgebra is an ideal (and then beta = n - 1)."""
    A.require_zinbiel()
    n = A.dim
    r = result or alpha_beta(A, primes, groebner, budget)
    if groebner is None:
        groebner = n <= AUTO_GROEBNER_DIM
    details = {"alpha": r.alpha, "beta": r.beta, "n": n}
    if n == 0 or r.alpha != n - 1:
        return TheoremReport("thm2.1", A.name, False, None, details)
    per_field = {}
    ok = True
    for p in primes:
        if not reducible_mod(A, p):
            continue
        T = tables_for(p)
        CA = CodedAlgebra(A, T)
        found = abelian_subspaces(A, n - 1, T, contain=([], []))
        ideals = 0
        for mat in found:
            red, piv = _rref_codes([list(x) for x in mat], n, T)
            if _is_ideal_codes(CA, red, piv):
                ideals += 1
            W = lift_codes(mat, T, n)
            if W is not None and is_abelian(A, W) and not is_ideal(A, W):
                ok = False
        per_field[f"F{p}"] = {"abelian": len(found), "ideals": ideals}
        ok = ok and ideals == len(found)
    details["finite_fields"] = per_field
    if groebner and n <= GROEBNER_MAX_DIM:
        cert = abelian_implies_ideal(A, n - 1, budget)
        details["groebner"] = cert
        ok = ok and cert is not False
    details["corollary_beta"] = r.beta == n - 1
    ok = ok and r.beta == n - 1
    return TheoremReport("thm2.1", A.name, True, ok, details)


def check_theorem_3_1(A: Algebra, primes: Sequence[int] = DEFAULT_PRIMES, groebner: bool | None = None,
                      budget: Budget | None = None, result: AlphaBetaResult | None = None) -> TheoremReport:
    """Supersolvable with alpha = n - 2 implies beta in {n - 2, n - 3}."""
    A.require_zinbiel()
    n = A.dim
    details: dict = {"n": n}
    if not is_nilpotent(A):
        details["supersolvable"] = "not checked (not nilpotent)"
        return TheoremReport("thm3.1", A.name, False, None, details)
    ss, flag = is_supersolvable(A)
    details["supersolvable"] = ss
    r = result or alpha_beta(A, primes, groebner, budget)
    details.update(alpha=r.alpha, beta=r.beta)
    if not ss or r.alpha != n - 2:
        return TheoremReport("thm3.1", A.name, False, None, details)
    return TheoremReport("thm3.1", A.name, True, r.beta in (n - 2, n - 3), details)


def maximal_subalgebra_dims(A: Algebra, p: int) -> list[int]:
    """Dimensions of all maximal proper subalgebras of A reduced mod p (exhaustive)."""
    n = A.dim
    T = tables_for(p)
    CA = CodedAlgebra(A, T)
    subalgebras = []  # (rows, pivots) over codes
    for d in range(n):
        for pivots, block in iter_subspace_blocks(n, d, T.q):
            for mat in block:
                rows = [[int(x) for x in r] for r in mat]
                piv = list(pivots)
                if all(not any(_reduce_codes(CA.mult(u, v), rows, piv, T)) for u in rows for v in rows):
                    subalgebras.append((rows, piv))
    maximal = []
    for rows, piv in subalgebras:
        bigger = False
        for rows2, piv2 in subalgebras:
            if len(rows2) <= len(rows):
                continue
            if all(not any(_reduce_codes(u, rows2, piv2, T)) for u in rows):
                bigger = True
                break
        if not bigger:
            maximal.append(len(rows))
    return maximal


def check_lemma_3_1(A: Algebra, primes: Sequence[int] = (2, 3)) -> TheoremReport:
    """In a supersolvable algebra every maximal subalgebra has codimension one."""
    A.require_zinbiel()
    n = A.dim
    details: dict = {"n": n}
    if n > 5:
        raise NotSupportedError("the subalgebra lattice scan is limited to n <= 5")
    if not is_nilpotent(A):
        return TheoremReport("lemma3.1", A.name, False, None, details)
    ss, _ = is_supersolvable(A)
    details["supersolvable"] = ss
    if not ss:
        return TheoremReport("lemma3.1", A.name, False, None, details)
    ok = True
    scanned = {}
    for p in primes:
        if not reducible_mod(A, p):
            scanned[f"F{p}"] = "skipped (denominator)"
            continue
        dims = maximal_subalgebra_dims(A, p)
        scanned[f"F{p}"] = sorted(set(dims))
        ok = ok and all(d == n - 1 for d in dims)
    details["maximal_dims"] = scanned
    if all(isinstance(v, str) for v in scanned.values()):
        return TheoremReport("lemma3.1", A.name, True, None, details)
    return TheoremReport("lemma3.1", A.name, True, ok, details)


def filiform_stated_ideal(n: int, variant: int) -> Subspace:
    """The ideal named for each family: NF_n (variant 0), F_n^1/F_n^2 (A) and F_n^3 (B)."""
    if variant == 0:
        return Subspace.coordinate(range(n // 2 + 1, n + 1), n)
    lo = (n + 1) // 2
    hi = n if variant in (1, 2) else n - 1
    return Subspace.coordinate(range(lo, hi + 1), n)


def check_filiform_props(n: int, primes: Sequence[int] | None = None, groebner: bool | None = None,
                         budget: Budget | None = None, variants: Sequence[int] = (0, 1, 2, 3)) -> list[TheoremReport]:
    """Null-filiform and filiform families: alpha, beta, uniqueness and the stated ideal.

    ``variants`` selects NF_n (0) and F_n^1..F_n^3.  Evidence primes are the
    first three primes that are good for the algebra
    (small primes divide the binomial structure constants).  Counts at the
    degenerate small primes 2, 3, 5 are reported alongside.
    """
    from .catalog import filiform, null_filiform

    if not 3 <= n <= 9:
        raise ValueError("filiform checks cover 3 <= n <= 9")
    algebras = [(null_filiform(n), 0)] if 0 in variants else []
    if n >= 4:
        algebras += [(filiform(n, v), v) for v in (1, 2, 3) if v in variants]
    reports = []
    for A, variant in algebras:
        ps = list(primes) if primes else [p for p in (2, 3, 5, 7) + EXTRA_PRIMES if good_prime(A, p)][:3]
        use_gb = (n <= AUTO_GROEBNER_DIM) if groebner is None else groebner
        r = alpha_beta(A, ps, use_gb, budget, extension_primes=())
        enum = enumerate_maximal_abelian_ideals(A, r.beta, ps, use_gb, budget,
                                                degenerate_primes=(2, 3, 5))
        stated = filiform_stated_ideal(n, variant)
        stated_ok = is_abelian(A, stated) and is_ideal(A, stated)
        unique = enum.count == 1
        stated_is_max = stated_ok and stated.dim == r.beta and unique and \
            (not enum.ideals or enum.ideals[0].basis == stated.basis)
        details = {"alpha": r.alpha, "beta": r.beta, "grade": r.grade, "primes": ps,
                   "ideal_counts": {f"F{p}": c for p, c in enum.counts.items()},
                   "degenerate_counts": {f"F{p}": c for p, c in enum.degenerate_counts.items()},
                   "groebner_count": enum.groebner_count, "unique": unique,
                   "stated_ideal": stated, "stated_dim": stated.dim,
                   "stated_is_abelian_ideal": stated_ok}
        if variant == 0:
            formula = n - n // 2
            details["formula"] = formula
            concl = r.alpha == r.beta == formula and stated_is_max
        else:
            details["reading_1"] = n - (n + 1) // 2
            details["reading_2"] = n - ((n + 1) // 2 + 1)
            concl = r.alpha == r.beta and stated_is_max
        reports.append(TheoremReport("prop4.1" if variant == 0 else "prop4.2", A.name, True, concl, details))
    return reports
