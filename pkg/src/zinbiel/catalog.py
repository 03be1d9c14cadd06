"""The classified complex Zinbiel algebras of dimension <= 5, plus generators.

Products are written the way the classification lists them, one rule per
``;``-separated item, e.g. ``"[1,2]=e3+e4; [2,1]=-e3"``.  Coefficients may
use the family parameter ``a``; unlisted products are zero.

Parametric families are bound to concrete rational values; the default
sampling set is {0, 1, 2, -1, 1/2} intersected with the family's domain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .algebra import Algebra
from .field import QQ

DEFAULT_SAMPLES = (Fraction(0), Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2))


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class ParameterCase:
    description: str
    predicate: Callable[[Fraction], bool]
    alpha: int
    beta: int


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    products: str
    alpha: int | None = None
    beta: int | None = None
    cases: tuple = ()
    param: str | None = None
    domain: Callable[[Fraction], bool] | None = None
    domain_text: str = ""
    source: str = ""
    annihilator_dim: int | None = None

    @property
    def is_family(self) -> bool:
        return self.param is not None

    def published(self, value: Fraction | None = None) -> tuple[int, int]:
        """Published (alpha, beta), resolving parameter cases."""
        if not self.cases:
            return self.alpha, self.beta
        for case in self.cases:
            if case.predicate(Fraction(value)):
                return case.alpha, case.beta
        raise CatalogError(f"no published case of {self.id} covers {self.param}={value}")

    def published_text(self) -> str:
        if not self.cases:
            return f"{self.alpha} | {self.beta}"
        return " / ".join(f"{c.alpha} | {c.beta} ({c.description})" for c in self.cases)

    def allowed(self, value) -> bool:
        return self.domain is None or self.domain(Fraction(value))

    def samples(self) -> list:
        """Parameter values exercised by table verification ([None] for fixed algebras)."""
        if not self.is_family:
            return [None]
        return [v for v in DEFAULT_SAMPLES if self.allowed(v)]

    def build(self, value=None) -> Algebra:
        if self.is_family:
            if value is None:
                raise CatalogError(f"{self.id} needs a value for parameter {self.param}")
            value = Fraction(value)
            if not self.allowed(value):
                raise CatalogError(f"{self.id} excludes {self.param}={value} ({self.domain_text})")
            params = {self.param: value}
        else:
            if value is not None:
                raise CatalogError(f"{self.id} has no parameter")
            params = {}
        table = parse_products(self.products, params)
        return Algebra.from_products(self.dim, table, QQ, self.label(value), params)

    def label(self, value=None) -> str:
        if value is None:
            return self.id
        return f"{self.id}({self.param}={_fmt(Fraction(value))})"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_RULE = re.compile(r"^\[(\d+),(\d+)\]=(.+)$")


def _split_terms(rhs: str) -> list[str]:
    terms, depth, cur = [], 0, ""
    for ch in rhs:
        if ch in "+-" and depth == 0 and cur.strip():
            terms.append(cur)
            cur = ch
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        terms.append(cur)
    return terms


def _eval_coeff(text: str, params: dict) -> Fraction:
    text = text.strip().rstrip("*").strip()
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    expr = re.sub(r"(\d+)", r"Fraction(\1)", text)
    return Fraction(eval(expr, {"Fraction": Fraction, "__builtins__": {}}, dict(params)))


def parse_products(spec: str, params: dict | None = None) -> dict:
    """Turn ``"[1,2]=e3+e4; [2,1]=-e3"`` into ``{(1, 2): {3: 1, 4: 1}, (2, 1): {3: -1}}``."""
    params = params or {}
    table: dict = {}
    for rule in filter(None, (r.strip() for r in spec.replace("\n", " ").split(";"))):
        m = _RULE.match(rule.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot read product rule {rule!r}")
        i, j, rhs = int(m.group(1)), int(m.group(2)), m.group(3)
        coeffs: dict = {}
        for term in _split_terms(rhs):
            tm = re.match(r"^(.*?)e(\d+)$", term.strip())
            if not tm:
                raise ValueError(f"cannot read term {term!r} in {rule!r}")
            k = int(tm.group(2))
            coeffs[k] = coeffs.get(k, 0) + _eval_coeff(tm.group(1), params)
        if (i, j) in table:
            raise ValueError(f"product [{i},{j}] given twice")
        table[(i, j)] = coeffs
    return table


# --------------------------------------------------------------------------
# Transcription


def _fixed(id_, dim, products, alpha, beta, source, ann=None):
    return CatalogEntry(id_, dim, products, alpha, beta, source=source, annihilator_dim=ann)


def _family(id_, dim, products, alpha, beta, source, ann=None, domain=None, domain_text=""):
    return CatalogEntry(id_, dim, products, alpha, beta, param="a", domain=domain,
                        domain_text=domain_text, source=source, annihilator_dim=ann)


def _cased(id_, dim, products, cases, source, ann=None):
    return CatalogEntry(id_, dim, products, cases=tuple(cases), param="a", source=source,
                        annihilator_dim=ann)


T1, T2, T3, T4, T5, T6, T7, T8 = (f"Table {k}" for k in range(1, 9))

_TABLE_1 = [
    _fixed("Z2_1", 2, "[1,1]=e2", 1, 1, T1),
    _fixed("Z3_1", 3, "[1,1]=e2; [1,2]=1/2*e3; [2,1]=e3", 2, 2, T1),
    _fixed("Z3_2", 3, "[1,2]=e3; [2,1]=-e3", 2, 2, T1),
    _cased("Z3_3", 3, "[1,1]=e3; [1,2]=e3; [2,2]=a*e3", [
        ParameterCase("a = 0", lambda a: a == 0, 2, 2),
        ParameterCase("a != 0", lambda a: a != 0, 1, 1)], T1),
    _fixed("Z3_4", 3, "[1,1]=e3; [1,2]=e3; [2,1]=e3", 2, 2, T1),
    _fixed("Z4_1", 4, "[1,1]=e2; [1,2]=e3; [2,1]=2e3; [1,3]=e4; [2,2]=3e4; [3,1]=3e4", 2, 2, T1),
    _fixed("Z4_2", 4, "[1,1]=e3; [1,2]=e4; [1,3]=e4; [3,1]=2e4", 3, 3, T1),
    _fixed("Z4_3", 4, "[1,1]=e3; [1,3]=e4; [2,2]=e4; [3,1]=2e4", 2, 2, T1),
    _fixed("Z4_4", 4, "[1,2]=e3; [1,3]=e4; [2,1]=-e3", 3, 3, T1),
    _fixed("Z4_5", 4, "[1,2]=e3; [1,3]=e4; [2,1]=-e3; [2,2]=e4", 2, 2, T1),
    _fixed("Z4_6", 4, "[1,1]=e4; [1,2]=e3; [2,1]=-e3; [2,2]=-2e3+e4", 2, 2, T1),
    _fixed("Z4_7", 4, "[1,2]=e3; [2,1]=e4; [2,2]=-e3", 3, 3, T1),
    _cased("Z4_8", 4, "[1,1]=e3; [1,2]=e4; [2,1]=-a*e3; [2,2]=-e4", [
        ParameterCase("a = 1", lambda a: a == 1, 3, 3),
        ParameterCase("a != 1", lambda a: a != 1, 2, 2)], T1),
    _family("Z4_9", 4, "[1,1]=e4; [1,2]=a*e4; [2,1]=-a*e4; [2,2]=e4; [3,3]=e4", 1, 1, T1),
    _fixed("Z4_10", 4, "[1,2]=e4; [1,3]=e4; [2,1]=-e4; [2,2]=e4; [3,1]=e4", 2, 2, T1),
    _fixed("Z4_11", 4, "[1,1]=e4; [1,2]=e4; [2,1]=-e4; [3,3]=e4", 2, 2, T1),
    _fixed("Z4_12", 4, "[1,2]=e3; [2,1]=e4", 3, 3, T1),
    _fixed("Z4_13", 4, "[1,2]=e3; [2,1]=-e3; [2,2]=e4", 3, 3, T1),
    _fixed("Z4_14", 4, "[2,1]=e4; [3,1]=e4", 3, 3, T1),
    _family("Z4_15", 4, "[1,2]=e4; [2,2]=e3; [2,1]=(1+a)/(1-a)*e4", 3, 3, T1,
            domain=lambda a: a != 1, domain_text="a != 1"),
    _fixed("Z4_16", 4, "[1,2]=e4; [2,1]=-e4; [3,3]=e4", 2, 2, T1),
]

_DIM5 = [
    # 2-dimensional annihilator
    (1, "[1,1]=e2; [1,2]=e4; [2,1]=2e4; [3,3]=e4", 3, T2),
    (2, "[1,1]=e2; [1,2]=e4; [1,3]=e4; [2,1]=2e4", 3, T2),
    (3, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4", 4, T2),
    (4, "[1,1]=e2; [1,2]=e4; [1,3]=a*e5; [2,1]=2e4; [3,1]=e5", 4, T2),
    (5, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4; [3,3]=e5", 3, T2),
    (6, "[1,1]=e2; [1,2]=e4; [3,3]=e5; [2,1]=2e4", 3, T2),
    (7, "[1,1]=e2; [1,2]=e4; [1,3]=e4; [2,1]=2e4; [3,3]=e5", 3, T2),
    (8, "[1,1]=e2; [1,2]=e4; [1,3]=e4+e5; [2,1]=2e4; [3,3]=e5", 3, T2),
    (9, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4; [3,1]=e4+2e5", 4, T2),
    (10, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4; [3,3]=e4", 3, T2),
    (11, "[1,1]=e2; [1,2]=e4; [1,3]=a*e5; [2,1]=2e4; [3,1]=e5; [3,3]=e4", 3, T2),
    (12, "[1,2]=e3; [1,3]=e4; [2,1]=-e3; [2,2]=e4", 3, T2),
    (13, "[1,2]=e3; [1,3]=e4; [2,1]=-e3", 4, T2),
    (14, "[1,1]=e4; [1,2]=e3; [1,3]=e5; [2,1]=-e3", 4, T2),
    (15, "[1,2]=e3+e4; [1,3]=e5; [2,1]=-e3", 4, T2),
    (16, "[1,2]=e3; [2,1]=-e3; [1,3]=e5; [2,2]=e4", 3, T2),
    (17, "[1,1]=e4; [1,2]=e3; [2,1]=-e3; [1,3]=e5; [2,2]=e4", 3, T2),
    (18, "[1,2]=e3; [2,1]=-e3; [1,3]=e5; [2,3]=e4", 3, T2),
    (19, "[1,1]=e4; [1,2]=e3; [2,1]=-e3; [1,3]=e5; [2,3]=e4", 3, T3),
    (20, "[1,2]=e3+e4; [1,3]=e5; [2,1]=-e3; [2,3]=e4", 3, T3),
    (21, "[1,1]=e4; [1,2]=e3; [2,1]=-e3; [1,3]=e5; [2,2]=e4; [2,3]=e4", 3, T3),
    (22, "[1,1]=e4; [1,2]=e3; [2,1]=-e3; [1,3]=e5; [2,2]=e5", 3, T3),
    (23, "[1,2]=e3+e4; [1,3]=e5; [2,1]=-e3; [2,2]=e5", 3, T3),
    # 1-dimensional annihilator
    (24, "[1,1]=e2; [1,2]=e5; [1,3]=e5; [2,1]=2e5; [4,4]=e5", 3, T4),
    (25, "[1,1]=e2; [1,2]=e5; [2,1]=2e5; [3,4]=e5; [4,3]=a*e5", 3, T4),
    (26, "[1,1]=e2; [1,2]=e5; [2,1]=2e5; [3,3]=e5; [3,4]=e5; [4,3]=-e5", 3, T4),
    (27, "[1,1]=e2; [1,2]=e5; [1,4]=e5; [2,1]=2e5; [3,4]=e5; [4,3]=2e5", 3, T4),
    (28, "[1,1]=e3; [1,3]=e5; [2,2]=e4; [2,4]=e5; [3,1]=2e5; [4,2]=2e5", 3, T4),
    (29, "[1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,4]=e5", 3, T4),
    (30, "[1,2]=e3; [1,3]=e5; [2,1]=-e3; [4,1]=e5", 4, T4),
    (31, "[1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,2]=e5; [4,1]=e5", 3, T4),
    (32, "[1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,4]=e5; [4,1]=e5", 3, T5),
    (33, "[1,2]=e3; [1,4]=a*e5; [2,1]=-e3; [2,3]=e5; [4,1]=e5", 3, T5),
    (34, "[1,1]=e5; [1,2]=e3; [1,4]=-e5; [2,1]=-e3; [2,3]=e5; [4,1]=e5", 3, T5),
    (35, "[1,2]=e3; [2,1]=-e3; [2,3]=e5; [2,4]=e5", 4, T5),
    (36, "[1,1]=e5; [1,2]=e3; [2,1]=-e3; [2,3]=e5; [4,4]=e5", 3, T5),
    (37, "[1,1]=a*e5; [1,2]=e3; [1,4]=e5; [2,1]=-e3; [2,3]=e5; [4,4]=e5", 3, T5),
    (38, "[1,2]=e3; [2,1]=-e3; [4,3]=e5", 3, T5),
    (39, "[1,1]=e5; [1,2]=e3; [2,1]=-e3; [4,3]=e5", 3, T5),
    (40, "[1,2]=e3+e5; [2,1]=-e3; [4,3]=e5", 3, T5),
    (41, "[1,2]=e3; [2,1]=-e3; [2,4]=e5; [4,3]=e5", 3, T5),
    (42, "[1,1]=e5; [1,2]=e3; [2,1]=-e3; [2,4]=e5; [4,3]=e5", 3, T5),
    (43, "[1,2]=e3+e5; [2,1]=-e3; [2,4]=e5; [4,3]=e5", 3, T5),
    (44, "[1,2]=e3; [2,1]=-e3; [2,2]=e5; [2,4]=e5; [4,3]=e5", 3, T5),
    (45, "[1,1]=e5; [1,2]=e3; [2,1]=-e3; [2,2]=e5; [2,4]=e5; [4,3]=e5", 3, T5),
    (46, "[1,2]=e3; [1,3]=e5; [1,4]=-e5; [2,1]=e4; [2,2]=-e3; [2,3]=-e5; [2,4]=e5; [3,2]=-2e5", 3, T5),
    (47, "[1,1]=e3; [1,2]=e4; [1,4]=-e5; [2,1]=-e3; [2,2]=-e4; [2,4]=e5; [3,2]=-e5; [4,1]=-e5;"
         " [4,2]=2e5", 3, T5),
    (48, "[1,1]=e3+e5; [1,2]=e4; [1,3]=-e5; [1,4]=e5; [2,1]=-e3; [2,2]=-e4; [2,3]=e5; [2,4]=-e5;"
         " [3,1]=-2e5; [3,2]=2e5; [4,1]=2e5; [4,2]=-2e5", 3, T6),
    (49, "[1,1]=e3; [1,2]=e4; [1,3]=-e5; [1,4]=e5; [2,1]=-e3; [2,2]=-e4; [2,3]=e5; [2,4]=-e5;"
         " [3,1]=-2e5; [3,2]=2e5; [4,1]=2e5; [4,2]=-2e5", 3, T6),
    (50, "[1,2]=e3; [1,3]=-e5; [1,4]=e5; [2,1]=e4; [2,3]=-e5; [2,4]=e5", 3, T6),
    (51, "[1,2]=e3; [1,3]=-e5; [1,4]=e5; [2,1]=e4; [2,2]=e5", 3, T6),
    (52, "[1,2]=e3; [1,3]=-e5; [1,4]=e5; [2,1]=e4", 4, T6),
    (53, "[1,2]=e4; [1,3]=(a+1)*e5; [2,1]=a*e4; [2,2]=e3; [2,4]=2*a*e5; [3,1]=2*a*(a+1)*e5;"
         " [4,2]=2*(a+1)*e5", 3, T6),
    (54, "[1,2]=e4; [1,3]=e5; [2,1]=e5; [2,2]=e3; [4,2]=2e5", 3, T6),
    (55, "[1,1]=e5; [1,2]=e4; [1,3]=1/2*e5; [2,1]=-1/2*e4; [2,2]=e3; [2,4]=-e5; [3,1]=-1/2*e5;"
         " [4,2]=e5", 3, T6),
    (56, "[1,2]=e4; [1,3]=1/2*e5; [2,1]=-1/2*e4; [2,2]=e3; [2,3]=e5; [2,4]=-e5; [3,1]=-1/2*e5;"
         " [3,2]=2e5; [4,2]=e5", 3, T6),
    (57, "[1,1]=e5; [1,2]=e4; [1,3]=1/2*e5; [2,1]=-1/2*e4; [2,2]=e3; [2,3]=e5; [2,4]=-e5;"
         " [3,1]=-1/2*e5; [3,2]=2e5; [4,2]=e5", 3, T6),
    (58, "[1,2]=e4; [1,4]=e5; [2,1]=-e4; [2,2]=e3; [2,3]=e5; [3,2]=2e5", 3, T6),
    (59, "[1,1]=e5; [1,2]=e4; [2,1]=-e4; [2,2]=e3; [2,3]=e5; [2,4]=e5; [3,2]=2e5", 3, T6),
    (60, "[1,2]=e4; [2,1]=-e4; [2,2]=e3; [2,3]=e5; [2,4]=e5; [3,2]=2e5", 4, T7),
    (61, "[1,1]=e2; [1,2]=e3; [1,3]=e5; [2,1]=2e3; [2,2]=3e5; [3,1]=3e5; [4,4]=e5", 3, T7),
    (62, "[1,1]=e2; [1,2]=e3; [1,3]=e5; [1,4]=e5; [2,1]=2e3; [2,2]=3e5; [3,1]=3e5", 3, T7),
    (63, "[1,1]=e2; [1,2]=1/2*e3; [1,3]=2e4; [1,4]=e5; [2,1]=e3; [2,2]=3e4; [2,3]=8e5; [3,1]=6e4;"
         " [3,2]=12e5; [4,1]=4e5", 3, T7),
    (64, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4", 4, T7),
    (65, "[1,1]=e2; [1,2]=e4; [1,3]=a*e5; [2,1]=2e4; [3,1]=e5", 4, T7),
    (66, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4; [3,3]=e5", 3, T7),
    (67, "[1,1]=e2; [1,2]=e4; [2,1]=2e4; [3,3]=e5", 3, T7),
    (68, "[1,1]=e2; [1,2]=e4; [1,3]=e4; [2,1]=2e4; [3,3]=e5", 3, T7),
    (69, "[1,1]=e2; [1,2]=e4; [1,3]=e4+e5; [2,1]=2e4; [3,3]=e5", 3, T7),
    (70, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4; [3,1]=e4+2e5", 4, T7),
    (71, "[1,1]=e2; [1,2]=e4; [1,3]=e5; [2,1]=2e4; [3,3]=e4", 3, T7),
    (72, "[1,1]=e2; [1,2]=e4; [1,3]=a*e5; [2,1]=2e4; [3,1]=e5; [3,3]=e4", 3, T7),
    (73, "[1,1]=e4; [1,2]=e3; [1,3]=e5; [2,1]=-e3", 4, T7),
    (74, "[1,2]=e3+e4; [1,3]=e5; [2,1]=-e3", 4, T7),
    (75, "[1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,2]=e4", 3, T8),
    (76, "[1,1]=e4; [1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,2]=e4", 3, T8),
    (77, "[1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,3]=e4", 3, T8),
    (78, "[1,1]=e4; [1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,3]=e4", 3, T8),
    (79, "[1,2]=e3+e4; [1,3]=e5; [2,1]=-e3; [2,3]=e4", 3, T8),
    (80, "[1,1]=e4; [1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,2]=e4; [2,3]=e4", 3, T8),
    (81, "[1,1]=e4; [1,2]=e3; [1,3]=e5; [2,1]=-e3; [2,2]=e5", 3, T8),
    (82, "[1,2]=e3+e4; [1,3]=e5; [2,1]=-e3; [2,2]=e5", 3, T8),
]

_DOMAINS = {53: (lambda a: a != -1, "a != -1")}


def _dim5_entries() -> list[CatalogEntry]:
    out = []
    for num, products, ab, source in _DIM5:
        ann = 2 if num <= 23 else 1
        id_ = f"Z5_{num}"
        if "a" in products:
            dom, txt = _DOMAINS.get(num, (None, ""))
            out.append(_family(id_, 5, products, ab, ab, source, ann, dom, txt))
        else:
            out.append(_fixed(id_, 5, products, ab, ab, source, ann))
    return out


_ENTRIES: list[CatalogEntry] = _TABLE_1 + _dim5_entries()
_BY_ID = {e.id: e for e in _ENTRIES}


def all_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def entry(id_: str) -> CatalogEntry:
    key = normalize_id(id_)
    if key not in _BY_ID:
        raise CatalogError(f"unknown catalog id {id_!r}")
    return _BY_ID[key]


def normalize_id(id_: str) -> str:
    """Accept ``Z5_37``, ``Z5^37``, ``z5-37``."""
    m = re.fullmatch(r"[Zz]_?(\d)[_^\-]\{?(\d+)\}?", id_.strip())
    if m:
        return f"Z{m.group(1)}_{m.group(2)}"
    return id_.strip()


def get(id_: str, **params) -> Algebra:
    """Concrete algebra for a catalog id; families take their parameter by keyword (``a=``)."""
    e = entry(id_)
    if e.is_family:
        if not params:
            raise CatalogError(f"{e.id} needs parameter {e.param}")
        (name, value), = params.items()
        if name not in (e.param, "alpha"):
            raise CatalogError(f"{e.id} has parameter {e.param}, not {name}")
        return e.build(value)
    if params:
        raise CatalogError(f"{e.id} has no parameter")
    return e.build()


def sampled_algebras(entries: Iterable[CatalogEntry] | None = None):
    """Yield (entry, parameter value or None, algebra) over every sampled parameter."""
    for e in (all_entries() if entries is None else entries):
        for v in e.samples():
            yield e, v, e.build(v)


# --------------------------------------------------------------------------
# Generators


EXAMPLE_3_1 = ("[1,1]=e5-e6; [1,2]=e4+e5-e6; [3,2]=e4+e5-e6; [1,3]=e2; [1,5]=e2; [1,6]=e2;"
               " [3,1]=-e2; [5,2]=e4; [6,2]=e4; [5,1]=-e2+2e4; [6,1]=-e2+2e4")


def example_3_1() -> Algebra:
    """Six-dimensional nilpotent algebra with alpha = 4 and beta = 3."""
    return Algebra.from_products(6, parse_products(EXAMPLE_3_1), QQ, "example-3-1")


def null_filiform(n: int) -> Algebra:
    """NF_n: [e_i, e_j] = C(i+j-1, j) e_{i+j} for i + j <= n."""
    if n < 2:
        raise ValueError("null-filiform algebras need n >= 2")
    table = {(i, j): {i + j: comb(i + j - 1, j)}
             for i in range(1, n) for j in range(1, n) if i + j <= n}
    return Algebra.from_products(n, table, QQ, f"NF_{n}")


def filiform(n: int, variant: int) -> Algebra:
    """The filiform families F_n^1, F_n^2, F_n^3."""
    if n < 4:
        raise ValueError("filiform families need n >= 4")
    if variant not in (1, 2, 3):
        raise ValueError(f"variant must be 1, 2 or 3, got {variant}")
    table = {(i, j): {i + j: comb(i + j - 1, j)}
             for i in range(1, n) for j in range(1, n) if i + j <= n - 1}
    if variant == 2:
        table[(n, 1)] = {n - 1: 1}
    elif variant == 3:
        table[(n, n)] = {n - 1: 1}
    return Algebra.from_products(n, table, QQ, f"F_{n}^{variant}")


def resolve(spec: str) -> Algebra:
    """Algebra from a CLI-style name.

    Accepts catalog ids (``Z5_37``, with ``Z4_8:a=1`` or ``Z4_8:1`` for
    families), ``NF:7``, ``F:5:2`` and ``example`` (the six-dimensional example).
    """
    s = spec.strip()
    if s.lower() in ("example", "example-3-1", "example3.1", "ex3.1", "example_3_1"):
        return example_3_1()
    if s.upper().startswith("NF:"):
        return null_filiform(int(s.split(":")[1]))
    if s.upper().startswith("F:"):
        _, n, v = s.split(":")
        return filiform(int(n), int(v))
    if ":" in s:
        id_, rest = s.split(":", 1)
        value = rest.split("=", 1)[-1]
        return entry(id_).build(Fraction(value))
    e = entry(s)
    if e.is_family:
        raise CatalogError(f"{e.id} is a family; pass a value as {e.id}:a=<value>")
    return e.build()
