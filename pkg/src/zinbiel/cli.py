"""Command-line interface for the Zinbiel toolkit.

Usage:
    zinbiel verify-tables --scope dim<=4
    zinbiel verify-tables --scope dim5 --filter 'Z5_(3|4)\\d' --json
    zinbiel alpha-beta example-3-1 --groebner on --enumerate-ideals
    zinbiel alpha-beta algebra.json --primes 2,3,5,7
    zinbiel series Z5_61
    zinbiel center Z4_8:a=1
    zinbiel check thm2.1 --scope all
    zinbiel check filiform --n 3-7
    zinbiel normalize "[[a,b],c]"
    zinbiel catalog list
    zinbiel catalog export Z4_8:a=1 -o z48.json
    zinbiel groebner system.json

Exit codes: 0 all checks passed, 1 mathematical mismatch, 2 input error,
3 Groebner budget exhausted (certificates downgraded).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from . import catalog as cat
from .algebra import (Algebra, NotSupportedError, NotZinbielError, center, derived_series,
                      is_supersolvable, lower_central_series)
from .field import DEFAULT_PRIMES
from .groebner import Budget, GroebnerBudgetError, buchberger, find_rational_point, parse_polynomial
from .invariants import (AlphaBetaResult, InconsistentEvidenceError, alpha_beta, check_filiform_props,
                         check_lemma_3_1, check_theorem_2_1, check_theorem_3_1)
from .rewriter import ParseError, left_normalize, nonzero_basis_products, normal_form_mismatches, parse

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_SEED = 20240601


class InputError(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    budget_exhausted: bool = False
    timing_seconds: float = 0.0

    @property
    def grades(self) -> dict:
        out: dict = {}
        for r in self.results:
            g = r.get("grade")
            if g:
                out[g] = out.get(g, 0) + 1
        return out

    @property
    def exit_code(self) -> int:
        if self.errors:
            return EXIT_INPUT
        if self.mismatches:
            return EXIT_MISMATCH
        if self.budget_exhausted:
            return EXIT_BUDGET
        return EXIT_OK

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "results": self.results,
                "mismatches": self.mismatches, "errors": self.errors, "grades": self.grades,
                "budget_exhausted": self.budget_exhausted,
                "timing_seconds": round(self.timing_seconds, 3), "exit_code": self.exit_code}


# --------------------------------------------------------------------------
# Shared helpers


def _primes(text: str) -> tuple:
    try:
        ps = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"--primes expects a comma-separated list of integers, got {text!r}")
    if not ps or any(p < 2 for p in ps):
        raise InputError(f"--primes expects primes, got {text!r}")
    return ps


def _groebner_flag(value: str):
    return {"on": True, "off": False, "auto": None}[value]


def _budget(args) -> Budget:
    secs = getattr(args, "budget_secs", None)
    if secs is None and os.environ.get("ZINBIEL_BUDGET_SECS"):
        try:
            secs = float(os.environ["ZINBIEL_BUDGET_SECS"])
        except ValueError:
            raise InputError("ZINBIEL_BUDGET_SECS must be a number of seconds")
    pairs = getattr(args, "budget_pairs", None)
    default = Budget()
    return Budget(pairs if pairs is not None else default.max_pairs,
                  secs if secs is not None else default.max_seconds)


def load_algebra(spec: str) -> Algebra:
    """A JSON file path or a catalog-style name (see ``catalog.resolve``)."""
    path = Path(spec)
    if spec.endswith(".json") or path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror}")
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON in {spec} at line {exc.lineno} column {exc.colno} "
                             f"(position {exc.pos}): {exc.msg}")
        try:
            A = Algebra.from_json(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{spec}: {exc}")
        if not A.name:
            A = Algebra(A.dim, A.constants, A.field, path.stem, dict(A.params))
        return A
    try:
        return cat.resolve(spec)
    except (cat.CatalogError, ValueError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        raise InputError(f"cannot resolve {spec!r}: {msg}")


def _require_zinbiel(A: Algebra) -> None:
    if not A.is_zinbiel:
        raise InputError(f"{A.name or 'input'} is not a Zinbiel algebra: {A.violation}")


def _reference(spec: str, A: Algebra):
    """Published (alpha, beta) for catalog entries and null-filiform algebras."""
    s = spec.strip()
    if s.upper().startswith("NF:"):
        n = A.dim
        return (n - n // 2, n - n // 2)
    if s.lower().startswith("example"):
        return (4, 3)
    try:
        e = cat.entry(s.split(":")[0])
    except (cat.CatalogError, ValueError):
        return None
    value = A.params.get(e.param) if e.is_family else None
    return e.published(value)


def _emit(report: RunReport, args, text_lines: list[str]) -> int:
    if getattr(args, "json", False):
        print(json.dumps(report.to_json(), indent=2))
    else:
        for line in text_lines:
            print(line)
        for e in report.errors:
            print(f"error: {e}", file=sys.stderr)
    return report.exit_code


def _scope_entries(scope: str, pattern: str | None):
    scope = scope.replace("≤", "<=").lower()
    if scope in ("dim<=4", "dim4", "table1"):
        entries = [e for e in cat.all_entries() if e.dim <= 4]
    elif scope == "dim5":
        entries = [e for e in cat.all_entries() if e.dim == 5]
    elif scope == "all":
        entries = cat.all_entries()
    else:
        raise InputError(f"unknown scope {scope!r}; use dim<=4, dim5 or all")
    if pattern:
        try:
            rx = re.compile(pattern)
        except re.error as exc:
            raise InputError(f"bad --filter regex: {exc}")
        entries = [e for e in entries if rx.search(e.id)]
    return entries


def _sample_jobs(entries):
    return [(e.id, v) for e in entries for v in e.samples()]


# --------------------------------------------------------------------------
# verify-tables


def _verify_one(job):
    id_, value, primes, groebner, budget = job
    e = cat.entry(id_)
    row = {"id": id_, "param": None if value is None else str(value),
           "published": list(e.published(value))}
    t0 = time.perf_counter()
    try:
        r = alpha_beta(e.build(value), primes, groebner, budget)
    except (InconsistentEvidenceError, NotSupportedError) as exc:
        row.update(status="error", message=str(exc))
        return row
    row.update(computed=[r.alpha, r.beta], grade=r.grade,
               alpha_witness=r.alpha_witness.to_lists() if r.alpha_witness else None,
               beta_witness=r.beta_witness.to_lists() if r.beta_witness else None,
               seconds=round(time.perf_counter() - t0, 3),
               budget_exhausted=any(c.status == "unknown" for c in r.upper_certificates()))
    row["status"] = "ok" if row["computed"] == row["published"] else "mismatch"
    return row


def cmd_verify_tables(args) -> int:
    t0 = time.perf_counter()
    entries = _scope_entries(args.scope, args.filter)
    primes = _primes(args.primes)
    budget = _budget(args)
    jobs = [(i, v, primes, _groebner_flag(args.groebner), budget) for i, v in _sample_jobs(entries)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_verify_one, jobs))
    else:
        rows = [_verify_one(j) for j in jobs]
    report = RunReport("verify-tables", {"scope": args.scope, "filter": args.filter,
                                         "primes": list(primes), "groebner": args.groebner})
    lines = [f"{'id':<8} {'param':>6}  {'published':>9}  {'computed':>9}  {'grade':<13} status",
             "-" * 60]
    for row in rows:
        report.results.append(row)
        if row["status"] == "error":
            report.errors.append(f"{row['id']}: {row['message']}")
        elif row["status"] == "mismatch":
            report.mismatches.append({"id": row["id"], "param": row["param"],
                                      "published": row["published"], "computed": row["computed"]})
        if row.get("budget_exhausted"):
            report.budget_exhausted = True
        pub = "{}|{}".format(*row["published"])
        comp = "{}|{}".format(*row["computed"]) if "computed" in row else "-"
        lines.append(f"{row['id']:<8} {row['param'] or '':>6}  {pub:>9}  {comp:>9}  "
                     f"{row.get('grade', '-'):<13} {row['status']}")
    report.timing_seconds = time.perf_counter() - t0
    lines.append("-" * 60)
    lines.append(f"{len(entries)} entries, {len(rows)} algebras, {len(report.mismatches)} mismatches, "
                 f"grades {report.grades}, {report.timing_seconds:.1f}s")
    return _emit(report, args, lines)


# --------------------------------------------------------------------------
# alpha-beta


def _render_alpha_beta(r: AlphaBetaResult, A: Algebra) -> list[str]:
    lines = [f"algebra: {A.name} (dim {A.dim})"]
    for label, value, W, ff, lower in (("alpha", r.alpha, r.alpha_witness, r.alpha_witness_ff, r.alpha_lower),
                                       ("beta", r.beta, r.beta_witness, r.beta_witness_ff, r.beta_lower)):
        wit = str(W) if W is not None else (f"{ff} (finite field)" if ff is not None else "none")
        lines.append(f"  {label:<5} = {value}   witness {wit}   [{lower}]")
    lines.append(f"  grade: {r.grade}")
    for c in r.upper_certificates():
        lines.append(f"  no {c.d}-dim abelian {c.mode}: {c.method} ({c.status}, {c.patterns} patterns)")
    ev = ", ".join(f"{e.field}: {e.alpha}|{e.beta}" if not e.skipped else f"{e.field}: {e.skipped}"
                   for e in r.evidence)
    lines.append(f"  evidence: {ev}")
    enum = r.maximal_abelian_ideals
    if enum is not None:
        counts = ", ".join(f"F{p}: {c}" for p, c in enum.counts.items())
        lines.append(f"  maximal abelian ideals (dim {enum.d}): {enum.count if enum.count is not None else '?'}"
                     f"  [{enum.status}; counts {counts}; groebner count {enum.groebner_count}]")
        for W in enum.ideals:
            lines.append(f"    {W}")
    return lines


def cmd_alpha_beta(args) -> int:
    t0 = time.perf_counter()
    A = load_algebra(args.input)
    _require_zinbiel(A)
    primes = _primes(args.primes)
    report = RunReport("alpha-beta", {"input": args.input, "primes": list(primes),
                                      "groebner": args.groebner, "enumerate_ideals": args.enumerate_ideals})
    try:
        r = alpha_beta(A, primes, _groebner_flag(args.groebner), _budget(args),
                       enumerate_ideals=args.enumerate_ideals)
    except NotSupportedError as exc:
        raise InputError(str(exc))
    row = r.to_json()
    ref = _reference(args.input, A)
    if ref is not None:
        row["published"] = list(ref)
        if [r.alpha, r.beta] != list(ref):
            report.mismatches.append({"id": A.name, "published": list(ref), "computed": [r.alpha, r.beta]})
    report.results.append(row)
    report.budget_exhausted = any(c.status == "unknown" for c in r.upper_certificates())
    report.timing_seconds = time.perf_counter() - t0
    lines = _render_alpha_beta(r, A)
    if ref is not None:
        lines.append(f"  published: {ref[0]}|{ref[1]}  ({'match' if not report.mismatches else 'MISMATCH'})")
    lines.append(f"  time: {report.timing_seconds:.2f}s")
    return _emit(report, args, lines)


# --------------------------------------------------------------------------
# series and center


def cmd_series(args) -> int:
    A = load_algebra(args.input)
    _require_zinbiel(A)
    lcs, der = lower_central_series(A), derived_series(A)
    ss = is_supersolvable(A)[0] if lcs.index is not None else None
    row = {"algebra": A.name, "dim": A.dim,
           "lower_central": [t.to_lists() for t in lcs.terms], "lower_central_dims": lcs.dims,
           "derived": [t.to_lists() for t in der.terms], "derived_dims": der.dims,
           "nilpotent": lcs.index is not None, "nilpotency_index": lcs.index,
           "solvable": der.index is not None, "supersolvable": ss}
    report = RunReport("series", {"input": args.input}, [row])
    lines = [f"algebra: {A.name} (dim {A.dim})"]
    for k, t in enumerate(_distinct(lcs.terms), 1):
        lines.append(f"  Z^{k}   dim {t.dim}  {t}")
    for k, t in enumerate(_distinct(der.terms), 1):
        lines.append(f"  Z^({k}) dim {t.dim}  {t}")
    lines.append(f"  nilpotency index: {lcs.index if lcs.index is not None else 'not nilpotent'}")
    if ss is not None:
        lines.append(f"  supersolvable: {ss}")
    return _emit(report, args, lines)


def _distinct(terms):
    """Series terms up to the point where they stabilise."""
    terms = list(terms)
    while len(terms) > 1 and terms[-1] == terms[-2]:
        terms.pop()
    return terms


def cmd_center(args) -> int:
    A = load_algebra(args.input)
    _require_zinbiel(A)
    C = center(A)
    report = RunReport("center", {"input": args.input},
                       [{"algebra": A.name, "dim": C.dim, "basis": C.to_lists()}])
    return _emit(report, args, [f"{A.name}: center dim {C.dim}  {C}"])


# --------------------------------------------------------------------------
# check


def _parse_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--n expects a range like 3-9 or a list like 4,6, got {text!r}")


def _catalog_algebras(args):
    return [(f"{e.id}" + ("" if v is None else f":a={v}"), e.build(v))
            for e in _scope_entries(args.scope, args.filter) for v in e.samples()]


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    theorem = args.theorem
    primes = _primes(args.primes)
    groebner = _groebner_flag(args.groebner)
    budget = _budget(args)
    report = RunReport("check", {"theorem": theorem, "scope": args.scope, "filter": args.filter,
                                 "n": args.n, "seed": args.seed, "primes": list(primes)})
    lines = []
    inconclusive = 0

    def record(label, rep):
        nonlocal inconclusive
        row = {"label": label, **rep.to_json()}
        report.results.append(row)
        if rep.hypotheses and rep.conclusion is False:
            report.mismatches.append({"label": label, "theorem": rep.theorem})
            status = "FAIL"
        elif rep.hypotheses and rep.conclusion is None:
            inconclusive += 1
            status = "inconclusive"
        else:
            status = "verified" if rep.hypotheses else "vacuous"
        lines.append(f"  {label:<14} {status}")

    if theorem in ("thm2.1", "thm3.1"):
        fn = check_theorem_2_1 if theorem == "thm2.1" else check_theorem_3_1
        targets = _catalog_algebras(args)
        if theorem == "thm3.1" and args.include_example:
            targets.append(("example-3-1", cat.example_3_1()))
        for label, A in targets:
            g = groebner
            if g is None and A.dim > 5:
                g = False
            record(label, fn(A, primes, g, budget))
    elif theorem == "lemma3.1":
        for label, A in _catalog_algebras(args):
            record(label, check_lemma_3_1(A, (2, 3)))
    elif theorem in ("prop4.1", "prop4.2", "filiform"):
        for n in _parse_range(args.n or "3-7"):
            for rep in check_filiform_props(n, groebner=groebner, budget=budget):
                if theorem == "filiform" or rep.theorem == theorem:
                    record(rep.algebra, rep)
    elif theorem in ("lemma1.1", "nilpotency"):
        from .invariants import TheoremReport
        from .algebra import nilpotency_index
        rng = random.Random(args.seed)
        for label, A in _catalog_algebras(args):
            if theorem == "lemma1.1":
                bad = normal_form_mismatches(A, (3, 4, 5), rng, environments=10)
                record(label, TheoremReport("lemma1.1", label, True, not bad, {"failures": bad[:5]}))
            else:
                m = nilpotency_index(A)
                if m is None or m > 5:
                    record(label, TheoremReport("nilpotency", label, False, None, {"index": m}))
                    continue
                samples = None if A.dim <= 4 else 500
                bad = nonzero_basis_products(A, m, rng, samples)
                record(label, TheoremReport("nilpotency", label, True, not bad,
                                            {"index": m, "failures": bad[:5]}))
    else:
        raise InputError(f"unknown theorem {theorem!r}")
    report.timing_seconds = time.perf_counter() - t0
    verified = sum(1 for r in report.results if r["hypotheses"] and r["conclusion"])
    lines.insert(0, f"check {theorem}:")
    lines.append(f"{len(report.results)} algebras, {verified} verified, {len(report.mismatches)} failed, "
                 f"{inconclusive} inconclusive, {report.timing_seconds:.1f}s")
    return _emit(report, args, lines)


# --------------------------------------------------------------------------
# normalize, catalog, groebner


def cmd_normalize(args) -> int:
    try:
        expr = parse(args.expr)
    except ParseError as exc:
        raise InputError(str(exc))
    combo = left_normalize(expr)
    report = RunReport("normalize", {"expr": args.expr},
                       [{"normal_form": str(combo), "terms": len(combo)}])
    return _emit(report, args, [str(combo)])


def cmd_catalog(args) -> int:
    report = RunReport("catalog", {"action": args.action, "id": args.id})
    lines = []
    if args.action == "list":
        for e in cat.all_entries():
            report.results.append({"id": e.id, "dim": e.dim, "param": e.param,
                                   "published": e.published_text(), "source": e.source})
            param = f"({e.param})" if e.is_family else ""
            lines.append(f"{e.id + param:<10} dim {e.dim}  alpha|beta {e.published_text():<22} {e.source}")
        return _emit(report, args, lines)
    if not args.id:
        raise InputError(f"catalog {args.action} needs an id")
    if args.action == "show":
        try:
            e = cat.entry(args.id.split(":")[0])
        except cat.CatalogError as exc:
            raise InputError(exc.args[0])
        row = {"id": e.id, "dim": e.dim, "products": e.products, "param": e.param,
               "published": e.published_text(), "domain": e.domain_text, "source": e.source,
               "annihilator_dim": e.annihilator_dim,
               "samples": [None if v is None else str(v) for v in e.samples()]}
        report.results.append(row)
        lines = [f"{k}: {v}" for k, v in row.items()]
        return _emit(report, args, lines)
    A = load_algebra(args.id)
    text = A.dumps()
    if args.output:
        Path(args.output).write_text(text + "\n")
        lines.append(f"wrote {args.output}")
    else:
        lines.append(text)
    report.results.append(A.to_json())
    return _emit(report, args, lines)


def cmd_groebner(args) -> int:
    try:
        obj = json.loads(Path(args.system).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.system}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno} "
                         f"(position {exc.pos}): {exc.msg}")
    try:
        names = list(obj["variables"])
        polys = [parse_polynomial(s, names) for s in obj["polynomials"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"system JSON needs 'variables' and 'polynomials': {exc!r}")
    except ValueError as exc:
        raise InputError(str(exc))
    report = RunReport("groebner", {"system": args.system})
    try:
        G = buchberger(polys, _budget(args))
    except GroebnerBudgetError as exc:
        report.budget_exhausted = True
        report.results.append({"status": "unknown", "message": str(exc)})
        return _emit(report, args, [f"budget exhausted: {exc}"])
    basis = [_rename(str(g), names) for g in G.polys]
    point = None if G.is_unit else find_rational_point(G.polys)
    row = {"basis": basis, "infeasible": G.is_unit, "verified": G.verified,
           "pairs_processed": G.pairs_processed, "pairs_skipped": G.pairs_skipped,
           "unlucky_primes": sorted(G.unlucky_primes),
           "rational_point": None if point is None else {n: str(v) for n, v in zip(names, point)}}
    report.results.append(row)
    lines = ["basis:"] + [f"  {b}" for b in basis]
    lines.append("no common zero over C" if G.is_unit else "consistent over C")
    if point is not None:
        lines.append("rational point: " + ", ".join(f"{n}={v}" for n, v in zip(names, point)))
    return _emit(report, args, lines)


def _rename(text: str, names: list[str]) -> str:
    return re.sub(r"x(\d+)", lambda m: names[int(m.group(1)) - 1], text)


# --------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zinbiel", description="Exact computations with Zinbiel algebras")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, primes=True, groebner=True):
        p.add_argument("--json", action="store_true", help="print a JSON run report")
        if primes:
            p.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)),
                           help="finite fields used for evidence (default 2,3,5,7)")
        if groebner:
            p.add_argument("--groebner", choices=["on", "off", "auto"], default="auto",
                           help="Groebner certificates (auto: on for dim <= 5)")
            p.add_argument("--budget-secs", type=float, default=None,
                           help="seconds per Groebner system (env ZINBIEL_BUDGET_SECS)")
            p.add_argument("--budget-pairs", type=int, default=None, help="S-pairs per Groebner system")

    p = sub.add_parser("verify-tables", help="recompute alpha and beta for the catalog")
    p.add_argument("--scope", default="all", help="dim<=4, dim5 or all")
    p.add_argument("--filter", default=None, help="regex on catalog ids")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(p)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("alpha-beta", help="alpha and beta of one algebra")
    p.add_argument("input", help="algebra JSON file or name (Z5_37, Z4_8:a=1, NF:7, F:5:3, example-3-1)")
    p.add_argument("--enumerate-ideals", action="store_true", help="list the maximal abelian ideals")
    common(p)
    p.set_defaults(func=cmd_alpha_beta)

    for name, fn, text in (("series", cmd_series, "lower central and derived series"),
                           ("center", cmd_center, "center of an algebra")):
        p = sub.add_parser(name, help=text)
        p.add_argument("input")
        common(p, primes=False, groebner=False)
        p.set_defaults(func=fn)

    p = sub.add_parser("check", help="check a structural statement across algebras")
    p.add_argument("theorem", choices=["thm2.1", "thm3.1", "lemma3.1", "prop4.1", "prop4.2", "filiform",
                                       "lemma1.1", "nilpotency"])
    p.add_argument("--scope", default="all", help="catalog scope: dim<=4, dim5 or all")
    p.add_argument("--filter", default=None, help="regex on catalog ids")
    p.add_argument("--n", default=None, help="dimensions for the filiform checks, e.g. 3-9")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")
    p.add_argument("--include-example", action="store_true",
                   help="also run thm3.1 on the six-dimensional example algebra")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("normalize", help="left-normed normal form of a bracketed word")
    p.add_argument("expr")
    common(p, primes=False, groebner=False)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("catalog", help="browse and export catalog entries")
    p.add_argument("action", choices=["list", "show", "export"])
    p.add_argument("id", nargs="?")
    p.add_argument("-o", "--output", default=None, help="file for export (default stdout)")
    common(p, primes=False, groebner=False)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("groebner", help="reduced Groebner basis of a JSON polynomial system")
    p.add_argument("system", help='JSON {"variables": [...], "polynomials": ["x^2-1", ...]}')
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--budget-pairs", type=int, default=None)
    p.set_defaults(func=cmd_groebner)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        if getattr(args, "json", False):
            report = RunReport(args.command, {k: v for k, v in vars(args).items() if k != "func"},
                               errors=[str(exc)])
            print(json.dumps(report.to_json(), indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotZinbielError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
