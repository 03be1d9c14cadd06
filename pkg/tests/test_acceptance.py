"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (shown in the terminal summary) before
asserting, so a failing criterion still reports what was computed.
"""

import itertools
import json
import random
import time
from fractions import Fraction

import pytest
from acceptance_log import record
from oracles import fp_solutions, q_pascal, random_system

from zinbiel import catalog
from zinbiel.algebra import (Subspace, center, is_abelian, lower_central_series,
                             nilpotency_index)
from zinbiel.cli import main
from zinbiel.groebner import buchberger, is_infeasible, reduce, s_polynomial
from zinbiel.invariants import (alpha_beta, certify_upper_bound, check_filiform_props, check_lemma_3_1,
                                check_theorem_2_1, check_theorem_3_1, pattern_systems)
from zinbiel.rewriter import nonzero_basis_products, normal_form_mismatches
from zinbiel.search import count_subspaces_fp

SEED = 20240601


def _verify_tables(capsys, scope):
    t0 = time.perf_counter()
    code = main(["verify-tables", "--scope", scope, "--json"])
    elapsed = time.perf_counter() - t0
    report = json.loads(capsys.readouterr().out)
    return code, report, elapsed


def _mismatch_text(report):
    return ", ".join(f"{m['id']}{'' if m['param'] is None else '(a=' + m['param'] + ')'} "
                     f"published {m['published'][0]}|{m['published'][1]} computed "
                     f"{m['computed'][0]}|{m['computed'][1]}" for m in report["mismatches"])


def test_criterion_01_small_dimension_table(capsys):
    code, report, elapsed = _verify_tables(capsys, "dim<=4")
    ids = {r["id"] for r in report["results"]}
    cases = {(r["id"], r["param"]) for r in report["results"]}
    both_cases = {("Z3_3", "0"), ("Z3_3", "1"), ("Z4_8", "1"), ("Z4_8", "0")} <= cases
    graded = all(r.get("grade") == "groebner" for r in report["results"])
    ok = (len(ids) == 21 and both_cases and graded and not report["mismatches"]
          and not report["errors"] and elapsed <= 120)
    record(1, "dimension <= 4 table reproduction", ok,
           f"{len(ids)} entries, {len(report['results'])} algebras, {len(report['mismatches'])} mismatches, "
           f"all groebner grade: {graded}, {elapsed:.0f}s; {_mismatch_text(report)}")
    assert ok
    assert code == 0


def test_criterion_02_dim_5_tables(capsys):
    code, report, elapsed = _verify_tables(capsys, "dim5")
    ids = {r["id"] for r in report["results"]}
    graded = all(r.get("grade") == "groebner" for r in report["results"])
    ok = len(ids) == 82 and graded and not report["mismatches"] and not report["errors"] and elapsed <= 1800
    record(2, "dimension 5 tables reproduction", ok,
           f"{len(ids)} entries, {len(report['mismatches'])} mismatches, all groebner grade: {graded}, "
           f"{elapsed:.0f}s; {_mismatch_text(report)}")
    assert ok
    assert code == 0


def test_criterion_03_six_dimensional_example():
    E = catalog.example_3_1()
    r = alpha_beta(E, primes=(5, 7), groebner=True, enumerate_ideals=True)
    lcs = lower_central_series(E)
    cen = center(E)
    W4 = Subspace.coordinate([3, 4, 5, 6], 6)
    e = lambda *xs: tuple(Fraction(x) for x in xs)
    Z2 = lcs.term(2)
    stated = [Z2, cen + Subspace.span([e(0, 0, -1, 0, 1, 0)], 6), cen + Subspace.span([e(0, 0, -1, 0, 0, 1)], 6)]
    enum = r.maximal_abelian_ideals
    no_dim4 = certify_upper_bound(E, 4, require_ideal=True)
    structure = (r.alpha == 4 and r.alpha_witness == W4 and is_abelian(E, W4) and r.beta == 3
                 and Z2.dim == 3 and lcs.term(3) == cen and cen.dim == 2 and lcs.term(4).dim == 0)
    certified = no_dim4.status == "none-exist" and no_dim4.patterns == 15 and no_dim4.groebner_grade
    counts = enum.counts
    agree = counts.get(5) == counts.get(7)
    listed = enum.count == 3 and set(enum.ideals) == set(stated)
    ok = structure and certified and agree and listed
    record(3, "six-dimensional example", ok,
           f"alpha={r.alpha} beta={r.beta}, Z^2 dim {Z2.dim}, Z^3=center: {lcs.term(3) == cen}, "
           f"Z^4 dim {lcs.term(4).dim}; no 4-dim ideal over {no_dim4.patterns} patterns: {certified}; "
           f"maximal ideal counts {counts} (groebner {enum.groebner_count}) = "
           f"{[str(W) for W in enum.ideals]}; the stated list has {len(set(stated))} distinct members")
    assert structure and certified and agree
    assert enum.count == 3


def test_criterion_04_codimension_one_abelian_subalgebras():
    hyp, bad = 0, []
    for e, v, A in catalog.sampled_algebras():
        rep = check_theorem_2_1(A)
        if rep.hypotheses:
            hyp += 1
            if not rep.conclusion:
                bad.append(A.name)
    ok = hyp > 0 and not bad
    record(4, "codimension-one abelian subalgebras are ideals", ok, f"{hyp} algebras with alpha = n-1, exceptions: {bad}")
    assert ok


def test_criterion_05_supersolvable_beta_bound():
    hyp, bad, betas = 0, [], {}
    targets = [A for _, _, A in catalog.sampled_algebras()]
    for A in targets:
        rep = check_theorem_3_1(A)
        if rep.hypotheses:
            hyp += 1
            betas[A.name] = A.dim - rep.details["beta"]
            if not rep.conclusion:
                bad.append(A.name)
    ex = check_theorem_3_1(catalog.example_3_1(), groebner=True)
    realizes_n2 = betas.get("Z5_12") == 2
    realizes_n3 = ex.hypotheses and ex.conclusion and ex.details["beta"] == 3
    ok = hyp > 0 and not bad and realizes_n2 and realizes_n3
    record(5, "supersolvable beta bound", ok, f"{hyp} supersolvable algebras with alpha = n-2, exceptions {bad}; "
                                 f"Z5_12 beta = n-2: {realizes_n2}; example beta = n-3: {realizes_n3}")
    assert ok


@pytest.fixture(scope="module")
def filiform_reports():
    # the filiform variants are checked up to n = 8, so only NF_9 is needed at n = 9
    return {n: {r.algebra: r for r in check_filiform_props(n, variants=(0,) if n == 9 else (0, 1, 2, 3))}
            for n in range(3, 10)}


def test_criterion_06_null_filiform(filiform_reports):
    rows, ok = [], True
    for n in range(3, 10):
        r = filiform_reports[n][f"NF_{n}"]
        d = r.details
        counts = list(d["ideal_counts"].values()) + list(d["degenerate_counts"].values())
        stated = Subspace.coordinate(range(n // 2 + 1, n + 1), n)
        good = (r.conclusion and d["alpha"] == d["beta"] == n - n // 2 and set(counts) == {1}
                and d["stated_ideal"] == stated and (n > 5 or d["grade"] == "groebner"))
        ok = ok and good
        rows.append(f"n={n}: {d['alpha']}|{d['beta']} counts {d['ideal_counts']} {d['degenerate_counts']} "
                    f"{d['grade']}")
    record(6, "null-filiform invariants and unique ideal", ok, "; ".join(rows))
    assert ok


def test_criterion_07_filiform(filiform_reports):
    rows, failures = [], []
    for n in range(4, 9):
        for v in (1, 2, 3):
            r = filiform_reports[n][f"F_{n}^{v}"]
            d = r.details
            rows.append(f"F_{n}^{v}: {d['alpha']}|{d['beta']} stated dim {d['stated_dim']} "
                        f"readings {d['reading_1']}/{d['reading_2']} unique {d['unique']}")
            if not r.conclusion:
                failures.append(f"F_{n}^{v} (counts {d['ideal_counts']})")
    ok = not failures
    record(7, "filiform invariants and unique ideal", ok, "; ".join(rows) + f"; failing: {failures}")
    assert ok


def test_criterion_08_normal_form_soundness():
    rng = random.Random(SEED)
    algebras = [A for _, _, A in catalog.sampled_algebras()]
    bad = []
    for A in algebras:
        bad += [(A.name, expr) for expr, _ in normal_form_mismatches(A, (3, 4, 5), rng, environments=10)]
    ok = not bad
    record(8, "normal form soundness", ok,
           f"{len(algebras)} algebras x 21 bracketings x 10 environments, {len(bad)} disagreements")
    assert ok


def test_criterion_09_nilpotency():
    rng = random.Random(SEED)
    checked, bad = 0, []
    for _, _, A in catalog.sampled_algebras():
        m = nilpotency_index(A)
        if m is None or m > 5:
            continue
        checked += 1
        found = nonzero_basis_products(A, m, rng, None if A.dim <= 4 else 500)
        if found:
            bad.append((A.name, found[0]))
    ok = checked > 0 and not bad
    record(9, "nilpotency corollary", ok, f"{checked} algebras with index <= 5, nonzero products: {bad}")
    assert ok


def test_criterion_10_enumeration_counts():
    wrong = [(n, d, p) for p in (2, 3, 5) for n in range(0, 7) for d in range(0, n + 1)
             if count_subspaces_fp(n, d, p) != q_pascal(n, d, p)]
    ok = not wrong
    record(10, "enumeration completeness", ok, f"n <= 6, d <= n, p in {{2,3,5}}; wrong: {wrong}")
    assert ok


def test_criterion_11_groebner_self_check():
    emitted = 0
    unverified = []
    for e in catalog.all_entries():
        if e.dim > 4:
            continue
        A = e.build(e.samples()[0])
        for d in range(1, A.dim):
            for ps in pattern_systems(A, d):
                for ideal in (False, True):
                    F = ps.polys(ideal)
                    if not F:
                        continue
                    G = buchberger(F, verify=False)
                    emitted += 1
                    closed = all(reduce(s_polynomial(g, h), G.polys).is_zero()
                                 for g, h in itertools.combinations(G.polys, 2))
                    member = all(reduce(f, G.polys).is_zero() for f in F)
                    if not (closed and member):
                        unverified.append((A.name, ps.pivots, ideal))
    rng = random.Random(SEED)
    disagreements, compared = [], 0
    for k in range(50):
        nv = rng.randint(1, 3)
        F = random_system(rng, nv, rng.randint(2, 4))
        res = is_infeasible(F)
        for p in (2, 3, 5):
            if res.basis is None or not res.basis.specializes_mod(p):
                continue
            compared += 1
            if res.infeasible and fp_solutions(F, nv, p):
                disagreements.append((k, p))
    ok = not unverified and not disagreements and compared > 0
    record(11, "Groebner self-check", ok,
           f"{emitted} catalog bases re-verified, {len(unverified)} failures; {compared} random "
           f"system/prime comparisons, {len(disagreements)} disagreements")
    assert ok


def test_criterion_12_maximal_subalgebras():
    hyp, bad = 0, []
    for e, v, A in catalog.sampled_algebras(e for e in catalog.all_entries() if e.dim <= 4):
        rep = check_lemma_3_1(A, primes=(2, 3))
        if rep.hypotheses:
            hyp += 1
            if rep.conclusion is not True:
                bad.append((A.name, rep.details.get("maximal_dims")))
    ok = hyp > 0 and not bad
    record(12, "maximal subalgebras have codimension one", ok, f"{hyp} supersolvable algebras scanned over F2 and F3, exceptions {bad}")
    assert ok
