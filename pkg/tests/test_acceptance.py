"""Acceptance criteria 1-11.

Each test prints one ``criterion N: PASS|FAIL`` line (visible under
``pytest -v``, and collected again in the terminal summary) before it
asserts.  Criteria that cannot be met as stated are checked exactly as
stated and left failing; the reasons are in the printed detail.
"""
import math
import random
import time
from fractions import Fraction

import pytest

from chorbifold import bisectors, cli, cutdisk, grouptheory as gt, reference, reps
from chorbifold.bisectors import IntersectionKind
from chorbifold.chgeom import CollinearInput, HermitianVector, box, herm
from chorbifold.numfield import AlgebraicNumber, RealAlgebraic, pretty

RESULTS = {}


@pytest.fixture
def criterion(capsys):
    def record(n, ok, detail=""):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        RESULTS[n] = line
        with capsys.disabled():
            print("\n" + line)
        return ok
    return record


@pytest.fixture(scope="module")
def full_table():
    bs = dict(bisectors.dirichlet_bisectors())
    bs["C"] = bisectors.bisector_c()
    t0 = time.perf_counter()
    table = bisectors.intersection_table(bs)
    return table, time.perf_counter() - t0


def _fresh_cutdisk():
    cutdisk._OCTAGON = None
    cutdisk._QUADRICS.clear()


# 1 ----------------------------------------------------------------------------------

def test_criterion_01_group_relations(criterion):
    t0 = time.perf_counter()
    checks = reps.relation_checks()
    elapsed = time.perf_counter() - t0
    wanted = checks
    bad = [c.name for c in wanted if not c.holds]
    ok = not bad and elapsed < 1.0
    detail = f"{len(wanted) - len(bad)}/{len(wanted)} exact identities in {elapsed:.2f}s"
    if bad:
        detail += "; failing as maps: " + ", ".join(bad) + " (the conjugates equal the inverses)"
    criterion(1, ok, detail)
    assert ok


# 2 ----------------------------------------------------------------------------------

def test_criterion_02_intersection_pattern(criterion, full_table):
    table, elapsed = full_table
    dirichlet = set(bisectors.dirichlet_bisectors())
    row_b0 = table.row("B0") & dirichlet
    row_b6 = table.row("B6") & dirichlet
    row_c = table.row("C")
    evidence = all(r.sound() for r in table.results.values())
    ok_b0 = row_b0 == reference.ROW_B0 and table.kind("B0", "B0b") is IntersectionKind.ComplexGeodesic
    ok_b6 = row_b6 == reference.ROW_B6
    ok_c = row_c == reference.ROW_C
    ok = ok_b0 and ok_b6 and ok_c and evidence and elapsed < 300
    detail = (f"B0 row {'ok' if ok_b0 else 'differs'}, B6 row {'ok' if ok_b6 else 'differs'}, "
              f"C meets {len(row_c)} (listed {len(reference.ROW_C)}), evidence sound: {evidence}, "
              f"{elapsed:.1f}s")
    criterion(2, ok, detail)
    assert ok


# 3 ----------------------------------------------------------------------------------

def test_criterion_03_witness_norms(criterion):
    p0 = reference.WITNESSES["B0b"].norm()
    norms = {k: w.norm() for k, w in reference.WITNESSES.items()}
    ok = p0 == -9 and all(n.sign() < 0 for n in norms.values())
    criterion(3, ok, f"<p0b,p0b> = {pretty(p0)}; all {len(norms)} witnesses negative: "
                     f"{all(n.sign() < 0 for n in norms.values())}")
    assert ok


# 4 ----------------------------------------------------------------------------------

def test_criterion_04_discriminant_expansion(criterion):
    d = bisectors.discriminant_comparison(reference.DISCRIMINANT_C_B0)
    ok = d.equal and d.derived_positive
    detail = f"{len(d.differences())} coefficients differ; derived positive: {d.derived_positive}"
    if not ok:
        detail += "; derived = " + " + ".join(f"({pretty(a)})·{m}" for m, a in d.derived.terms())
    criterion(4, ok, detail)
    assert ok


# 5 ----------------------------------------------------------------------------------

def test_criterion_05_table3(criterion):
    _fresh_cutdisk()
    rows = cutdisk.table3_comparison()
    good = [r.label for r in rows if r.matches]
    ok = len(good) == len(rows)
    criterion(5, ok, f"{len(good)}/{len(rows)} rows match exactly ({', '.join(good)}); "
                     "the others are mirror images of the derived traces")
    assert ok


# 6 ----------------------------------------------------------------------------------

def _close(vals, target, tol=1e-5):
    return all(abs(a - float(b)) < tol for a, b in zip(vals, target))


def test_criterion_06_octagon_numerics(criterion):
    _fresh_cutdisk()
    t0 = time.perf_counter()
    oc = cutdisk.octagon()
    v = next(v for v in oc.vertices if set(v.labels) == {"B0b", "B11"})
    rejected = [c for c in cutdisk.vertex_candidates("B0b", "B11") if c.status == "rejected"]
    elapsed = time.perf_counter() - t0
    v_ok = _close(v.approx(), reference.VERTEX_B0B_B11)
    r_ok = any(_close(c.approx(), reference.REJECTED_B0B_B11) for c in rejected)
    bounds = sorted({float(e) for s in oc.segments for e in (s.lo, s.hi)})
    want = [float(x) for x in reference.ENDPOINTS]
    e_ok = all(any(abs(b - s * w) < 1e-5 for b in bounds) for w in want for s in (1, -1))
    ok = v_ok and r_ok and e_ok and elapsed < 60
    criterion(6, ok, f"vertex {v_ok}, rejected candidate {r_ok}, endpoints {e_ok}, {elapsed:.1f}s")
    assert ok


# 7 ----------------------------------------------------------------------------------

def test_criterion_07_critical_points(criterion):
    _fresh_cutdisk()
    t0 = time.perf_counter()
    b0 = cutdisk.critical_points("B0b")
    match = len(b0) == 2 and all(any(_close(c.approx(), w) for c in b0) for w in reference.CRITICAL_B0B)
    outside = {}
    for lab in reference.OCTAGON_CYCLE:
        outside[lab] = all(c.outside for c in cutdisk.critical_points(lab))
    elapsed = time.perf_counter() - t0
    ok = match and all(outside.values()) and elapsed < 300
    criterion(7, ok, f"B0b points match {match}; outside for all eight traces: {all(outside.values())}; "
                     f"{elapsed:.1f}s")
    assert ok


# 8 ----------------------------------------------------------------------------------

def test_criterion_08_phi_audit(criterion):
    oc = cutdisk.octagon()
    audit = cutdisk.phi_audit(oc)
    consistent = [a.index for a in audit if a.consistent]
    # every mismatch lists the printed and the derived polynomial side by side
    comparisons = [n for a in audit for n in a.notes if n.startswith(("denominator", "a differs", "b differs"))]
    formatted = all("printed" in n and "derived" in n for n in comparisons)
    formatted = formatted and all(a.notes for a in audit if not a.consistent)
    # the derived parametrizations are exact on the derived quadrics
    exact = all(r[1] for r in cutdisk.substitution_check(oc, samples=25))
    verdict, _ = cli.claim_phi(cli.Context())
    ok = formatted and exact and verdict in (cli.VERIFIED, cli.DISCREPANCY)
    criterion(8, ok, f"items agreeing verbatim: {consistent}; others reported as {verdict}")
    assert ok


# 9 ----------------------------------------------------------------------------------

def test_criterion_09_presentations(criterion):
    t0 = time.perf_counter()
    steps = gt.eliminate_chain()
    seven = steps[-1]
    ab7 = gt.abelianization(seven)
    ab_s = gt.abelianization(gt.magma_presentation("s1"))
    ab_l = gt.abelianization(gt.link_presentation_simplified())
    abel_ok = len(seven.gens) == 7 and ab7 == ab_s == ab_l
    rows = gt.chain_table_comparison("z6")
    rows_ok = all(r[3] for r in rows)
    f_ok = gt.check_generator_map(gt.link_presentation(), gt.u_presentation(), gt.F_MAP).homomorphism
    elapsed = time.perf_counter() - t0
    ok = abel_ok and rows_ok and f_ok and elapsed < 10
    missing = [r[0] for r in rows if not r[3]]
    criterion(9, ok, f"abelianizations {ab7} agree: {abel_ok}; Wirtinger rows {len(rows) - len(missing)}/"
                     f"{len(rows)} (not: {missing}); f resolves all: {f_ok}; {elapsed:.1f}s")
    assert ok


# 10 ---------------------------------------------------------------------------------

# computed once with gt.brute_force_class_count (index 4) and the enumerator (1-3)
FROZEN_COUNTS = {1: 1, 2: 0, 3: 364, 4: 194}


def test_criterion_10_low_index(criterion):
    t0 = time.perf_counter()
    q = gt.whitehead_filling()
    classes = len(gt.low_index_subgroups(q, 6))
    table = gt.todd_coxeter(q, gt.SUBGROUP_Q, max_cosets=100000)
    rs = gt.reidemeister_schreier(q, table)
    orb = gt.orbifold_edge_presentation()
    ab_ok = gt.abelianization(rs) == gt.abelianization(orb)
    rs_counts = gt.low_index_counts(rs, 4)
    orb_counts = gt.low_index_counts(orb, 4)
    elapsed = time.perf_counter() - t0
    ok = (classes == 11 and table.index == 6 and ab_ok and rs_counts == orb_counts == FROZEN_COUNTS
          and elapsed < 600)
    criterion(10, ok, f"{classes} classes, index {table.index}, abelianization {ab_ok}, "
                      f"counts {rs_counts}, {elapsed:.1f}s")
    assert ok


# 11 ---------------------------------------------------------------------------------

def _random_real(rng):
    cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) if rng.random() < 0.6 else Fraction(0)
          for _ in range(8)]
    return RealAlgebraic.from_coeffs(cs)


def _random_number(rng):
    return AlgebraicNumber(_random_real(rng), _random_real(rng))


def _field_axioms(n, rng):
    for _ in range(n):
        a, b, c = (_random_number(rng) for _ in range(3))
        if not ((a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
                and a * (b + c) == a * b + a * c and a * b == b * a and a + b == b + a):
            return False
        if not a.is_zero() and not (a * a.inverse()) == 1:
            return False
    return True


def _box_orthogonality(n, rng):
    for _ in range(n):
        u = HermitianVector([_random_number(rng) for _ in range(3)])
        v = HermitianVector([_random_number(rng) for _ in range(3)])
        try:
            w = box(u, v)
        except CollinearInput:
            continue
        if not (herm(w, u).is_zero() and herm(w, v).is_zero()):
            return False
    return True


def _certificate_grid(table, n=64):
    for r in table.results.values():
        if r.kind is not IntersectionKind.Empty:
            continue
        c = r.certificate
        if not c.valid:
            return False
        F = c.discriminant
        for k in range(n):
            z = bisectors.circle_point(2 * math.pi * k / n)
            if F.exact(z.re, z.im).sign() <= 0:
                return False
    return True


def test_criterion_11_property_suites(criterion, full_table):
    rng = random.Random(20261014)
    fa = _field_axioms(10_000, rng)
    bo = _box_orthogonality(1_000, rng)
    cg = _certificate_grid(full_table[0])
    jc = all(r[2] for r in cutdisk.jordan_check(cutdisk.octagon()))
    ok = fa and bo and cg and jc
    criterion(11, ok, f"field axioms {fa}, box orthogonality {bo}, certificate grid {cg}, Jordan boxes {jc}")
    assert ok
