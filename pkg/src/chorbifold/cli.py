"""Command-line front end.

Every subcommand prints a plain-text report on standard output; progress
for the slower steps goes to standard error.  Exit status is 0 when every
check passed, 1 when something failed and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__

VERIFIED = "Verified"
DISCREPANCY = "VerifiedWithDiscrepancy"
FAILED = "Failed"
SKIPPED = "Skipped"


class UsageError(Exception):
    pass


def progress(msg):
    print(msg, file=sys.stderr, flush=True)


# --- claim reports ---------------------------------------------------------------

@dataclass
class ClaimReport:
    claim: str
    location: str
    verdict: str
    details: list = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self):
        # no timings here: the summary must be reproducible byte for byte
        return {"claim": self.claim, "location": self.location, "verdict": self.verdict,
                "details": list(self.details)}


class Context:
    """Shared settings plus a cache for expensive intermediate objects."""

    def __init__(self, precision=6, max_cosets=100000):
        self.precision = precision
        self.max_cosets = max_cosets
        self._cache = {}

    def get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def dec(self, x):
        from .numfield import to_decimal
        return to_decimal(x, self.precision)


def _verdict(ok, discrepancy=False):
    if not ok:
        return FAILED
    return DISCREPANCY if discrepancy else VERIFIED


# each claim: (id, group, location, function(ctx) -> (verdict, details))

def claim_relations(ctx):
    from . import reps
    rel = reps.relation_checks()
    literal_bad = [c.name for c in rel if not c.holds]
    core_ok = all(c.holds for c in rel if not c.name.startswith(("τ0 γ", "σ0 γ")))
    inv_ok = all(c.holds for c in reps.symmetry_inverse_checks())
    mat_ok = all(c.holds for c in reps.plain_matrix_conjugation_checks())
    details = [f"{sum(c.holds for c in rel)}/{len(rel)} relations hold for the isometries"]
    if literal_bad:
        details.append("fail as maps: " + ", ".join(literal_bad))
        details.append("hold with inverted images (τ0γkτ0 = γ(5-k)⁻¹, σ0γkσ0 = γ(6-k)⁻¹): " + str(inv_ok))
        details.append("hold for the plain matrix products T·G·T and S·G·S: " + str(mat_ok))
    return _verdict(core_ok and inv_ok and mat_ok, bool(literal_bad)), details


def claim_symmetries(ctx):
    from . import reps
    printed = reps.symmetry_checks()
    derived = reps.symmetry_checks(derived=True)
    verts = reps.vertex_checks()
    details = [f"{c.name}: {'holds' if c.holds else c.detail}" for c in printed]
    details += [f"{c.name} with inverse labels: {'holds' if c.holds else c.detail}" for c in derived]
    details.append(f"{sum(c.holds for c in verts)}/{len(verts)} vertex identities hold")
    ok = all(c.holds for c in derived + verts)
    return _verdict(ok, not all(c.holds for c in printed)), details


def _row_claim(ctx, center):
    from . import bisectors, reference
    bs = bisectors.dirichlet_bisectors()
    expected = {"B0": reference.ROW_B0, "B6": reference.ROW_B6}[center]
    t = ctx.get(("row", center), lambda: bisectors.row_table(center, bs))
    got = t.row(center)
    sound = all(t.get(center, b).sound() for b in bs if b != center)
    details = [f"meets {len(got)}: " + ", ".join(sorted(got))]
    if got != expected:
        details.append("expected " + ", ".join(sorted(expected)))
    if center == "B0":
        details.append(f"B0 ∩ B0b: {t.kind('B0', 'B0b').value}")
    details.append("every Empty verdict carries a valid Sturm certificate" if sound else "unsound evidence")
    kind_ok = center != "B0" or t.kind("B0", "B0b").value == "ComplexGeodesic"
    return _verdict(got == expected and sound and kind_ok), details


def claim_row_b0(ctx):
    return _row_claim(ctx, "B0")


def claim_row_b6(ctx):
    return _row_claim(ctx, "B6")


def claim_row_c(ctx):
    from . import bisectors, reference
    t = ctx.get(("row", "C"), bisectors.c_row)
    got = t.row("C")
    details = [f"C meets {len(got)} of 24 bisectors in H²"]
    expected = reference.ROW_C
    if got != expected:
        details.append("listed: " + ", ".join(sorted(expected)))
        details.append("the listed eight are the traces bounding the octagon on ∂C (see the octagon claim)")
    return _verdict(got == expected), details


def claim_witnesses(ctx):
    from . import bisectors, reference
    from .numfield import pretty
    reps_ = bisectors.witness_reports(reference.WITNESSES)
    p0 = reference.WITNESSES["B0b"].norm()
    details = [f"<p0b, p0b> = {pretty(p0)}"]
    bad = []
    for r in reps_:
        line = f"{r.label}: norm {ctx.dec(r.norm)}, on C∩{r.label}: {r.on_pair}"
        if not r.on_pair:
            line += f", after flipping Im of the first coordinate: {r.corrected_on_pair}"
            bad.append(r.label)
        if r.also_on:
            line += ", also on " + ", ".join(r.also_on)
        details.append(line)
    ok = p0 == -9 and all(r.negative for r in reps_) and all(r.on_pair or r.corrected_on_pair for r in reps_)
    return _verdict(ok, bool(bad)), details


def claim_chart(ctx):
    from . import bisectors, reference
    from .numfield import pretty
    cmp_ = bisectors.chart_comparison(reference.CHART_C_B0)
    details = []
    for c in cmp_:
        if c.equal:
            details.append(f"v{c.index} matches")
        else:
            details.append(f"v{c.index} differs: derived " + ", ".join(pretty(x) for x in c.derived.coords)
                           + "; printed " + ", ".join(pretty(x) for x in c.printed.coords))
    return _verdict(True, not all(c.equal for c in cmp_)), details


def claim_discriminant(ctx):
    from . import bisectors, reference
    from .numfield import pretty
    d = bisectors.discriminant_comparison(reference.DISCRIMINANT_C_B0)
    details = [f"scale {d.scale} cleared",
               "derived: " + " + ".join(f"({pretty(a)})·{m}" for m, a in d.derived.terms()),
               "printed: " + " + ".join(f"({pretty(a)})·{m}" for m, a in d.printed.terms()),
               f"derived positive on the circle: {d.derived_positive}",
               f"printed positive on the circle: {d.printed_positive}"]
    return _verdict(d.equal and d.derived_positive), details


def claim_coordinates(ctx):
    from . import cutdisk
    checks = cutdisk.coordinate_change_checks()
    details = [f"{c.name}: {c.holds}" for c in checks]
    core = [c for c in checks if not c.name.startswith("printed")]
    printed_ok = all(c.holds for c in checks if c.name.startswith("printed"))
    return _verdict(all(c.holds for c in core), not printed_ok), details


def claim_table3(ctx):
    from . import cutdisk
    from .numfield import pretty
    rows = cutdisk.table3_comparison()
    details = []
    for r in rows:
        if r.matches:
            details.append(f"{r.label}: matches (scale {pretty(r.scale)})")
        elif r.mirror_scale is not None:
            details.append(f"{r.label}: printed row is the t3 -> -t3 mirror (scale {pretty(r.mirror_scale)})")
        else:
            details.append(f"{r.label}: differs in " + ", ".join(r.mismatched))
    mirrors = cutdisk.mirror_checks()
    details.append("mirror pairs: " + ", ".join(f"{a}↔{b}" for a, b, s in mirrors if s is not None))
    ok = all(s is not None for _, _, s in mirrors)
    return _verdict(ok, not all(r.matches for r in rows)), details


def _near(values, target, tol=1e-5):
    return all(abs(a - float(b)) < tol for a, b in zip(values, target))


def claim_octagon(ctx):
    from . import cutdisk, reference
    oc = ctx.get("octagon", cutdisk.octagon)
    details = []
    for v in oc.vertices:
        details.append("/".join(v.labels) + ": (" + ", ".join(v.decimals(ctx.precision)) + ")")
    v = next(v for v in oc.vertices if set(v.labels) == {"B0b", "B11"})
    vok = _near(v.approx(), reference.VERTEX_B0B_B11)
    rej = [c for c in cutdisk.vertex_candidates("B0b", "B11") if c.status == "rejected"]
    rok = any(_near(c.approx(), reference.REJECTED_B0B_B11) for c in rej)
    details += [f"rejected B0b/B11 candidate: (" + ", ".join(c.decimals(ctx.precision)) + f") {c.reason}"
                for c in rej]
    ends = oc.endpoints()
    want = [float(x) for x in reference.ENDPOINTS]
    want = sorted(want + [-x for x in want])
    eok = all(any(abs(e - w) < 1e-5 for e in ends) for w in want)
    details.append("arc endpoints (t3): " + ", ".join(f"{e:.6f}" for e in ends))
    jc = cutdisk.jordan_check(oc)
    jok = all(ok for *_, ok, _ in jc)
    details.append(f"Jordan check: {sum(ok for *_, ok, _ in jc)}/{len(jc)} segment pairs certified")
    ec = cutdisk.endpoint_consistency(oc)
    bt = cutdisk.boundary_in_T_check(oc)
    sc = cutdisk.substitution_check(oc)
    others = all(ok for _, ok in ec) and all(ok for _, ok in bt) and all(r[1] for r in sc)
    details.append(f"vertices exact on both traces, arcs inside T, substitution residuals: {others}")
    return _verdict(vok and rok and eok and jok and others), details


def claim_critical(ctx):
    from . import cutdisk, reference
    details = []
    ok = True
    b0 = None
    for lab in reference.OCTAGON_CYCLE:
        cps = cutdisk.critical_points(lab)
        if lab == "B0b":
            b0 = cps
        for c in cps:
            details.append(f"{lab}: (" + ", ".join(c.decimals(ctx.precision)) + f") outside: {c.outside}, "
                           f"{c.reason}, winding {c.winding}")
            ok = ok and c.outside and c.winding == 0
    want = reference.CRITICAL_B0B
    got = [c.approx() for c in b0]
    match = len(got) == len(want) and all(any(_near(g, w) for g in got) for w in want)
    return _verdict(ok and match), details


def claim_phi(ctx):
    from . import cutdisk
    from .numfield import pretty
    oc = ctx.get("octagon", cutdisk.octagon)
    audit = cutdisk.phi_audit(oc)
    details = []
    for a in audit:
        if a.consistent:
            details.append(f"φ{a.index} ({a.label}): agrees (scale {pretty(a.scale)})")
        else:
            for n in a.notes:
                details.append(f"φ{a.index} ({a.label}): {n}")
    # the quadric-level check is binding; formula typos are discrepancies
    return _verdict(True, not all(a.consistent for a in audit)), details


def claim_presentations(ctx):
    from . import grouptheory as gt
    steps = gt.eliminate_chain()
    last = steps[-1]
    ab = gt.abelianization(steps[0])
    dir7 = gt.dirichlet_presentation()
    match = len(last.relators) == len(dir7.relators) and all(
        any(gt.same_relator(r, s) for s in dir7.relators) for r in last.relators)
    details = [f"{len(steps[0].gens)} generators, {len(steps[0].relators)} relators: {ab}",
               f"after eliminating g6..g11: {len(last.gens)} generators, {len(last.relators)} relators, "
               f"{gt.abelianization(last)}; equals the printed seven-generator form: {match}"]
    sform = gt.abelianization(gt.magma_presentation("s1"))
    lform = gt.abelianization(gt.link_presentation_simplified())
    details.append(f"s-form {sform}, t-form {lform}")
    readings = gt.s_reading_report()
    details.append("s readings consistent with the ridge presentation: "
                   + ", ".join(r for r, _, ok in readings if ok))
    ok = match and ab == gt.abelianization(last) == sform == lform
    return _verdict(ok, not readings[-1][2]), details


def claim_rewritten(ctx):
    from . import grouptheory as gt
    base = ctx.get("counts-ridge", lambda: gt.low_index_counts(gt.orbifold_edge_presentation(), 4))
    details = []
    ok = True
    for p in (gt.magma_presentation("s1"), gt.u_presentation(),
              gt.link_presentation_simplified(), gt.link_presentation()):
        ev = gt.compare_groups(gt.orbifold_edge_presentation(), p, 4, counts=base)
        details.append(f"{p.name}: {ev.verdict}")
        ok = ok and ev.consistent
    return _verdict(ok), details


def claim_wirtinger(ctx):
    from . import grouptheory as gt
    rows = gt.chain_table_comparison("z6")
    d = gt.chain_link("z6")
    w = gt.wirtinger(d)
    ab = gt.abelianization(w)
    k = len(d.components())
    details = [f"{sum(r[3] for r in rows)}/{len(rows)} table rows reproduced"]
    details += [f"row {k} printed {text} does not come from any crossing; derived {derived}"
                for k, text, derived, ok in rows if not ok]
    details.append(f"{k} components, H1 = {ab}")
    wt = gt.add_torsion(w, 3)
    ev = gt.compare_groups(gt.orbifold_edge_presentation(), wt, 4,
                           counts=ctx.get("counts-ridge",
                                          lambda: gt.low_index_counts(gt.orbifold_edge_presentation(), 4)))
    details.append(f"with order-3 meridians: {ev.verdict}")
    ok = ab.free_rank == k and not ab.torsion and ev.consistent
    return _verdict(ok, not all(r[3] for r in rows)), details


def claim_generator_map(ctx):
    from . import grouptheory as gt
    rep = gt.check_generator_map(gt.link_presentation(), gt.u_presentation(), gt.F_MAP)
    c = rep.counts()
    details = [f"f: {c[gt.MATCHES]} matched, {c[gt.TRIVIAL]} trivial, {c[gt.UNRESOLVED]} unresolved"]
    inv = {v: k for k, v in gt.F_MAP.items()}
    back = gt.check_generator_map(gt.u_presentation(), gt.link_presentation(), inv)
    details.append(f"f⁻¹ resolves every relator: {back.homomorphism}")
    return _verdict(rep.homomorphism), details


def claim_low_index_q(ctx):
    from . import grouptheory as gt
    reps_ = gt.low_index_subgroups(gt.whitehead_filling(), 6)
    return _verdict(len(reps_) == 11), [f"{len(reps_)} conjugacy classes of index-6 subgroups"]


def claim_subgroup_q(ctx):
    from . import grouptheory as gt
    table = gt.q_subgroup_table(ctx.max_cosets)
    details = [f"Todd-Coxeter index {table.index}"]
    rs = gt.reidemeister_schreier(gt.whitehead_filling(), table, simplify_result=True)
    details.append(f"Reidemeister-Schreier: {len(rs.gens)} generators, {len(rs.relators)} relators")
    base = ctx.get("counts-ridge", lambda: gt.low_index_counts(gt.orbifold_edge_presentation(), 4))
    ev = gt.compare_groups(gt.orbifold_edge_presentation(), rs, 4, counts=base)
    details.append(f"abelianizations {ev.abelian[0]} and {ev.abelian[1]}")
    details.append("index 1-4 class counts " + json.dumps(ev.counts[0]) + " and " + json.dumps(ev.counts[1]))
    details.append(ev.verdict)
    return _verdict(table.index == 6 and ev.consistent), details


CLAIMS = [
    ("relations", "group", "generators and relations of the representation", claim_relations),
    ("symmetries", "group", "symmetry table", claim_symmetries),
    ("row-B0", "intersections", "B0 meets exactly nine bisectors", claim_row_b0),
    ("row-B6", "intersections", "B6 meets exactly seven bisectors", claim_row_b6),
    ("row-C", "intersections", "the bisectors meeting C", claim_row_c),
    ("witnesses", "intersections", "negative witnesses on C", claim_witnesses),
    ("chart-C-B0", "intersections", "Giraud vectors of (C, B0)", claim_chart),
    ("discriminant-C-B0", "intersections", "ν² − |μ|² for (C, B0)", claim_discriminant),
    ("coordinates", "octagon", "coordinate change on ∂C", claim_coordinates),
    ("table3", "octagon", "traces of the Dirichlet bisectors on ∂C", claim_table3),
    ("octagon", "octagon", "the cutting octagon", claim_octagon),
    ("critical-points", "octagon", "critical points lie outside the octagon", claim_critical),
    ("phi", "octagon", "arc parametrizations", claim_phi),
    ("presentations", "presentations", "presentation chain for the orbifold group", claim_presentations),
    ("rewritten-forms", "presentations", "rewritten presentations", claim_rewritten),
    ("wirtinger", "presentations", "relations of the chain-link complement", claim_wirtinger),
    ("map-f", "presentations", "the map between the link and orbifold forms", claim_generator_map),
    ("low-index-Q", "subgroups", "eleven index-6 subgroups of π1(Q)", claim_low_index_q),
    ("subgroup-Q", "subgroups", "the index-6 subgroup of π1(Q)", claim_subgroup_q),
]
CLAIM_GROUPS = sorted({g for _, g, _, _ in CLAIMS})


def reproduce_paper(only=None, precision=6, max_cosets=100000, report=progress):
    """Run the checklist (or the part selected by ``only``); returns (reports, exit code)."""
    ctx = Context(precision, max_cosets)
    selected = set(only or ())
    known = {c[0] for c in CLAIMS} | set(CLAIM_GROUPS)
    unknown = selected - known
    if unknown:
        raise UsageError("unknown claim or group: " + ", ".join(sorted(unknown)))
    out = []
    chosen = [c for c in CLAIMS if not selected or c[0] in selected or c[1] in selected]
    n = 0
    for c in CLAIMS:
        cid, _, where, fn = c
        if c not in chosen:
            out.append(ClaimReport(cid, where, SKIPPED, ["not selected"]))
            continue
        n += 1
        if report:
            report(f"[{n}/{len(chosen)}] {cid}")
        t0 = time.perf_counter()
        try:
            verdict, details = fn(ctx)
        except Exception as exc:  # captured into the report, never fatal
            verdict, details = FAILED, [f"{type(exc).__name__}: {exc}"]
        out.append(ClaimReport(cid, where, verdict, details, time.perf_counter() - t0))
    code = 1 if any(r.verdict == FAILED for r in out) else 0
    return out, code


def format_reports(reports):
    lines = []
    for r in reports:
        lines.append(f"{r.claim:<18} {r.verdict:<24} {r.location}")
        if r.verdict != SKIPPED:
            lines.extend("    " + d for d in r.details)
    counts = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    lines.append("summary: " + ", ".join(f"{v} {counts[v]}" for v in (VERIFIED, DISCREPANCY, FAILED, SKIPPED)
                                         if v in counts))
    return "\n".join(lines)


def reports_json(reports, extra=None):
    doc = {"version": __version__,
           "timestamp": datetime.datetime.now(datetime.timezone.utc).replace(microsecond=0).isoformat(),
           "claims": [r.to_json() for r in reports]}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# --- presentation sources ------------------------------------------------------------

def _builtins():
    from . import grouptheory as gt
    table = {
        "ridge": gt.orbifold_edge_presentation,
        "seven": gt.dirichlet_presentation,
        "u-form": gt.u_presentation,
        "link": gt.link_presentation_simplified,
        "link-rewritten": gt.link_presentation,
        "Q": gt.whitehead_filling,
        "G63": gt.polygon_group,
        "H63": gt.polygon_supergroup,
        "chain": lambda: gt.wirtinger(gt.chain_link("z6")),
        "chain-z5": lambda: gt.wirtinger(gt.chain_link("z5")),
    }
    for r in gt.S_READINGS:
        table[f"s-form:{r}"] = (lambda r=r: gt.magma_presentation(r))
    table["s-form"] = table["s-form:s1"]
    return table


def load_source(src):
    """A presentation from a file path or a built-in name."""
    from . import grouptheory as gt
    if os.path.exists(src):
        try:
            return gt.load_presentation(src)
        except ValueError as exc:
            raise UsageError(f"{src}: {exc}")
    b = _builtins()
    if src in b:
        return b[src]()
    raise UsageError(f"no such file or built-in presentation: {src} (built-ins: {', '.join(sorted(b))})")


def _subgroup(p, text):
    if not text:
        return ()
    return tuple(w.strip() for w in text.split(",") if w.strip())


# --- subcommands -----------------------------------------------------------------------

def cmd_verify_group(args):
    from . import reps
    sections = [("relations", reps.relation_checks()),
                ("symmetry conjugates as maps (inverted images)", reps.symmetry_inverse_checks()),
                ("symmetry conjugates as matrix products", reps.plain_matrix_conjugation_checks()),
                ("label actions", reps.symmetry_checks() + reps.symmetry_checks(derived=True)),
                ("vertices", reps.vertex_checks())]
    rows = []
    for title, checks in sections:
        print(f"# {title}")
        for c in checks:
            print(f"{'ok  ' if c.holds else 'FAIL'} {c.name}" + (f"  ({c.detail})" if c.detail else ""))
            rows.append({"section": title, "check": c.name, "holds": c.holds, "detail": c.detail})
    if args.json:
        _write(args.json, json.dumps({"checks": rows}, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    return 0 if all(c.holds for c in sections[0][1]) else 1


def _bisector_set(spec, extra):
    from . import bisectors
    bs = bisectors.dirichlet_bisectors()
    out = {}
    names = list(bs) if spec in (None, "all") else [s.strip() for s in spec.split(",") if s.strip()]
    for n in names:
        if n not in bs:
            raise UsageError(f"unknown bisector label {n}")
        out[n] = bs[n]
    for e in extra or ():
        if e == "C":
            out["C"] = bisectors.bisector_c()
        elif e in bs:
            out[e] = bs[e]
        else:
            raise UsageError(f"unknown bisector label {e}")
    return out


def cmd_intersect(args):
    from . import bisectors
    from .numfield import pretty
    if args.pair:
        bs = _bisector_set(",".join(l for l in args.pair if l != "C"), ["C"] if "C" in args.pair else [])
        b1, b2 = bs[args.pair[0]], bs[args.pair[1]]
        if bisectors.cospinal(b1, b2):
            print(f"{args.pair[0]} and {args.pair[1]} are cospinal")
            r = bisectors.classify_pair(b1, b2)
            print(f"kind: {r.kind.value} ({r.detail})")
            return 0
        ch = bisectors.GiraudChart(b1, b2)
        for k, v in enumerate(ch.vectors):
            print(f"v{k} = (" + ", ".join(pretty(x) for x in v.coords) + ")")
        mu, nu = bisectors.mu_nu(ch)
        print("mu(z1) = " + " + ".join(f"({pretty(c)})·z1^{k}" for k, c in sorted(mu.terms.items())))
        print("nu(θ) = " + " + ".join(f"({pretty(a)})·{m}" for m, a in nu.terms()))
        F = ch.discriminant()
        print("nu² - |mu|² = " + " + ".join(f"({pretty(a)})·{m}" for m, a in F.terms()))
        r = bisectors.classify_pair(b1, b2)
        print(f"kind: {r.kind.value}")
        return 0
    bs = _bisector_set(args.set, args.extra)
    pairs = None
    if args.row:
        if args.row not in bs:
            raise UsageError(f"row label {args.row} not in the set")
        pairs = [(args.row, b) for b in bs if b != args.row]

    def tick(n, total, a, b):
        if n % 25 == 0:
            progress(f"pair {n + 1}/{total}: {a}, {b}")

    t = bisectors.intersection_table(bs, pairs, progress=tick)
    csv_text = t.to_csv()
    if args.csv:
        _write(args.csv, csv_text)
    else:
        sys.stdout.write(csv_text)
    for line in t.log():
        print("# " + line)
    if args.row:
        print(f"# {args.row} meets {len(t.row(args.row))}: " + ", ".join(sorted(t.row(args.row))))
    if args.json:
        cells = [{"a": a, "b": b, "kind": r.kind.value} for (a, b), r in sorted(t.results.items()) if a < b]
        _write(args.json, json.dumps({"pairs": cells}, indent=2, sort_keys=True) + "\n")
    sound = all(r.sound() for r in t.results.values())
    return 0 if sound else 1


def cmd_octagon(args):
    from . import cutdisk
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    oc = cutdisk.octagon()
    if args.svg or args.csv:
        cutdisk.emit_figure(args.figure, args.svg, args.csv, samples=args.samples, label=args.bisector)
    ok = True
    print("vertices (t1, t2, t3):")
    for v in oc.vertices:
        print("  " + "/".join(v.labels) + ": (" + ", ".join(v.decimals(args.precision)) + ")")
    print("arcs:")
    for a in oc.arcs:
        print(f"  α{a.index} on {a.label}: " + "; ".join(
            f"{'+' if s.sign > 0 else '-'} branch on t3 ∈ {s.interval_text}" for s in a.segments))
    if args.report:
        jc = cutdisk.jordan_check(oc)
        ec = cutdisk.endpoint_consistency(oc)
        bt = cutdisk.boundary_in_T_check(oc)
        sc = cutdisk.substitution_check(oc)
        print(f"Jordan curve: {sum(r[2] for r in jc)}/{len(jc)} segment pairs certified disjoint")
        print(f"vertices exact on both traces: {all(ok_ for _, ok_ in ec)}")
        print(f"arc interiors inside T: {all(ok_ for _, ok_ in bt)}")
        print(f"arc samples on their quadric and the sphere: {all(r[1] for r in sc)}")
        for a in cutdisk.phi_audit(oc):
            status = "agrees" if a.consistent else "; ".join(a.notes)
            print(f"φ{a.index} ({a.label}): {status}")
        ok = all(r[2] for r in jc) and all(x for _, x in ec) and all(x for _, x in bt) and all(r[1] for r in sc)
    return 0 if ok else 1


def cmd_critical_points(args):
    from . import cutdisk, reference
    lab = args.bisector
    if lab not in reference.OCTAGON_CYCLE:
        raise UsageError(f"{lab} does not bound the octagon ({', '.join(reference.OCTAGON_CYCLE)})")
    cps = cutdisk.critical_points(lab)
    ok = True
    for c in cps:
        print(f"({', '.join(c.decimals(args.precision))}): {'outside' if c.outside else 'NOT separated'}"
              f" ({c.reason}), winding {c.winding}, residual ≤ {c.residual:.1e}")
        ok = ok and c.outside
    if args.svg or args.csv:
        cutdisk.emit_figure("projection", args.svg, args.csv, label=lab)
    return 0 if ok else 1


def cmd_presentations(args):
    from . import grouptheory as gt
    if args.show:
        print(load_source(args.show).format(), end="")
        return 0
    steps = gt.eliminate_chain()
    for (name, edge), p in zip((("", ""),) + gt.ELIMINATION_CHAIN, steps):
        head = f"eliminate {name} via {edge}" if name else "ridge presentation"
        print(f"{head}: {len(p.gens)} generators, {len(p.relators)} relators, {gt.abelianization(p)}")
    for r, ab, ok in gt.s_reading_report():
        print(f"s-form reading {r}^-1: {ab}" + ("  (consistent)" if ok else ""))
    if args.counts:
        base = gt.low_index_counts(steps[0], args.counts)
        for name in ("s-form", "u-form", "link", "link-rewritten", "chain", "chain-z5"):
            p = load_source(name)
            if name.startswith("chain"):
                p = gt.add_torsion(p, 3)
            progress(f"low-index counts for {name}")
            ev = gt.compare_groups(steps[0], p, args.counts, counts=base)
            print(f"{name}: {ev.verdict}")
    return 0


def cmd_low_index(args):
    from . import grouptheory as gt
    p = load_source(args.source)
    if args.index < 1:
        raise UsageError("--index must be at least 1")

    def tick(n):
        progress(f"{n} tables examined")

    reps_ = gt.low_index_subgroups(p, args.index, args.max_count, progress=tick if args.verbose else None)
    print(f"{len(reps_)} conjugacy classes of subgroups of index {args.index} in {p.name or args.source}")
    if args.verbose:
        for t in reps_:
            print(t.format())
    if args.json:
        _write(args.json, json.dumps({"index": args.index, "classes": len(reps_),
                                      "tables": [t.rows for t in reps_]}, sort_keys=True) + "\n")
    return 0


def cmd_abelianize(args):
    from . import grouptheory as gt
    print(gt.abelianization(load_source(args.source)))
    return 0


def cmd_tietze(args):
    from . import grouptheory as gt
    p = load_source(args.source)
    for g in args.eliminate or ():
        if g not in p.gens:
            raise UsageError(f"{g} is not a generator")
        try:
            p = gt.tietze_eliminate(p, g)
        except gt.NotEliminable as exc:
            print(f"cannot eliminate {g}: {exc}", file=sys.stderr)
            return 1
    if args.simplify:
        p = gt.simplify(p)
    print(p.format(), end="")
    return 0


def cmd_wirtinger(args):
    from . import grouptheory as gt
    if os.path.exists(args.source):
        with open(args.source, encoding="utf-8") as fh:
            try:
                d = gt.parse_link_diagram(fh.read(), args.source)
            except (ValueError, gt.InvalidDiagram) as exc:
                raise UsageError(f"{args.source}: {exc}")
    elif args.source in ("chain", "chain-z6", "chain-z5"):
        variant = "z5" if args.source.endswith("z5") else "z6"
        d = gt.chain_link(variant)
    else:
        raise UsageError(f"no such link diagram: {args.source}")
    p = gt.wirtinger(d)
    if args.torsion:
        p = gt.add_torsion(p, args.torsion)
    print(p.format(), end="")
    print(f"# {len(d.components())} components, abelianization {gt.abelianization(p)}")
    if not os.path.exists(args.source):
        for k, text, derived, ok in gt.chain_table_comparison(variant):
            print(f"# row {k}: {'reproduced' if ok else 'not reproduced (printed ' + text + ')'}")
    return 0


def cmd_coset_enum(args):
    from . import grouptheory as gt
    p = load_source(args.source)
    try:
        t = gt.todd_coxeter(p, _subgroup(p, args.subgroup), args.max_cosets)
    except gt.Overflow as exc:
        print(f"coset enumeration overflowed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))
    print(f"index {t.index}")
    if args.table:
        print(t.format())
    return 0


def cmd_rs(args):
    from . import grouptheory as gt
    p = load_source(args.source)
    try:
        t = gt.todd_coxeter(p, _subgroup(p, args.subgroup), args.max_cosets)
    except gt.Overflow as exc:
        print(f"coset enumeration overflowed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))
    q = gt.reidemeister_schreier(p, t, simplify_result=args.simplify)
    print(q.format(), end="")
    print(f"# index {t.index}, abelianization {gt.abelianization(q)}")
    return 0


def cmd_reproduce(args):
    only = [s.strip() for s in args.only.split(",")] if args.only else None
    reports, code = reproduce_paper(only, args.precision, args.max_cosets)
    print(format_reports(reports))
    if args.json:
        _write(args.json, reports_json(reports))
    return code


def build_parser():
    ap = argparse.ArgumentParser(prog="chorbifold", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=6, help="decimal digits in reports (default 6)")
    common.add_argument("--json", metavar="PATH", help="also write a JSON summary")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-group", parents=[common], help="relations of the representation")
    s.set_defaults(func=cmd_verify_group)

    s = sub.add_parser("intersect", parents=[common], help="pairwise bisector intersections")
    s.add_argument("--set", default="all", help="comma-separated Dirichlet labels, or 'all'")
    s.add_argument("--extra", action="append", help="add a bisector (C or a label); repeatable")
    s.add_argument("--row", help="only pairs involving this label")
    s.add_argument("--pair", nargs=2, metavar=("A", "B"), help="print the μ, ν expansion of one pair")
    s.add_argument("--csv", metavar="PATH", help="write the table here instead of standard output")
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("octagon", parents=[common], help="the cutting octagon on ∂C")
    s.add_argument("--svg", metavar="PATH")
    s.add_argument("--csv", metavar="PATH")
    s.add_argument("--figure", choices=("octagon", "arcs", "projection"), default="octagon")
    s.add_argument("--bisector", default="B0b", help="critical points drawn by --figure projection")
    s.add_argument("--samples", type=int, default=256)
    s.add_argument("--report", action="store_true", help="run the certified checks and the φ audit")
    s.set_defaults(func=cmd_octagon)

    s = sub.add_parser("critical-points", parents=[common], help="critical points of one trace")
    s.add_argument("--bisector", required=True)
    s.add_argument("--svg", metavar="PATH")
    s.add_argument("--csv", metavar="PATH")
    s.set_defaults(func=cmd_critical_points)

    s = sub.add_parser("presentations", parents=[common], help="presentation chain and cross-checks")
    s.add_argument("--show", metavar="NAME", help="print one presentation in file format")
    s.add_argument("--counts", type=int, default=0, metavar="N", help="compare low-index counts up to N")
    s.set_defaults(func=cmd_presentations)

    s = sub.add_parser("low-index", parents=[common], help="conjugacy classes of subgroups of index n")
    s.add_argument("source", nargs="?", default="Q", help="presentation file or built-in name")
    s.add_argument("--index", type=int, required=True)
    s.add_argument("--max-count", type=int, default=None)
    s.add_argument("--verbose", action="store_true", help="print the coset tables")
    s.set_defaults(func=cmd_low_index)

    s = sub.add_parser("reproduce-paper", parents=[common], help="run the full claim checklist")
    s.add_argument("--only", help="comma-separated claim ids or groups: " + ", ".join(CLAIM_GROUPS))
    s.add_argument("--max-cosets", type=int, default=100000)
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    s.add_argument("source")
    s.set_defaults(func=cmd_abelianize)

    s = sub.add_parser("tietze", help="eliminate generators")
    s.add_argument("source")
    s.add_argument("--eliminate", action="append", metavar="GEN")
    s.add_argument("--simplify", action="store_true", help="greedy elimination afterwards")
    s.set_defaults(func=cmd_tietze)

    s = sub.add_parser("wirtinger", help="Wirtinger presentation of a link diagram")
    s.add_argument("source", help="diagram file, or chain / chain-z5")
    s.add_argument("--torsion", type=int, default=0, help="add meridian^n relators")
    s.set_defaults(func=cmd_wirtinger)

    for name, fn in (("coset-enum", cmd_coset_enum), ("rs", cmd_rs)):
        s = sub.add_parser(name, help="Todd-Coxeter" if name == "coset-enum" else "Reidemeister-Schreier")
        s.add_argument("source")
        s.add_argument("--subgroup", default="", help='comma-separated words, e.g. "a b^-1,b^3"')
        s.add_argument("--max-cosets", type=int, default=100000)
        if name == "coset-enum":
            s.add_argument("--table", action="store_true")
        else:
            s.add_argument("--simplify", action="store_true")
        s.set_defaults(func=fn)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chorbifold {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
