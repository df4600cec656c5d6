import math
import random

import pytest

from chorbifold import cutdisk, reference
from chorbifold.bisectors import dirichlet_bisectors


def herm_c(z, w):
    return -z[0] * w[0].conjugate() + z[1] * w[1].conjugate() + z[2] * w[2].conjugate()


def float_trace(label):
    """|<Z, p'>|² − |<Z, q'>|² on the sphere chart, computed in floating point."""
    b = dirichlet_bisectors()[label]
    p = cutdisk.to_new(b.p).approx()
    q = cutdisk.to_new(b.q).approx()

    def f(t1, t2, t3):
        Z = (1, 1j * t3, t1 + 1j * t2)
        return abs(herm_c(Z, p)) ** 2 - abs(herm_c(Z, q)) ** 2
    return f


def sphere_points(n, seed=3):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        x = [rng.gauss(0, 1) for _ in range(3)]
        r = math.sqrt(sum(c * c for c in x))
        pts.append(tuple(c / r for c in x))
    return pts


@pytest.fixture(scope="module")
def oc():
    return cutdisk.octagon()


def test_coordinate_change():
    checks = {c.name: c.holds for c in cutdisk.coordinate_change_checks()}
    assert checks["P* J1 P = J1"]
    assert checks["centers at (±√(3/5), 0)"]
    assert checks["midpoint at the origin"]
    assert checks["C is Re(u1) = 0"]
    assert not checks["printed P is unitary"]


@pytest.mark.parametrize("label", reference.OCTAGON_CYCLE)
def test_quadric_matches_float_oracle(label):
    q = cutdisk.dirichlet_quadric(label)
    f = float_trace(label)
    ratios = []
    for t in sphere_points(12):
        a, b = q.approx(*t), f(*t)
        if abs(b) > 1e-6:
            ratios.append(a / b)
    assert max(ratios) - min(ratios) < 1e-9 * max(1, abs(ratios[0]))
    assert ratios[0] > 0  # the inside of T is q <= 0


def test_mirror_pairs():
    for a, b, s in cutdisk.mirror_checks():
        assert s is not None, (a, b)


def test_table3_rows():
    rows = {r.label: r for r in cutdisk.table3_comparison()}
    assert rows["B0b"].matches and rows["B1b"].matches
    for lab in ("B11", "B5", "B4", "B3", "B2"):
        assert not rows[lab].matches and rows[lab].mirror_scale is not None
    assert not rows["B7b"].matches and rows["B7b"].mirror_scale is None


def test_traces_outside_the_cycle_do_not_meet_the_sphere_chart():
    with pytest.raises(cutdisk.NotIntersecting):
        cutdisk.restrict_to_sphere("B9")


def newton_vertex(la, lb, start):
    fa, fb = cutdisk.dirichlet_quadric(la), cutdisk.dirichlet_quadric(lb)
    x = list(start)
    for _ in range(40):
        def F(y):
            return [fa.approx(*y), fb.approx(*y), sum(c * c for c in y) - 1]
        f0 = F(x)
        h = 1e-7
        J = []
        for k in range(3):
            y = list(x)
            y[k] += h
            J.append([(a - b) / h for a, b in zip(F(y), f0)])
        J = [list(r) for r in zip(*J)]
        # solve J d = -f0 by Cramer's rule
        def det(m):
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        D = det(J)
        d = []
        for k in range(3):
            m = [row[:] for row in J]
            for i in range(3):
                m[i][k] = -f0[i]
            d.append(det(m) / D)
        x = [a + b for a, b in zip(x, d)]
    return x


def test_vertices_agree_with_newton(oc):
    for v in oc.vertices:
        if abs(v.approx()[2]) < 1e-9:
            continue  # the two traces are tangent along the equator there
        guess = [c + 0.01 for c in v.approx()]
        x = newton_vertex(*v.labels, guess)
        assert max(abs(a - b) for a, b in zip(x, v.approx())) < 1e-8


def test_published_vertex_and_rejected_candidate(oc):
    v = next(v for v in oc.vertices if v.labels == ("B0b", "B11"))
    assert v.decimals(6) == reference.VERTEX_B0B_B11
    rej = [c for c in cutdisk.vertex_candidates("B0b", "B11") if c.status == "rejected"]
    assert len(rej) == 1
    assert all(abs(a - float(b)) < 1e-6 for a, b in zip(rej[0].approx(), reference.REJECTED_B0B_B11))


def test_arc_endpoints(oc):
    ends = oc.endpoints()
    for e in reference.ENDPOINTS:
        for s in (1, -1):
            assert any(abs(x - s * float(e)) < 1e-6 for x in ends)
    assert any(abs(x) < 1e-12 for x in ends)


def test_octagon_symmetry(oc):
    # vertices come in t3 -> -t3 pairs
    pts = [v.approx() for v in oc.vertices]
    for p in pts:
        assert any(max(abs(p[0] - q[0]), abs(p[1] - q[1]), abs(p[2] + q[2])) < 1e-9 for q in pts)


def test_arcs_lie_on_their_traces_and_inside_t(oc):
    for arc in oc.arcs:
        f = float_trace(arc.label)
        for p in arc.sample(64):
            assert abs(sum(c * c for c in p) - 1) < 1e-9
            assert abs(f(*p)) < 1e-7
            assert p[0] < 1e-12
    assert all(ok for _, ok in cutdisk.boundary_in_T_check(oc))
    assert all(r[1] for r in cutdisk.substitution_check(oc, samples=20))
    assert all(ok for _, ok in cutdisk.endpoint_consistency(oc))


def test_boundary_is_closed_and_counterclockwise(oc):
    pts = oc.boundary(64)
    gaps = [math.dist(pts[k], pts[k + 1]) for k in range(len(pts) - 1)] + [math.dist(pts[-1], pts[0])]
    assert max(gaps) < 0.05
    proj = [(p[1], p[2]) for p in pts]
    area = sum(a[0] * b[1] - b[0] * a[1] for a, b in zip(proj, proj[1:] + proj[:1])) / 2
    assert area > 0


def test_jordan_check(oc):
    res = cutdisk.jordan_check(oc)
    n = len(oc.segments)
    assert len(res) == n * (n - 1) // 2
    assert all(ok for _, _, ok, _ in res)


def test_winding_number():
    square = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
    assert cutdisk.winding_number(square, (0, 0)) == 1
    assert cutdisk.winding_number(square, (3, 0)) == 0
    assert cutdisk.winding_number(list(reversed(square)), (0, 0)) == -1


def lagrange_defect(label, t):
    q = cutdisk.dirichlet_quadric(label)
    h = 1e-6
    g = []
    for k in range(3):
        a, b = list(t), list(t)
        a[k] += h
        b[k] -= h
        g.append((q.approx(*a) - q.approx(*b)) / (2 * h))
    cross = (g[1] * t[2] - g[2] * t[1], g[2] * t[0] - g[0] * t[2], g[0] * t[1] - g[1] * t[0])
    return max(abs(c) for c in cross) / max(abs(c) for c in g)


def test_critical_points_of_b0b():
    cps = cutdisk.critical_points("B0b")
    got = sorted(c.decimals(6) for c in cps)
    assert got == sorted(reference.CRITICAL_B0B)
    for c in cps:
        assert c.outside and c.winding == 0
        assert lagrange_defect("B0b", c.approx()) < 1e-6


def test_critical_points_of_all_traces_are_outside():
    for lab in reference.OCTAGON_CYCLE:
        cps = cutdisk.critical_points(lab)
        assert len(cps) == 2
        for c in cps:
            assert c.outside, (lab, c.reason)
            assert c.residual < 1e-15
            assert lagrange_defect(lab, c.approx()) < 1e-6


def test_phi_audit(oc):
    audit = {a.index: a for a in cutdisk.phi_audit(oc)}
    assert audit[6].consistent
    assert not audit[2].den_ok and not audit[7].den_ok
    assert audit[7].notes[-1].startswith("a7 agrees")
    assert not all(audit[1].sign_ok)
    assert not audit[8].a_ok and audit[8].b_ok and audit[8].den_ok


def test_emit_figure(tmp_path):
    svg, csv = tmp_path / "o.svg", tmp_path / "o.csv"
    text = cutdisk.emit_figure("arcs", str(svg), str(csv), samples=16)
    assert text.startswith("<svg") and svg.read_text() == text
    rows = csv.read_text().splitlines()
    assert rows[0] == "arc,label,t1,t2,t3" and len(rows) > 8 * 16
    with pytest.raises(ValueError):
        cutdisk.emit_figure("octagon", samples=1)
    with pytest.raises(ValueError):
        cutdisk.emit_figure("face")
    with pytest.raises(ValueError):
        cutdisk.emit_figure("nonsense")


def test_face_samples():
    pts = cutdisk.giraud_face_samples(("C", "B0"), "B1", samples=48)
    assert pts and all(-1 <= x <= 1 and -1 <= y <= 1 for x, y in pts)
