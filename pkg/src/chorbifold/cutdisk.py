"""The cutting disk on the ideal boundary of the bisector C.

After the coordinate change P the bisector C is Re(u1) = 0 and its ideal
boundary is the unit sphere through Z = (1, i t3, t1 + i t2).  Each
Dirichlet bisector B(o, g o) cuts that sphere in the zero set of a real
quadric in (t1, t2, t3); the octagon E is the piece of the sphere inside
all 24 Dirichlet half-spaces and in the hemisphere t1 < 0, bounded by arcs
of eight of these traces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chgeom import J1, HermitianVector, Isometry, adjoint, apply, matmul, matvec, mat, proportional_matrices
from .numfield import I, ONE, ZERO, AlgebraicNumber, Interval, RealAlgebraic, num, real, pretty, sqrt, to_decimal
from .poly import Poly, RealRoot, count_roots, isolate_roots, poly_gcd, squarefree, sturm_sequence
from . import reference


class NotIntersecting(ValueError):
    pass


class DegenerateVertex(ValueError):
    pass


BITS = 96  # dyadic precision for box arithmetic


# --- the coordinate change --------------------------------------------------

def _p_matrix():
    h = Fraction(1, 2)
    return mat([
        [4 * sqrt(Fraction(2, 5)), 0, -3 * sqrt(Fraction(3, 5)) * I],
        [Fraction(3, 2) * sqrt(Fraction(3, 5)), -sqrt(3) * h * I, -2 * sqrt(Fraction(2, 5)) * I],
        [9 * h / sqrt(5), I * h, -2 * sqrt(Fraction(6, 5)) * I],
    ])


_P = None


def coordinate_change() -> Isometry:
    """P, taking the new Lorentz basis to the old one (P* J1 P = J1)."""
    global _P
    if _P is None:
        _P = Isometry(_p_matrix(), name="P")
    return _P


def coordinate_change_inverse() -> Isometry:
    return coordinate_change().inverse()


def to_new(v: HermitianVector) -> HermitianVector:
    return apply(coordinate_change_inverse(), v)


def ball_coords(v: HermitianVector):
    z0 = v[0]
    return tuple(v[k] / z0 for k in (1, 2))


@dataclass
class PCheck:
    name: str
    holds: bool
    detail: str = ""


def coordinate_change_checks():
    from .bisectors import c_centers
    from .reps import origin
    P = coordinate_change()
    out = [PCheck("P* J1 P = J1", P.unitarity_scalar() == ONE)]
    a, b = c_centers()
    ua, ub = ball_coords(to_new(a)), ball_coords(to_new(b))
    r = num(reference.CENTER_BALL_COORD)
    ok = {ua, ub} == {(r, num(0)), (-r, num(0))}
    out.append(PCheck("centers at (±√(3/5), 0)", ok, f"{ua[0]}, {ub[0]}"))
    # the midpoint of [b, a] is the normalized sum of equal-norm lifts
    mid = to_new(a + b.scale(_phase_to_align(a, b)))
    u = ball_coords(mid)
    out.append(PCheck("midpoint at the origin", all(x.is_zero() for x in u)))
    # C: |<Z, a'>| = |<Z, b'>| on Z = (1, u1, u2) reduces to Re(u1) = 0
    q = _quadric_from_points(to_new(a), to_new(b), chart="ball")
    out.append(PCheck("C is Re(u1) = 0", q.is_proportional_to_re_u1(), str(q)))
    printed = reference.PRINTED_P
    out.append(PCheck("printed P is unitary", _is_unitary(printed),
                      "two entries of the middle row differ from the corrected matrix"))
    out.append(PCheck("printed P equals corrected P", proportional_matrices(printed, P.matrix)))
    return out


def _phase_to_align(a, b):
    """Unit scalar c with <a, c b> real negative (so a + c b is the midpoint)."""
    h = herm_(a, b)
    # <a, c b> = conj(c) h, so c = -h/|h|; |h|^2 is a rational square here
    n2 = h.abs2()
    from .bisectors import _rational_sqrt
    r = _rational_sqrt(n2)
    if r is None:
        raise ValueError("cannot normalize the phase exactly")
    return h * num(Fraction(-1) / r)


def herm_(u, v):
    from .chgeom import herm
    return herm(u, v)


def _is_unitary(m):
    try:
        Isometry(m)
        return True
    except ValueError:
        return False


# --- quadrics ---------------------------------------------------------------

MONOMIALS = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2),
             (1, 1, 0), (1, 0, 1), (0, 1, 1))
_UNIT = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def _mono_name(m):
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(f"t{k + 1}")
        elif e == 2:
            parts.append(f"t{k + 1}^2")
    return "".join(parts) or "1"


class Quadric:
    """Real quadric in (t1, t2, t3) with RealAlgebraic coefficients."""

    def __init__(self, coeffs):
        self.c = {m: real(coeffs.get(m, 0)) for m in MONOMIALS}
        extra = set(coeffs) - set(MONOMIALS)
        if extra:
            raise ValueError(f"not a quadric monomial: {extra}")

    def coeff(self, m):
        return self.c[m]

    def __eq__(self, other):
        return isinstance(other, Quadric) and self.c == other.c

    def __call__(self, t1, t2, t3):
        t = (real(t1), real(t2), real(t3))
        out = ZERO
        for m, a in self.c.items():
            if a.is_zero():
                continue
            v = a
            for k, e in enumerate(m):
                for _ in range(e):
                    v = v * t[k]
            out = out + v
        return out

    def approx(self, t1, t2, t3):
        t = (t1, t2, t3)
        return sum(float(a) * math.prod(t[k] ** e for k, e in enumerate(m)) for m, a in self.c.items())

    def interval(self, T):
        out = Interval(0)
        for m, a in self.c.items():
            if a.is_zero():
                continue
            v = a.enclose(Fraction(1, 1 << BITS))
            for k, e in enumerate(m):
                if e:
                    v = v * (T[k] ** e)
            out = (out + v).round_out(BITS)
        return out

    def scale(self, s):
        return Quadric({m: a * s for m, a in self.c.items()})

    def mirror(self):
        """t3 -> -t3."""
        return Quadric({m: (-a if m[2] % 2 else a) for m, a in self.c.items()})

    def ratio_to(self, other):
        """s with self = s * other, or None."""
        piv = next((m for m in MONOMIALS if not other.c[m].is_zero()), None)
        if piv is None or self.c[piv].is_zero():
            return None
        s = self.c[piv] / other.c[piv]
        if all(self.c[m] == s * other.c[m] for m in MONOMIALS):
            return s
        return None

    def primitive(self):
        """Rescale by a positive rational to coprime integer numerators."""
        from math import gcd
        den, g = 1, 0
        for a in self.c.values():
            for q in a.coeffs:
                den = den * q.denominator // gcd(den, q.denominator)
        for a in self.c.values():
            for q in a.coeffs:
                g = gcd(g, (q * den).numerator)
        return self.scale(Fraction(den, g))

    def gradient_coeffs(self):
        return {k: self.c[m] for k, m in zip("k b c d e f a c0".split(),
                ((2, 0, 0), (0, 0, 2), (1, 0, 0), (1, 0, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1), (0, 0, 0)))}

    def sphere_linear(self):
        """(A, B, Cc) in t3 with self - k g = A t1 + B t2 + Cc (g the sphere)."""
        k = self.c[(2, 0, 0)]
        if self.c[(0, 2, 0)] != k or not self.c[(1, 1, 0)].is_zero():
            raise ValueError("quadric is not of sphere-linear type")
        A = Poly([self.c[(1, 0, 0)], self.c[(1, 0, 1)]])
        B = Poly([self.c[(0, 1, 0)], self.c[(0, 1, 1)]])
        Cc = Poly([self.c[(0, 0, 0)] + k, self.c[(0, 0, 1)], self.c[(0, 0, 2)] - k])
        return A, B, Cc

    def is_proportional_to_re_u1(self):
        # used with ball chart monomials: only the t1 (= Re u1) coefficient survives
        return all(a.is_zero() for m, a in self.c.items() if m != (1, 0, 0)) and not self.c[(1, 0, 0)].is_zero()

    def terms(self):
        return [(m, a) for m, a in self.c.items() if not a.is_zero()]

    def __str__(self):
        parts = []
        for m, a in self.terms():
            parts.append(f"({a})" + ("" if m == (0, 0, 0) else "*" + _mono_name(m)))
        return " + ".join(parts) or "0"

    __repr__ = __str__


def _linear_form(w: HermitianVector, chart="sphere"):
    """alpha with <Z, w> = alpha0 + alpha1 t1 + alpha2 t2 + alpha3 t3.

    sphere chart: Z = (1, i t3, t1 + i t2); ball chart: Z = (1, t1 + i t2, t3) in
    which case t1 = Re(u1).
    """
    J = J1.matrix
    c = [J[k][k] * w[k].conjugate() for k in range(3)]
    if chart == "sphere":
        return (c[0], c[2], I * c[2], I * c[1])
    return (c[0], c[1], I * c[1], c[2])


def _modsq(alpha):
    out = {}
    for j in range(4):
        for k in range(j, 4):
            m = tuple(a + b for a, b in zip(_UNIT[j], _UNIT[k]))
            v = (alpha[j] * alpha[k].conjugate()).re
            if j != k:
                v = 2 * v
            out[m] = out.get(m, ZERO) + v
    return out


def _quadric_from_points(p: HermitianVector, q: HermitianVector, chart="sphere") -> Quadric:
    a = _modsq(_linear_form(p, chart))
    b = _modsq(_linear_form(q, chart))
    keys = set(a) | set(b)
    return Quadric({m: a.get(m, ZERO) - b.get(m, ZERO) for m in keys if m in MONOMIALS}) if chart == "sphere" \
        else Quadric({m: a.get(m, ZERO) - b.get(m, ZERO) for m in keys if m in MONOMIALS})


_QUADRICS = {}


def dirichlet_quadric(label: str) -> Quadric:
    """|<Z, P⁻¹ o>|² - |<Z, P⁻¹ g o>|², which is <= 0 on the T side."""
    label = str(label)
    if label not in _QUADRICS:
        from .reps import generating_set, origin
        g = generating_set().get(label)
        o = origin()
        _QUADRICS[label] = _quadric_from_points(to_new(o), to_new(apply(g, o)))
    return _QUADRICS[label]


def all_dirichlet_quadrics():
    from .reps import ALL_LABELS
    return {str(l): dirichlet_quadric(str(l)) for l in ALL_LABELS}


def restrict_to_sphere(label) -> Quadric:
    """The trace of one of the eight octagon faces on the sphere."""
    label = str(label)
    if label not in reference.OCTAGON_CYCLE:
        raise NotIntersecting(f"{label} does not bound the octagon")
    return dirichlet_quadric(label)


@dataclass
class QuadricComparison:
    label: str
    derived: Quadric
    printed: Quadric
    scale: object          # printed = scale * derived, or None
    mirror_scale: object   # printed = scale * mirror(derived), or None
    mismatched: list = field(default_factory=list)

    @property
    def matches(self):
        return self.scale is not None


def table3_comparison():
    out = []
    for lab in reference.OCTAGON_CYCLE:
        d = dirichlet_quadric(lab)
        p = Quadric(reference.TABLE3[lab])
        s = p.ratio_to(d)
        ms = p.ratio_to(d.mirror())
        bad = []
        if s is None:
            # list monomials that differ after matching the t1^2 coefficient
            piv = (2, 0, 0)
            lam = p.c[piv] / d.c[piv]
            bad = [_mono_name(m) for m in MONOMIALS if p.c[m] != lam * d.c[m]]
        out.append(QuadricComparison(lab, d, p, s, ms, bad))
    return out


def mirror_checks():
    """The t3 -> -t3 pairing of the eight traces."""
    out = []
    for a, b in reference.MIRROR_PAIRS:
        s = dirichlet_quadric(b).ratio_to(dirichlet_quadric(a).mirror())
        out.append((a, b, s))
    return out


def in_closed_T(T, skip=()):
    """Box test against all 24 Dirichlet inequalities.

    Returns (inside certified, outside witness label or None).
    """
    quads = all_dirichlet_quadrics()
    worst = None
    inside = True
    for lab, q in quads.items():
        if lab in skip:
            continue
        v = q.interval(T)
        if v.lo > 0:
            return False, lab
        if not v.hi < 0:
            inside = False
            worst = lab
    return inside, None


def dirichlet_margin(t):
    """max_g Q_g(t) in floating point (<= 0 iff in the closure of T)."""
    return max((q.approx(*t), lab) for lab, q in all_dirichlet_quadrics().items())


# --- box arithmetic on polynomials ------------------------------------------

class _IPoly:
    def __init__(self, p: Poly):
        self.p = p
        self.c = [a.enclose(Fraction(1, 1 << BITS)).round_out(BITS) for a in p.c]

    def __call__(self, T):
        out = Interval(0)
        for a in reversed(self.c):
            out = (out * T + a).round_out(BITS)
        return out


def _root_interval(r: RealRoot, width=Fraction(1, 10 ** 20)):
    r.refine(width)
    return r.interval


# --- branches of a trace ----------------------------------------------------

class Branches:
    """t2 = (a(t3) ± sqrt(b(t3)))/den(t3) on the trace of one quadric."""

    def __init__(self, q: Quadric, label=None):
        self.quadric, self.label = q, label
        A, B, Cc = q.sphere_linear()
        self.A, self.B, self.Cc = A, B, Cc
        self.den = A * A + B * B
        self.a = -(B * Cc)
        one_minus = Poly([1, 0, -1])
        self.disc = self.den * one_minus - Cc * Cc   # b = A² disc
        self.b = A * A * self.disc
        self._ia, self._ib, self._iden = _IPoly(self.a), _IPoly(self.b), _IPoly(self.den)
        self._iA, self._iB, self._iC = _IPoly(A), _IPoly(B), _IPoly(Cc)

    def t2(self, t3: float, sign: int) -> float:
        b = _pf(self.b, t3)
        return (_pf(self.a, t3) + sign * math.sqrt(max(b, 0.0))) / _pf(self.den, t3)

    def point(self, t3: float, sign: int):
        t2 = self.t2(t3, sign)
        t1 = -math.sqrt(max(1 - t2 * t2 - t3 * t3, 0.0))
        return (t1, t2, t3)

    def t1_linear(self, t2: float, t3: float) -> float:
        return -(_pf(self.B, t3) * t2 + _pf(self.Cc, t3)) / _pf(self.A, t3)

    def box(self, T3: Interval, sign: int):
        b = self._ib(T3)
        if b.hi < 0:
            raise ValueError("branch undefined on this interval")
        rb = b.sqrt(BITS)
        num_ = self._ia(T3) + (rb if sign > 0 else -rb)
        T2 = (num_ / self._iden(T3)).round_out(BITS)
        r = (1 - T2 ** 2 - T3 ** 2).round_out(BITS)
        if r.hi < 0:
            raise ValueError("off the sphere")
        T1 = -(r.sqrt(BITS))
        return (T1, T2, T3)

    def branch_points(self):
        if self.disc.degree <= 0:
            return []
        return isolate_roots(self.disc, -1, 1)


def _pf(p: Poly, x: float) -> float:
    out = 0.0
    for a in reversed(p.c):
        out = out * x + float(a)
    return out


# --- vertices ---------------------------------------------------------------

@dataclass
class Candidate:
    labels: tuple
    t3: RealRoot
    box: tuple
    status: str           # "vertex", "rejected", "undecided"
    reason: str = ""
    sign: dict = field(default_factory=dict)  # branch sign of each trace at this point

    def approx(self):
        return tuple(float(x.mid) for x in self.box)

    def decimals(self, digits=6):
        return tuple(to_decimal(x, digits) for x in self.box)


def _vanishes_at(p: Poly, r: RealRoot) -> bool:
    if r.is_exact():
        return p(r.lo).is_zero()
    g = poly_gcd(p, r.poly)
    if g.degree <= 0:
        return False
    return count_roots(g, r.lo, r.hi) > 0


def _classify_point(box, labels, t1_negative_needed=True):
    T1 = box[0]
    if T1.lo > 0:
        return "rejected", "t1 > 0"
    inside, out = in_closed_T(box, skip=labels)
    if out is not None:
        return "rejected", f"violates the {out} inequality"
    if inside and T1.hi < 0:
        return "vertex", ""
    return "undecided", "box touches a third trace"


def _branch_sign(br: Branches, box):
    T3, T2 = box[2], box[1]
    hits = []
    for s in (1, -1):
        try:
            b2 = br.box(T3, s)[1]
        except ValueError:
            continue
        if b2.intersects(T2):
            hits.append(s)
    return hits[0] if len(hits) == 1 else 0


def vertex_candidates(la: str, lb: str, width=Fraction(1, 10 ** 24)):
    """All points of trace(la) ∩ trace(lb) on the sphere, classified."""
    qa, qb = dirichlet_quadric(la), dirichlet_quadric(lb)
    Aa, Ba, Ca = qa.sphere_linear()
    Ab, Bb, Cb = qb.sphere_linear()
    D = Aa * Bb - Ab * Ba
    N1 = Ba * Cb - Bb * Ca
    N2 = Ab * Ca - Aa * Cb
    U = N1 * N1 + N2 * N2 + Poly([-1, 0, 1]) * D * D
    bra, brb = Branches(qa, la), Branches(qb, lb)
    out = []
    for r in isolate_roots(U, -1, 1):
        if _vanishes_at(D, r):
            # the two linear equations agree at this height: solve on one trace
            T3 = _root_interval(r, width)
            for s in (1, -1):
                try:
                    box = bra.box(T3, s)
                except ValueError:
                    continue
                flip = Interval(-box[0].hi, -box[0].lo)
                for bx in (box, (flip, box[1], box[2])):
                    if not _on_linear(qb, bx):
                        continue
                    st, why = _classify_point(bx, (la, lb))
                    out.append(Candidate((la, lb), r, bx, st, why))
            continue
        T3 = _root_interval(r, width)
        iD, i1, i2 = _IPoly(D)(T3), _IPoly(N1)(T3), _IPoly(N2)(T3)
        box = ((i1 / iD).round_out(BITS), (i2 / iD).round_out(BITS), T3)
        st, why = _classify_point(box, (la, lb))
        out.append(Candidate((la, lb), r, box, st, why))
    out = _dedupe(out)
    for c in out:
        c.sign = {la: _branch_sign(bra, c.box), lb: _branch_sign(brb, c.box)}
    return out


def _on_linear(q, box):
    return q.interval(box).lo <= 0 <= q.interval(box).hi


def _dedupe(cands):
    out = []
    for c in cands:
        if any(all(x.intersects(y) for x, y in zip(c.box, d.box)) for d in out):
            continue
        out.append(c)
    return out


def octagon_vertex(la, lb):
    cands = [c for c in vertex_candidates(la, lb) if c.status == "vertex"]
    if len(cands) != 1:
        raise DegenerateVertex(f"{la} ∩ {lb}: {len(cands)} vertex candidates")
    return cands[0]


# --- arcs -------------------------------------------------------------------

class Endpoint:
    """A t3 value given as a real root, with a rational enclosure."""

    def __init__(self, root: RealRoot, kind, name=""):
        self.root, self.kind, self.name = root, kind, name

    def interval(self, width=Fraction(1, 10 ** 20)):
        return _root_interval(self.root, width)

    def __float__(self):
        return float(self.root)

    def decimal(self, digits=6):
        return self.root.decimal(digits)


@dataclass
class ArcSegment:
    label: str
    sign: int
    lo: Endpoint
    hi: Endpoint
    branches: Branches

    def point(self, t3):
        return self.branches.point(t3, self.sign)

    def sample(self, n=256):
        a, b = float(self.lo), float(self.hi)
        return [self.point(a + (b - a) * k / (n - 1)) for k in range(n)]

    def pieces(self, n):
        lo = self.lo.interval().hi
        hi = self.hi.interval().lo
        xs = [lo + (hi - lo) * Fraction(k, n) for k in range(n + 1)]
        return [Interval(xs[k], xs[k + 1]) for k in range(n)]

    def box(self, T3):
        return self.branches.box(T3, self.sign)

    @property
    def interval_text(self):
        return f"[{self.lo.decimal()}, {self.hi.decimal()}]"


@dataclass
class ArcParam:
    index: int
    label: str
    segments: list
    start: Candidate
    end: Candidate

    @property
    def domain(self):
        """Overall t3-range as (lo, hi) floats."""
        return (min(float(s.lo) for s in self.segments), max(float(s.hi) for s in self.segments))

    def sample(self, n=256):
        """Points from start vertex to end vertex."""
        pts = []
        segs = self.segments
        if len(segs) == 1:
            s = segs[0]
            pts = s.sample(n)
            if abs(pts[0][2] - self.start.approx()[2]) > abs(pts[-1][2] - self.start.approx()[2]):
                pts.reverse()
            return pts
        first, second = segs
        p1 = first.sample(n // 2)
        p2 = second.sample(n - n // 2)
        # both sub-segments meet at the branch point
        if first.lo.kind == "branch":
            p1.reverse()
        else:
            p2.reverse()
        out = p1 + p2
        if _dist(out[0], self.start.approx()) > _dist(out[-1], self.start.approx()):
            out.reverse()
        return out


def _dist(p, q):
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(p, q)))


def _sign_of_branch_at(br, cand, label):
    s = cand.sign.get(label, 0)
    if s == 0:
        raise DegenerateVertex(f"cannot decide the branch of {label} at a vertex")
    return s


def _build_arc(index, label, v_start, v_end):
    br = Branches(dirichlet_quadric(label), label)
    s1 = _sign_of_branch_at(br, v_start, label)
    s2 = _sign_of_branch_at(br, v_end, label)
    e1 = Endpoint(v_start.t3, "vertex", "/".join(v_start.labels))
    e2 = Endpoint(v_end.t3, "vertex", "/".join(v_end.labels))
    lo, hi = sorted((e1, e2), key=float)
    if s1 == s2:
        d = br.disc
        inner = count_roots(squarefree(d), lo.interval().hi, hi.interval().lo) if d.degree > 0 else 0
        if inner:
            raise DegenerateVertex(f"{label}: branch point inside a single-branch arc")
        return ArcParam(index, label, [ArcSegment(label, s1, lo, hi, br)], v_start, v_end)
    # the arc turns around at a branch point outside [lo, hi]
    roots = br.branch_points()
    below = [r for r in roots if float(r) < float(lo)]
    above = [r for r in roots if float(r) > float(hi)]
    choices = []
    if below:
        choices.append(("below", max(below, key=float)))
    if above:
        choices.append(("above", min(above, key=float)))
    best = None
    for side, r in choices:
        ep = Endpoint(r, "branch", f"{label} branch point")
        if side == "below":
            segs = [ArcSegment(label, s1, ep, e1, br), ArcSegment(label, s2, ep, e2, br)]
        else:
            segs = [ArcSegment(label, s1, e1, ep, br), ArcSegment(label, s2, e2, ep, br)]
        score = max(dirichlet_margin_excluding(seg.point(0.5 * (float(seg.lo) + float(seg.hi))), label)
                    for seg in segs)
        if best is None or score < best[0]:
            best = (score, segs)
    if best is None or best[0] > 1e-9:
        raise DegenerateVertex(f"{label}: no branch point closes the arc")
    return ArcParam(index, label, best[1], v_start, v_end)


def dirichlet_margin_excluding(t, label):
    return max(q.approx(*t) for lab, q in all_dirichlet_quadrics().items() if lab != label)


@dataclass
class Octagon:
    labels: tuple
    vertices: list   # vertices[i] = trace(labels[i-1]) ∩ trace(labels[i])
    arcs: list       # arcs[i] on labels[i], from vertices[i] to vertices[i+1]

    @property
    def segments(self):
        return [s for a in self.arcs for s in a.segments]

    def boundary(self, n=256):
        pts = []
        for a in self.arcs:
            pts.extend(a.sample(n))
        return pts

    def endpoints(self):
        """Distinct t3 values of all segment endpoints, as floats."""
        vals = []
        for s in self.segments:
            for e in (s.lo, s.hi):
                v = float(e)
                if all(abs(v - w) > 1e-9 for w in vals):
                    vals.append(v)
        return sorted(vals)


_OCTAGON = None


def octagon() -> Octagon:
    global _OCTAGON
    if _OCTAGON is None:
        labs = reference.OCTAGON_CYCLE
        n = len(labs)
        verts = [octagon_vertex(labs[i - 1], labs[i]) for i in range(n)]
        arcs = [_build_arc(i + 1, labs[i], verts[i], verts[(i + 1) % n]) for i in range(n)]
        _OCTAGON = Octagon(labs, verts, arcs)
    return _OCTAGON


# --- certified checks on the arc system --------------------------------------

def _boxes_disjoint(a, b):
    return any(not x.intersects(y) for x, y in zip(a, b))


def segment_boxes(seg: ArcSegment, n=32):
    return [(T3, seg.box(T3)) for T3 in seg.pieces(n)]


def jordan_check(oct_=None, n=24, max_depth=6):
    """Certify that the ten segments form a simple closed curve.

    Pairs without a common endpoint are separated by refined boxes.  Pairs
    with a common endpoint meet exactly there: two traces of different
    bisectors meet only at the finitely many points returned by
    ``vertex_candidates`` and two branches of one trace only where the
    discriminant vanishes, so it is enough to check that no other common
    point lies on both segments.  Returns (i, j, ok, how) tuples.
    """
    oct_ = oct_ or octagon()
    segs = oct_.segments
    boxes = [segment_boxes(s, n) for s in segs]
    out = []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            shared = _shared_ends(segs[i], segs[j])
            if shared:
                ok = _meet_only_at(segs[i], segs[j], shared)
                out.append((i, j, ok, "exact"))
                continue
            ok = True
            for Ti, bi in boxes[i]:
                for Tj, bj in boxes[j]:
                    if _boxes_disjoint(bi, bj):
                        continue
                    if not _separate(segs[i], Ti, segs[j], Tj, max_depth):
                        ok = False
            out.append((i, j, ok, "boxes"))
    return out


def _in_domain(seg, T3, closed=True):
    lo, hi = seg.lo.interval(), seg.hi.interval()
    if closed:
        return T3.hi >= lo.lo and T3.lo <= hi.hi
    return T3.lo > lo.hi and T3.hi < hi.lo


def _meet_only_at(s, t, shared):
    roots = [s.lo.root if a == "lo" else s.hi.root for a, _ in shared]
    if s.label == t.label:
        if s.sign == t.sign:
            return False
        d = squarefree(s.branches.disc)
        lo = max(s.lo.interval().lo, t.lo.interval().lo)
        hi = min(s.hi.interval().hi, t.hi.interval().hi)
        found = isolate_roots(d, lo, hi) if lo <= hi else []
        return all(any(_same_root(r, q) for q in roots) for r in found)
    for c in vertex_candidates(s.label, t.label):
        if c.box[0].lo > 0:
            continue
        if any(c.t3 is q or _same_root(c.t3, q) for q in roots):
            continue
        on_s = _in_domain(s, c.box[2]) and c.sign.get(s.label) in (s.sign, 0)
        on_t = _in_domain(t, c.box[2]) and c.sign.get(t.label) in (t.sign, 0)
        if on_s and on_t:
            return False
    return True


def _same_root(r, q):
    a, b = _root_interval(r), _root_interval(q)
    if not a.intersects(b):
        return False
    g = poly_gcd(r.poly, q.poly)
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if g.degree <= 0:
        return False
    if lo == hi:
        return g(lo).is_zero()
    return count_roots(g, lo, hi) == 1 or g(lo).is_zero() or g(hi).is_zero()


def _shared_ends(s, t):
    out = []
    for a, ea in (("lo", s.lo), ("hi", s.hi)):
        for b, eb in (("lo", t.lo), ("hi", t.hi)):
            if ea.root is eb.root:
                out.append((a, b))
    return out


def _separate(s, Ts, t, Tt, depth):
    if depth == 0:
        return False
    if _boxes_disjoint(s.box(Ts), t.box(Tt)):
        return True
    ms, mt = Ts.mid, Tt.mid
    halves_s = (Interval(Ts.lo, ms), Interval(ms, Ts.hi))
    halves_t = (Interval(Tt.lo, mt), Interval(mt, Tt.hi))
    return all(_separate(s, a, t, b, depth - 1) for a in halves_s for b in halves_t)


def substitution_check(oct_=None, samples=100):
    """Largest quadric residual over certified sample boxes, per segment."""
    oct_ = oct_ or octagon()
    out = []
    for seg in oct_.segments:
        worst_q, worst_w = Fraction(0), Fraction(0)
        lo = seg.lo.interval().hi
        hi = seg.hi.interval().lo
        for k in range(samples):
            x = lo + (hi - lo) * Fraction(k, samples - 1)
            T3 = Interval(x)
            box = seg.box(T3)
            q = seg.branches.quadric.interval(box)
            sph = (box[0] ** 2 + box[1] ** 2 + box[2] ** 2 - 1).round_out(BITS)
            wbox = max(b.width for b in box)
            if not (q.lo <= 0 <= q.hi and sph.lo <= 0 <= sph.hi):
                out.append((seg.label, False, x))
                break
            worst_w = max(worst_w, wbox)
        else:
            out.append((seg.label, True, worst_w))
    return out


def boundary_in_T_check(oct_=None, samples=40):
    """Interior points of every segment satisfy all other inequalities strictly."""
    oct_ = oct_ or octagon()
    out = []
    for seg in oct_.segments:
        ok = True
        lo = seg.lo.interval().hi
        hi = seg.hi.interval().lo
        for k in range(1, samples):
            x = lo + (hi - lo) * Fraction(k, samples)
            box = seg.box(Interval(x))
            inside, bad = in_closed_T(box, skip=(seg.label,))
            if not inside:
                ok = False
                break
        out.append((seg.label, ok))
    return out


def endpoint_consistency(oct_=None):
    """Each vertex satisfies both adjacent quadrics exactly.

    For a vertex t3-root r of the elimination polynomial, both quadrics vanish
    at (N1(r)/D(r), N2(r)/D(r), r) identically in r modulo the sphere; this is
    checked by polynomial remainder.
    """
    oct_ = oct_ or octagon()
    out = []
    for v in oct_.vertices:
        la, lb = v.labels
        ok = all(_exact_on_trace(dirichlet_quadric(l), la, lb, v) for l in (la, lb))
        out.append(((la, lb), ok))
    return out


def _exact_on_trace(q, la, lb, v):
    qa, qb = dirichlet_quadric(la), dirichlet_quadric(lb)
    Aa, Ba, Ca = qa.sphere_linear()
    Ab, Bb, Cb = qb.sphere_linear()
    D = Aa * Bb - Ab * Ba
    if _vanishes_at(D, v.t3):
        # degenerate height: the box test is the available statement
        return q.interval(v.box).lo <= 0 <= q.interval(v.box).hi
    N1 = Ba * Cb - Bb * Ca
    N2 = Ab * Ca - Aa * Cb
    A, B, C = q.sphere_linear()
    # q - k g at the point, times D: A N1 + B N2 + C D
    lin = A * N1 + B * N2 + C * D
    return _vanishes_at(lin, v.t3)


# --- critical points ---------------------------------------------------------

@dataclass
class CriticalPoint:
    label: str
    m: RealRoot
    box: tuple
    outside: bool
    reason: str
    winding: int = 0
    residual: float = 0.0

    def approx(self):
        return tuple(float(x.mid) for x in self.box)

    def decimals(self, digits=6):
        return tuple(to_decimal(x, digits) for x in self.box)


def lagrange_polynomial(q: Quadric):
    """Univariate equation in m = 2λ - 2k for the critical points of q on the sphere."""
    g = q.gradient_coeffs()
    k, b, c, d, e, f, a = (g[x] for x in "k b c d e f a".split())
    m = Poly.x()
    N = m * a + (c * d + e * f)
    D = m * m + m * (2 * (k - b)) - (d * d + f * f)
    E = (D * c + N * d) ** 2 + (D * e + N * f) ** 2 + m * m * N * N - m * m * D * D
    return E, N, D


def critical_points(label, width=Fraction(1, 10 ** 24)):
    q = dirichlet_quadric(str(label))
    g = q.gradient_coeffs()
    c, d, e, f = g["c"], g["d"], g["e"], g["f"]
    if (c * f - d * e).is_zero():
        raise ValueError("degenerate gradient system")
    E, N, D = lagrange_polynomial(q)
    boundary = None
    out = []
    for r in isolate_roots(E):
        if r.is_exact() and r.lo == 0:
            continue
        if _vanishes_at(D, r):
            continue
        M = _root_interval(r, width)
        T3 = (_IPoly(N)(M) / _IPoly(D)(M)).round_out(BITS)
        T1 = ((_IPoly(Poly([c, d]))(T3)) / M).round_out(BITS)
        T2 = ((_IPoly(Poly([e, f]))(T3)) / M).round_out(BITS)
        box = (T1, T2, T3)
        inside, bad = in_closed_T(box)
        if bad is not None:
            outside, why = True, f"violates the {bad} inequality"
        elif T1.lo > 0:
            outside, why = True, "t1 > 0"
        else:
            outside, why = False, "not separated from the closure of T"
        if boundary is None:
            boundary = [(p[1], p[2]) for p in octagon().boundary(128)]
        t = tuple(float(x.mid) for x in box)
        w = winding_number(boundary, (t[1], t[2])) if t[0] < 0 else 0
        res = _lagrange_residual(q, box, M)
        out.append(CriticalPoint(str(label), r, box, outside, why, w, res))
    return out


def _lagrange_residual(q, box, M):
    """Certified bound on the Lagrange system over the box (λ = m/2 + k)."""
    g = q.gradient_coeffs()
    k, b, c, d, e, f, a = (g[x].enclose(Fraction(1, 1 << BITS)) for x in "k b c d e f a".split())
    T1, T2, T3 = box
    lam2 = M + 2 * k
    r = [
        2 * k * T1 + c + d * T3 - lam2 * T1,
        2 * k * T2 + e + f * T3 - lam2 * T2,
        2 * b * T3 + d * T1 + f * T2 + a - lam2 * T3,
        T1 ** 2 + T2 ** 2 + T3 ** 2 - 1,
    ]
    return float(max(x.abs().hi for x in r))


def winding_number(poly, pt):
    """Winding number of a closed polyline around a point (crossing count)."""
    x, y = pt
    w = 0
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if y1 <= y < y2 or y2 <= y < y1:
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xi > x:
                w += 1 if y2 > y1 else -1
    return w


# --- phi-formula audit -------------------------------------------------------

@dataclass
class PhiAudit:
    index: int
    label: str
    scale: object           # lambda with printed den = lambda * derived den
    den_ok: bool
    a_ok: bool
    b_ok: bool
    sign_ok: list
    intervals_ok: bool
    derived: "Branches"
    printed: object
    notes: list = field(default_factory=list)

    @property
    def consistent(self):
        return self.den_ok and self.a_ok and self.b_ok and all(self.sign_ok) and self.intervals_ok


def _poly_ratio(p: Poly, q: Poly):
    if q.is_zero() or p.degree != q.degree:
        return None
    lam = p.lead() / q.lead()
    return lam if p == q * lam else None


def phi_audit(oct_=None):
    oct_ = oct_ or octagon()
    out = []
    for pa in reference.PHI:
        arc = oct_.arcs[pa.index - 1]
        br = arc.segments[0].branches
        notes = []
        lam = _poly_ratio(pa.den, br.den)
        den_ok = lam is not None
        if lam is None:
            lam = pa.den.lead() / br.den.lead()
            notes.append("denominator differs: printed " + _pstr(pa.den) + " vs derived " + _pstr(br.den * lam))
        a_ok = pa.a == br.a * lam
        if not a_ok:
            notes.append("a differs: printed " + _pstr(pa.a) + " vs derived " + _pstr(br.a * lam))
            if pa.index == 7 and reference.A7_ALTERNATIVE == br.a * lam:
                notes.append("a7 agrees when the first t^3 is read as t^2")
        b_ok = pa.b == br.b * (lam * lam)
        if not b_ok:
            notes.append("b differs: printed " + _pstr(pa.b) + " vs derived " + _pstr(br.b * (lam * lam)))
        # effective sign: (λa + s√(λ²b))/(λ den) = (a + s·sgn(λ)√b)/den
        sgn = lam.sign()
        derived_signs = _segment_signs_in_printed_order(arc, pa)
        sign_ok = [s * sgn == d for s, d in zip(pa.signs, derived_signs)]
        if not all(sign_ok):
            notes.append(f"branch sign: printed {pa.signs}, derived {tuple(d * sgn for d in derived_signs)}")
        intervals_ok = _intervals_match(arc, pa)
        if not intervals_ok:
            notes.append("t3-intervals differ: derived " + ", ".join(s.interval_text for s in arc.segments))
        out.append(PhiAudit(pa.index, pa.label, lam, den_ok, a_ok, b_ok, sign_ok, intervals_ok, br, pa, notes))
    return out


def _segment_signs_in_printed_order(arc, pa):
    segs = _match_segments(arc, pa)
    return [s.sign for s in segs]


def _match_segments(arc, pa):
    if len(arc.segments) != len(pa.intervals):
        return arc.segments
    out = []
    for lo, hi in pa.intervals:
        plo, phi = float(lo), float(hi)
        best = min(arc.segments, key=lambda s: abs(float(s.lo) - plo) + abs(float(s.hi) - phi))
        out.append(best)
    return out


def _intervals_match(arc, pa, tol=1e-5):
    segs = _match_segments(arc, pa)
    if len(segs) != len(pa.intervals):
        return False
    return all(abs(float(s.lo) - float(lo)) < tol and abs(float(s.hi) - float(hi)) < tol
               for s, (lo, hi) in zip(segs, pa.intervals))


def _pstr(p: Poly):
    terms = []
    for k, a in enumerate(p.c):
        if a.is_zero():
            continue
        terms.append(f"({pretty(a)})" + ("" if k == 0 else "t" if k == 1 else f"t^{k}"))
    return " + ".join(terms) or "0"


# --- figures ------------------------------------------------------------------

def _svg(polylines, points=(), labels=(), size=512):
    """polylines: list of (points in [-1,1]², color); y axis up."""
    def tx(p):
        return (size / 2 * (1 + p[0]), size / 2 * (1 - p[1]))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">',
           f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
           f'<circle cx="{size / 2}" cy="{size / 2}" r="{size / 2}" fill="none" stroke="#bbb"/>']
    for pts, color in polylines:
        s = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(tx, pts))
        out.append(f'<polyline points="{s}" fill="none" stroke="{color}" stroke-width="2"/>')
    for p, color in points:
        x, y = tx(p)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="{color}"/>')
    for p, text in labels:
        x, y = tx(p)
        out.append(f'<text x="{x:.1f}" y="{y:.1f}" font-size="11">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def emit_figure(what, svg_path=None, csv_path=None, samples=256, label="B0b", pair=None, third=None):
    """Write an SVG (and optional CSV) of one of the figures.

    what: "octagon", "arcs", "projection" (octagon plus critical points of
    ``label``) or "face" (the trace of ``third`` on the Giraud disk of
    ``pair``).  Projections are onto the (t2, t3) plane.
    """
    if samples < 2:
        raise ValueError("need at least two samples per arc")
    rows = []
    polylines, points, labels = [], [], []
    if what in ("octagon", "arcs", "projection"):
        oc = octagon()
        for i, arc in enumerate(oc.arcs):
            pts = arc.sample(samples)
            for p in pts:
                rows.append((arc.index, arc.label) + tuple(p))
            color = "#555" if what == "octagon" else COLORS[i % len(COLORS)]
            polylines.append(([(p[1], p[2]) for p in pts], color))
            if what == "arcs":
                mid = pts[len(pts) // 2]
                labels.append(((mid[1], mid[2]), f"α{arc.index} {arc.label}"))
        if what == "projection":
            for cp in critical_points(label):
                t = cp.approx()
                points.append(((t[1], t[2]), "#d62728" if cp.outside else "#2ca02c"))
                rows.append(("critical", label) + t)
        header = ("arc", "label", "t1", "t2", "t3")
    elif what == "face":
        if pair is None or third is None:
            raise ValueError("a face figure needs a bisector pair and a third label")
        pts = giraud_face_samples(pair, third, samples)
        for p in pts:
            rows.append((f"{pair[0]}∩{pair[1]}", third) + tuple(p))
        header = ("disk", "third", "x", "y")
        points = [(p, "#d62728") for p in pts]
    else:
        raise ValueError(f"unknown figure {what!r}")
    svg = _svg(polylines, points, labels)
    if svg_path:
        with open(svg_path, "w") as fh:
            fh.write(svg)
    if csv_path:
        import csv
        with open(csv_path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            for r in rows:
                w.writerow([f"{x:.9f}" if isinstance(x, float) else x for x in r])
    return svg


def giraud_face_samples(pair, third, samples=128):
    """Points of the Giraud disk of ``pair`` where ``third``'s equation changes sign.

    The disk is drawn in the (θ1, θ2) torus coordinates rescaled to [-1, 1]²;
    only negative points of the chart are used.
    """
    import cmath
    from .bisectors import GiraudChart, dirichlet_bisectors, bisector_c
    bs = dict(dirichlet_bisectors())
    bs["C"] = bisector_c()
    ch = GiraudChart(bs[pair[0]], bs[pair[1]])
    v = ch.approx_vectors()
    tb = bs[third]
    p, q = tb.p.approx(), tb.q.approx()

    def h(z, w):
        return -z[0] * w[0].conjugate() + z[1] * w[1].conjugate() + z[2] * w[2].conjugate()

    grid = {}
    n = samples
    for i in range(n):
        for j in range(n):
            z1 = cmath.exp(2j * math.pi * i / n)
            z2 = cmath.exp(2j * math.pi * j / n)
            V = [v[0][k] + z1 * v[1][k] + z2 * v[2][k] + z1 * z2 * v[3][k] for k in range(3)]
            neg = h(V, V).real < 0
            grid[i, j] = (abs(h(V, p)) ** 2 - abs(h(V, q)) ** 2, neg)
    pts = []
    for i in range(n):
        for j in range(n):
            a, na = grid[i, j]
            for di, dj in ((1, 0), (0, 1)):
                b, nb = grid[(i + di) % n, (j + dj) % n]
                if na and nb and a * b < 0:
                    pts.append((2 * i / n - 1, 2 * j / n - 1))
    return pts
