"""Bisectors, Giraud charts and certified pairwise intersections.

A bisector B(p, q) is stored through equal-norm lifts.  Writing a point of
the extended bisector as the polar of q - z p with |z| = 1, the intersection
of two bisectors is swept out by

    V(z1, z2) = (zb1 p1 - q1) ⊠ (zb2 p2 - q2) = v0 + z1 v1 + z2 v2 + z1 z2 v3

(zb = conj(z); the box product is conjugate-linear in each slot).  For fixed
z1 the norm is Re(mu(z1) z2) - nu(z1), so the minimum over z2 is
-|mu| - nu and the question reduces to a trigonometric polynomial in z1.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chgeom import (
    CollinearInput, HermitianVector, Isometry, NotUnitary, apply, box, det3, herm, proj_equal,
)
from .numfield import I, ONE, ZERO, AlgebraicNumber, RealAlgebraic, num, pretty, real
from .poly import Poly, count_roots, sturm_sequence


class FixedCenter(ValueError):
    pass


class CospinalPair(ValueError):
    pass


class NotEmpty(Exception):
    def __init__(self, witness, message="intersection is not empty"):
        super().__init__(message)
        self.witness = witness


class SearchExhausted(Exception):
    pass


class Undecided(Exception):
    """Neither a positivity certificate nor a witness could be produced."""


class Bisector:
    """B(p, q) with <p, p> = <q, q> exactly."""

    def __init__(self, p: HermitianVector, q: HermitianVector, name=None):
        if herm(p, p) != herm(q, q):
            raise ValueError("lifts must have equal self-norms")
        if proj_equal(p, q):
            raise FixedCenter("the two centers coincide")
        self.p, self.q, self.name = p, q, name

    def contains(self, w: HermitianVector) -> bool:
        """Exact test |<w, p>| = |<w, q>| (for any point, not only negative ones)."""
        return herm(w, self.p).abs2() == herm(w, self.q).abs2()

    def equation_value(self, w):
        return herm(w, self.p).abs2() - herm(w, self.q).abs2()

    def __repr__(self):
        return f"Bisector({self.name or '?'})"


def bisector_of(g: Isometry, center: HermitianVector, name=None) -> Bisector:
    """B(center, g(center)), lifts rescaled so the self-norms agree."""
    q = apply(g, center)
    if proj_equal(q, center):
        raise FixedCenter(f"{g.name or 'g'} fixes the center")
    lam = g.unitarity_scalar()
    if lam != ONE:
        root = _rational_sqrt(lam)
        if root is None:
            raise NotUnitary("unitarity scalar is not a rational square")
        q = q.scale(num(1 / root))
    return Bisector(center, q, name)


def _rational_sqrt(x: RealAlgebraic):
    if not x.is_rational():
        return None
    r = x.rational()
    a, b = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if a * a == r.numerator and b * b == r.denominator:
        return Fraction(a, b)
    return None


def cospinal(b1: Bisector, b2: Bisector) -> bool:
    """True iff the complex spines agree: p2, q2 lie in span{p1, q1}."""
    c1 = [b1.p.coords, b1.q.coords]
    return all(det3([c1[0], c1[1], v.coords]).is_zero() for v in (b2.p, b2.q))


# --- cospinal pairs -----------------------------------------------------------

def _spine_circle(p1, q1, b: Bisector):
    """Circle A|ζ|² + 2Re(Xζ) + C = 0 cut out by b on the line w = p1 + ζ q1."""
    al, be = herm(p1, b.p), herm(q1, b.p)
    ga, de = herm(p1, b.q), herm(q1, b.q)
    A = be.abs2() - de.abs2()
    X = al.conjugate() * be - ga.conjugate() * de
    C = al.abs2() - ga.abs2()
    return A, X, C


def spine_crossing(b1: Bisector, b2: Bisector):
    """Compare the extended real spines of two cospinal bisectors.

    Both are circles in the projective line of the common complex spine, and
    both are symmetric under inversion in its null circle.  Returns +1 when
    they cross twice (so the real spines cross inside the ball), 0 when they
    are tangent and -1 when disjoint.
    """
    if not cospinal(b1, b2):
        raise ValueError("bisectors are not cospinal")
    p1, q1 = b1.p, b1.q
    A1, X1, C1 = _spine_circle(p1, q1, b1)
    A2, X2, C2 = _spine_circle(p1, q1, b2)
    d1 = A1 * C1 - X1.abs2()
    d2 = A2 * C2 - X2.abs2()
    cross = A1 * C2 + A2 * C1 - 2 * (X1 * X2.conjugate()).re
    return -(cross * cross - 4 * d1 * d2).sign()


# --- Laurent and trigonometric polynomials ------------------------------------

class Laurent:
    """Finite Laurent polynomial sum c_k z^k with AlgebraicNumber coefficients."""

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def const(cls, c):
        return cls({0: AlgebraicNumber.coerce(c)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return Laurent(out)

    def __neg__(self):
        return Laurent({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            c = AlgebraicNumber.coerce(other)
            return Laurent({k: v * c for k, v in self.terms.items()})
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return Laurent(out)

    __rmul__ = __mul__

    def circle_conjugate(self):
        """The function conj(f(z)) restricted to |z| = 1."""
        return Laurent({-k: v.conjugate() for k, v in self.terms.items()})

    def is_real_on_circle(self):
        return all(self.terms.get(-k, AlgebraicNumber()) == v.conjugate() for k, v in self.terms.items())

    def __call__(self, z: AlgebraicNumber):
        """Exact value at a point of the unit circle."""
        zb = z.conjugate()
        out = AlgebraicNumber()
        for k, v in self.terms.items():
            out = out + v * (z ** k if k >= 0 else zb ** (-k))
        return out

    def approx(self, z: complex) -> complex:
        return sum(complex(v) * z ** k for k, v in self.terms.items())

    def trig(self) -> "TrigPoly":
        if not self.is_real_on_circle():
            raise ValueError("not real-valued on the circle")
        n = max((abs(k) for k in self.terms), default=0)
        cos = [ZERO] * (n + 1)
        sin = [ZERO] * (n + 1)
        cos[0] = self.terms.get(0, AlgebraicNumber()).re
        for k in range(1, n + 1):
            c = self.terms.get(k, AlgebraicNumber())
            # c z^k + conj(c) z^-k = 2Re(c) cos kθ - 2Im(c) sin kθ
            cos[k] = 2 * c.re
            sin[k] = -2 * c.im
        return TrigPoly(cos, sin)


class TrigPoly:
    """a0 + sum_k (a_k cos kθ + b_k sin kθ) with RealAlgebraic coefficients."""

    def __init__(self, cos, sin=None):
        cos = [real(x) for x in cos]
        sin = [real(x) for x in (sin or [])]
        n = max(len(cos), len(sin))
        cos += [ZERO] * (n - len(cos))
        sin += [ZERO] * (n - len(sin))
        if sin:
            sin[0] = ZERO
        while n > 1 and cos[-1].is_zero() and sin[-1].is_zero():
            cos.pop()
            sin.pop()
            n -= 1
        self.cos, self.sin = cos, sin

    @property
    def degree(self):
        return len(self.cos) - 1

    def __eq__(self, other):
        return isinstance(other, TrigPoly) and self.cos == other.cos and self.sin == other.sin

    def __sub__(self, other):
        n = max(len(self.cos), len(other.cos))
        g = lambda xs, k: xs[k] if k < len(xs) else ZERO
        return TrigPoly([g(self.cos, k) - g(other.cos, k) for k in range(n)],
                        [g(self.sin, k) - g(other.sin, k) for k in range(n)])

    def scale(self, c):
        return TrigPoly([a * c for a in self.cos], [b * c for b in self.sin])

    def __call__(self, theta: float) -> float:
        return float(self.cos[0]) + sum(
            float(self.cos[k]) * math.cos(k * theta) + float(self.sin[k]) * math.sin(k * theta)
            for k in range(1, len(self.cos))
        )

    def exact(self, c, s) -> RealAlgebraic:
        """Exact value given cos θ = c and sin θ = s in the field."""
        c, s = real(c), real(s)
        ck, sk = ONE, ZERO
        out = self.cos[0]
        for k in range(1, len(self.cos)):
            ck, sk = ck * c - sk * s, sk * c + ck * s
            out = out + self.cos[k] * ck + self.sin[k] * sk
        return out

    def at_pi(self) -> RealAlgebraic:
        out = ZERO
        for k, a in enumerate(self.cos):
            out = out + (a if k % 2 == 0 else -a)
        return out

    def weierstrass(self) -> Poly:
        """(1+t²)^n f(θ) with t = tan(θ/2), a polynomial in t over K0."""
        n = self.degree
        c1 = Poly([1, 0, -1])
        s1 = Poly([0, 2])
        d = Poly([1, 0, 1])
        ck, sk = Poly([1]), Poly([0])
        out = Poly([self.cos[0]]) * d ** n
        for k in range(1, n + 1):
            ck, sk = ck * c1 - sk * s1, sk * c1 + ck * s1
            out = out + (ck * self.cos[k] + sk * self.sin[k]) * d ** (n - k)
        return out

    def terms(self):
        out = [("1", self.cos[0])]
        for k in range(1, len(self.cos)):
            tag = "" if k == 1 else str(k)
            out.append((f"cos({tag}θ)", self.cos[k]))
            out.append((f"sin({tag}θ)", self.sin[k]))
        return [(m, a) for m, a in out if not a.is_zero()]

    def __str__(self):
        parts = [f"({a})" + ("" if m == "1" else "*" + m) for m, a in self.terms()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def trig_from_powers(const=0, cos=0, sin=0, cos2=0, sin2=0, cos_sq=0, sin_sq=0, sincos=0):
    """Build a TrigPoly from a mixed expansion in cos θ, sin θ, cos²θ, sin 2θ, ..."""
    const, cos_sq, sin_sq, sincos = real(const), real(cos_sq), real(sin_sq), real(sincos)
    half = Fraction(1, 2)
    a0 = const + (cos_sq + sin_sq) * half
    a2 = real(cos2) + (cos_sq - sin_sq) * half
    b2 = real(sin2) + sincos * half
    return TrigPoly([a0, cos, a2], [0, sin, b2])


# --- Giraud charts ----------------------------------------------------------

def _box0(u, v):
    try:
        return box(u, v)
    except CollinearInput:
        return HermitianVector([0, 0, 0], u.form)


class GiraudChart:
    def __init__(self, b1: Bisector, b2: Bisector):
        if cospinal(b1, b2):
            raise CospinalPair(f"{b1.name} and {b2.name} are cospinal")
        self.b1, self.b2 = b1, b2
        p1, q1, p2, q2 = b1.p, b1.q, b2.p, b2.q
        self.v0 = _box0(q1, q2)
        self.v1 = -_box0(p1, q2)
        self.v2 = -_box0(q1, p2)
        self.v3 = _box0(p1, p2)  # zero when the bisectors share a center

    @property
    def vectors(self):
        return (self.v0, self.v1, self.v2, self.v3)

    def vector(self, z1, z2) -> HermitianVector:
        z1, z2 = AlgebraicNumber.coerce(z1), AlgebraicNumber.coerce(z2)
        return self.v0 + self.v1.scale(z1) + self.v2.scale(z2) + self.v3.scale(z1 * z2)

    def mu_nu(self):
        """(mu, nu) as Laurent polynomials in z1, exact."""
        v0, v1, v2, v3 = self.vectors
        h = herm
        mu = Laurent({0: 2 * (h(v2, v0) + h(v3, v1)), 1: 2 * h(v3, v0), -1: 2 * h(v2, v1)})
        a = h(v1, v0) + h(v3, v2)
        s = h(v0, v0) + h(v1, v1) + h(v2, v2) + h(v3, v3)
        # -(s + 2 Re(z1 a)) = -(s + z1 a + zb1 conj(a))
        nu = Laurent({0: -s, 1: -a, -1: -a.conjugate()})
        return mu, nu

    def discriminant(self) -> TrigPoly:
        """nu² - |mu|² as a trigonometric polynomial in θ (z1 = e^{iθ})."""
        mu, nu = self.mu_nu()
        return (nu * nu - mu * mu.circle_conjugate()).trig()

    def approx_vectors(self):
        return [v.approx() for v in self.vectors]


def giraud_chart(b1, b2) -> GiraudChart:
    return GiraudChart(b1, b2)


def mu_nu(chart: GiraudChart):
    mu, nu = chart.mu_nu()
    return mu, nu.trig()


# --- emptiness certificates --------------------------------------------------

@dataclass
class Certificate:
    """Proof data for <V, V> > 0 on the whole Giraud torus."""

    pair: tuple
    discriminant: TrigPoly
    weierstrass: Poly
    real_roots: int
    value_at_zero: RealAlgebraic
    value_at_pi: RealAlgebraic
    nu_at_one: RealAlgebraic

    @property
    def valid(self):
        return (
            self.real_roots == 0
            and self.value_at_zero.sign() > 0
            and self.value_at_pi.sign() > 0
            and self.nu_at_one.sign() < 0
        )

    def summary(self):
        return (
            f"{self.pair[0]} ∩ {self.pair[1]}: deg {self.weierstrass.degree} Weierstrass polynomial, "
            f"{self.real_roots} real roots, F(0) > 0, F(π) > 0, ν(1) < 0"
        )


def _certificate(b1, b2, chart=None):
    chart = chart or GiraudChart(b1, b2)
    F = chart.discriminant()
    W = F.weierstrass()
    roots = count_roots(W, None, None, sturm_sequence(W)) if W.degree > 0 else 0
    _, nu = chart.mu_nu()
    return Certificate(
        pair=(b1.name, b2.name),
        discriminant=F,
        weierstrass=W,
        real_roots=roots,
        value_at_zero=F.exact(1, 0),
        value_at_pi=F.at_pi(),
        nu_at_one=nu(AlgebraicNumber.coerce(1)).re,
    )


def certify_empty(b1: Bisector, b2: Bisector) -> Certificate:
    """Certificate that b1 ∩ b2 is empty, or NotEmpty carrying a witness."""
    chart = GiraudChart(b1, b2)
    cert = _certificate(b1, b2, chart)
    if cert.valid:
        return cert
    try:
        w = witness_nonempty(b1, b2, chart=chart)
    except SearchExhausted:
        raise Undecided(f"no certificate and no witness for {b1.name}, {b2.name}")
    raise NotEmpty(w)


# --- witnesses --------------------------------------------------------------

def circle_point(theta: float, max_den=4096) -> AlgebraicNumber:
    """An exact point of Q(i) on the unit circle close to e^{iθ}."""
    theta = math.remainder(theta, 2 * math.pi)
    if abs(theta) > math.pi / 2:
        return -circle_point(theta - math.pi, max_den)
    t = Fraction(math.tan(theta / 2)).limit_denominator(max_den)
    d = 1 + t * t
    return AlgebraicNumber(real((1 - t * t) / d), real(2 * t / d))


def is_witness(b1, b2, w: HermitianVector) -> bool:
    return w.norm().sign() < 0 and b1.contains(w) and b2.contains(w)


def witness_nonempty(b1, b2, hint=None, chart=None, samples=24, doublings=3) -> HermitianVector:
    """An exact negative vector on both bisectors."""
    if hint is not None:
        if is_witness(b1, b2, hint):
            return hint
    chart = chart or GiraudChart(b1, b2)
    mu, nu = chart.mu_nu()
    n = samples
    for _ in range(doublings + 1):
        cands = []
        for k in range(n):
            th = 2 * math.pi * k / n
            z = cmath.exp(1j * th)
            m, v = mu.approx(z), nu.approx(z).real
            cands.append((-abs(m) - v, th, m))
        cands.sort()
        for val, th, m in cands:
            if val >= 0:
                break
            z1 = circle_point(th)
            # the minimum over z2 sits at z2 = -conj(mu)/|mu|
            phase = cmath.phase(-m.conjugate()) if abs(m) > 0 else 0.0
            for den in (4096, 1 << 20):
                z2 = circle_point(phase, den)
                w = chart.vector(z1, z2)
                if w.norm().sign() < 0:
                    return w
        n *= 2
    raise SearchExhausted(f"no witness for {b1.name}, {b2.name} at {n // 2} samples")


# --- classification ---------------------------------------------------------

class IntersectionKind(enum.Enum):
    Empty = "Empty"
    GiraudDisk = "GiraudDisk"
    ComplexGeodesic = "ComplexGeodesic"
    Cospinal = "Cospinal"  # cospinal with disjoint real spines

    @property
    def nonempty(self):
        return self in (IntersectionKind.GiraudDisk, IntersectionKind.ComplexGeodesic)


@dataclass
class PairResult:
    a: str
    b: str
    kind: IntersectionKind
    certificate: Certificate = None
    witness: HermitianVector = None
    detail: str = ""

    def sound(self) -> bool:
        """Re-verify the attached evidence."""
        if self.kind is IntersectionKind.Empty:
            return self.certificate is not None and self.certificate.valid
        if self.kind is IntersectionKind.GiraudDisk:
            return self.witness is not None and self.witness.norm().sign() < 0
        return True


def classify_pair(b1: Bisector, b2: Bisector, hint=None) -> PairResult:
    if cospinal(b1, b2):
        c = spine_crossing(b1, b2)
        if c > 0:
            return PairResult(b1.name, b2.name, IntersectionKind.ComplexGeodesic, detail="real spines cross")
        detail = "real spines tangent at infinity" if c == 0 else "real spines disjoint"
        return PairResult(b1.name, b2.name, IntersectionKind.Cospinal, detail=detail)
    chart = GiraudChart(b1, b2)
    if hint is not None and is_witness(b1, b2, hint):
        return PairResult(b1.name, b2.name, IntersectionKind.GiraudDisk, witness=hint, detail="hint")
    cert = _certificate(b1, b2, chart)
    if cert.valid:
        return PairResult(b1.name, b2.name, IntersectionKind.Empty, certificate=cert)
    w = witness_nonempty(b1, b2, chart=chart)
    return PairResult(b1.name, b2.name, IntersectionKind.GiraudDisk, witness=w)


# --- the Dirichlet bisectors and C --------------------------------------------

_DIRICHLET = None


def dirichlet_bisectors():
    """label string -> B(o, g o) for the 24 generators."""
    global _DIRICHLET
    if _DIRICHLET is None:
        from .reps import generating_set, origin
        o = origin()
        _DIRICHLET = {str(lab): bisector_of(g, o, str(lab)) for lab, g in generating_set()}
    return _DIRICHLET


def c_centers():
    """a = γ0γ1⁻¹(o) and b = γ1γ0⁻¹(o)."""
    from .reps import gamma, origin
    o = origin()
    a = apply(gamma(0) @ gamma(1).inverse(), o)
    b = apply(gamma(1) @ gamma(0).inverse(), o)
    return a, b


def bisector_c() -> Bisector:
    """The bisector C equidistant from γ1γ0⁻¹(o) and γ0γ1⁻¹(o).

    The lifts are ordered so that the Giraud chart against B0 is
    (zb1 a - b) ⊠ (zb2 o - γ0 o).
    """
    a, b = c_centers()
    return Bisector(a, b, "C")


class IntersectionTable:
    def __init__(self, results):
        self.results = {}
        for r in results:
            self.results[(r.a, r.b)] = r
            self.results[(r.b, r.a)] = r

    def kind(self, a, b) -> IntersectionKind:
        return self.results[(a, b)].kind

    def get(self, a, b) -> PairResult:
        return self.results[(a, b)]

    def labels(self):
        seen = []
        for a, _ in self.results:
            if a not in seen:
                seen.append(a)
        return seen

    def row(self, a):
        """Labels whose bisector meets a's bisector."""
        return {b for (x, b), r in self.results.items() if x == a and r.kind.nonempty}

    def to_csv(self) -> str:
        labs = self.labels()
        lines = ["," + ",".join(labs)]
        for a in labs:
            cells = [("-" if a == b else self.results[(a, b)].kind.value) for b in labs]
            lines.append(a + "," + ",".join(cells))
        return "\n".join(lines) + "\n"

    def log(self):
        out = []
        for (a, b), r in sorted(self.results.items()):
            if a >= b:
                continue
            if r.kind is IntersectionKind.Empty:
                out.append(r.certificate.summary())
            elif r.kind is IntersectionKind.GiraudDisk:
                out.append(f"{a} ∩ {b}: witness with <w,w> = {pretty(r.witness.norm())}")
            else:
                out.append(f"{a} ∩ {b}: {r.kind.value} ({r.detail})")
        return out


def intersection_table(bisectors: dict, pairs=None, hints=None, progress=None) -> IntersectionTable:
    """Classify every unordered pair (or the given pairs) of named bisectors."""
    hints = hints or {}
    names = list(bisectors)
    if pairs is None:
        pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    results = []
    for n, (a, b) in enumerate(pairs):
        if progress:
            progress(n, len(pairs), a, b)
        hint = hints.get((a, b)) or hints.get((b, a))
        results.append(classify_pair(bisectors[a], bisectors[b], hint))
    return IntersectionTable(results)


def row_table(center: str, bisectors: dict, hints=None) -> IntersectionTable:
    pairs = [(center, b) for b in bisectors if b != center]
    return intersection_table(bisectors, pairs, hints)


def c_row(hints=None) -> IntersectionTable:
    """C against each of the 24 Dirichlet bisectors, in H²."""
    bs = dict(dirichlet_bisectors())
    bs["C"] = bisector_c()
    return row_table("C", bs, hints)


# --- published witnesses ----------------------------------------------------

@dataclass
class WitnessReport:
    label: str
    norm: RealAlgebraic
    negative: bool
    on_pair: bool
    corrected_on_pair: bool   # after flipping the sign of Im of the first coordinate
    also_on: list = field(default_factory=list)


def _flip_first_imaginary(w: HermitianVector) -> HermitianVector:
    c = list(w.coords)
    c[0] = AlgebraicNumber(c[0].re, -c[0].im)
    return HermitianVector(c, w.form)


def witness_reports(witnesses: dict):
    """Check each listed point: negative norm, and whether it lies on C ∩ B_label."""
    C = bisector_c()
    bs = dirichlet_bisectors()
    out = []
    for lab, w in witnesses.items():
        b2 = bs[lab]
        on = C.contains(w) and b2.contains(w)
        fixed = _flip_first_imaginary(w)
        corr = C.contains(fixed) and b2.contains(fixed)
        probe = w if on else fixed
        also = [k for k, b in bs.items() if k != lab and C.contains(probe) and b.contains(probe)]
        n = w.norm()
        out.append(WitnessReport(lab, n, n.sign() < 0, on, corr, also))
    return out


# --- the (C, B0) chart against the published one ---------------------------

@dataclass
class ChartComparison:
    index: int
    derived: HermitianVector
    printed: HermitianVector

    @property
    def equal(self):
        return self.derived == self.printed

    @property
    def ratio(self):
        """The printed vector as a multiple of the derived one, or None."""
        for a, b in zip(self.derived.coords, self.printed.coords):
            if not a.is_zero():
                r = b / a
                if self.derived.scale(r) == self.printed:
                    return r
                return None
        return None


def chart_comparison(printed):
    chart = GiraudChart(bisector_c(), dirichlet_bisectors()["B0"])
    return [ChartComparison(k, d, p) for k, (d, p) in enumerate(zip(chart.vectors, printed))]


@dataclass
class DiscriminantComparison:
    derived: TrigPoly      # nu² - |mu|² divided by the common scale
    printed: TrigPoly
    scale: Fraction
    derived_positive: bool
    printed_positive: bool

    @property
    def equal(self):
        return self.derived == self.printed

    def differences(self):
        """(monomial, derived, printed) for every coefficient that differs."""
        d, p = dict(self.derived.terms()), dict(self.printed.terms())
        out = []
        for m in sorted(set(d) | set(p)):
            a, b = d.get(m, ZERO), p.get(m, ZERO)
            if a != b:
                out.append((m, a, b))
        return out


def _positive_on_circle(F: TrigPoly) -> bool:
    W = F.weierstrass()
    if W.degree > 0 and count_roots(W, None, None, sturm_sequence(W)) > 0:
        return False
    return F.exact(1, 0).sign() > 0 and F.at_pi().sign() > 0


def discriminant_comparison(printed: dict) -> DiscriminantComparison:
    """Compare nu² - |mu|² for (C, B0), with the printed scale factor cleared."""
    scale = Fraction(printed["scale"])
    chart = GiraudChart(bisector_c(), dirichlet_bisectors()["B0"])
    F = chart.discriminant().scale(1 / scale)
    terms = {k: v for k, v in printed.items() if k != "scale"}
    P = trig_from_powers(**terms)
    return DiscriminantComparison(F, P, scale, _positive_on_circle(F), _positive_on_circle(P))
