"""Univariate polynomials over K0 with Sturm-sequence root isolation."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .numfield import ONE, ZERO, Interval, RealAlgebraic, real, to_decimal


class Poly:
    """Polynomial with RealAlgebraic coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [real(x) for x in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def x(cls):
        return cls([ZERO, ONE])

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def lead(self):
        return self.c[-1]

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else ZERO

    def __add__(self, other):
        other = _pcoerce(other)
        n = max(len(self.c), len(other.c))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.c])

    def __sub__(self, other):
        return self + (-_pcoerce(other))

    def __rsub__(self, other):
        return _pcoerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return Poly([a * other for a in self.c])
        other = _pcoerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [ZERO] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a.is_zero():
                continue
            for j, b in enumerate(other.c):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly([ONE])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _pcoerce(other)
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [ZERO] * max(len(rem) - len(other.c) + 1, 1)
        inv = other.lead().inverse()
        dq = other.degree
        while len(rem) - 1 >= dq and rem:
            k = len(rem) - 1 - dq
            f = rem[-1] * inv
            q[k] = f
            for j, b in enumerate(other.c):
                rem[k + j] = rem[k + j] - f * b
            rem.pop()
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(q), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def derivative(self):
        return Poly([a * k for k, a in enumerate(self.c)][1:])

    def monic(self):
        return self * self.lead().inverse()

    def compose(self, other):
        out = Poly()
        for a in reversed(self.c):
            out = out * other + Poly([a])
        return out

    def mirror(self):
        """p(-x)."""
        return Poly([a if k % 2 == 0 else -a for k, a in enumerate(self.c)])

    def __call__(self, x):
        """Exact evaluation at a rational or RealAlgebraic point."""
        out = ZERO
        for a in reversed(self.c):
            out = out * x + a
        return out

    def eval_interval(self, x: Interval, width=Fraction(1, 10 ** 30)):
        out = Interval(0)
        for a in reversed(self.c):
            out = out * x + a.enclose(width)
        return out

    def sign_at(self, x):
        return self(x).sign()

    def primitive(self):
        """Scale by a positive rational so that all numerators are coprime integers."""
        if self.is_zero():
            return self
        den = 1
        g = 0
        for a in self.c:
            for q in a.coeffs:
                den = den * q.denominator // gcd(den, q.denominator)
        for a in self.c:
            for q in a.coeffs:
                g = gcd(g, (q * den).numerator)
        return self * Fraction(den, g)

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.c):
            if a.is_zero():
                continue
            terms.append(f"({a})" + ("" if k == 0 else f"*t^{k}" if k > 1 else "*t"))
        return " + ".join(terms) if terms else "0"


def _pcoerce(x):
    if isinstance(x, Poly):
        return x
    return Poly([real(x)])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic() if not a.is_zero() else a


def squarefree(p: Poly) -> Poly:
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return (p // g).primitive()


def sturm_sequence(p: Poly):
    seq = [p.primitive(), p.derivative().primitive()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append((-r).primitive())
    return [s for s in seq if not s.is_zero()]


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at(seq, x):
    return [s.sign_at(x) for s in seq]


def _signs_at_inf(seq, positive=True):
    out = []
    for s in seq:
        lead = s.lead().sign()
        if not positive and s.degree % 2:
            lead = -lead
        out.append(lead)
    return out


def count_roots(p: Poly, lo=None, hi=None, seq=None) -> int:
    """Number of distinct real roots in (lo, hi]; None means infinity."""
    if seq is None:
        seq = sturm_sequence(p)
    va = _variations(_signs_at_inf(seq, False) if lo is None else _signs_at(seq, lo))
    vb = _variations(_signs_at_inf(seq, True) if hi is None else _signs_at(seq, hi))
    return va - vb


def root_bound(p: Poly) -> Fraction:
    """Rational bound B with every real root in (-B, B)."""
    lead = abs(p.lead()).enclose(Fraction(1, 10 ** 6)).lo
    m = Fraction(0)
    for a in p.c[:-1]:
        m = max(m, abs(a).enclose(Fraction(1, 10 ** 6)).hi)
    return 1 + m / lead + 1


class RealRoot:
    """A real root of a square-free polynomial, isolated in a rational interval.

    Either ``lo == hi`` (an exact rational root) or the polynomial has exactly
    one root in the open interval (lo, hi) and none at the endpoints.
    """

    def __init__(self, poly: Poly, lo: Fraction, hi: Fraction):
        self.poly = poly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)

    @property
    def interval(self):
        return Interval(self.lo, self.hi)

    def is_exact(self):
        return self.lo == self.hi

    def refine(self, width=Fraction(1, 10 ** 8)):
        if self.is_exact():
            return self
        width = Fraction(width)
        s_lo = self.poly.sign_at(self.lo)
        while self.hi - self.lo > width:
            m = (self.lo + self.hi) / 2
            s = self.poly.sign_at(m)
            if s == 0:
                self.lo = self.hi = m
                return self
            if s == s_lo:
                self.lo = m
            else:
                self.hi = m
        return self

    def __float__(self):
        return float((self.lo + self.hi) / 2)

    def decimal(self, digits=6):
        self.refine(Fraction(1, 10 ** (digits + 4)))
        return to_decimal(self.interval, digits)

    def __repr__(self):
        return f"RealRoot(~{float(self):.9f})"


def isolate_roots(p: Poly, lo=None, hi=None, width=Fraction(1, 10 ** 8)):
    """All distinct real roots in the closed interval [lo, hi] (default: all of R)."""
    if p.degree <= 0:
        return []
    q = squarefree(p.primitive())
    seq = sturm_sequence(q)
    if lo is None or hi is None:
        b = root_bound(q)
        lo = -b if lo is None else Fraction(lo)
        hi = b if hi is None else Fraction(hi)
    lo, hi = Fraction(lo), Fraction(hi)
    roots = []
    if q.sign_at(lo) == 0:
        roots.append(RealRoot(q, lo, lo))
    stack = [(lo, hi)]
    found = []
    while stack:
        a, b = stack.pop()
        n = count_roots(q, a, b, seq)
        if n == 0:
            continue
        if q.sign_at(b) == 0:
            found.append(RealRoot(q, b, b))
            n -= 1
            if n == 0:
                continue
            # remaining roots are strictly inside (a, b)
        if n == 1 and q.sign_at(b) != 0 and q.sign_at(a) != 0:
            found.append(RealRoot(q, a, b))
            continue
        m = (a + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    roots.extend(found)
    # an endpoint root at b may have been recorded twice through splitting
    uniq = {}
    for r in roots:
        uniq[(r.lo, r.hi)] = r
    out = sorted(uniq.values(), key=lambda r: r.lo)
    for r in out:
        r.refine(width)
    return out
