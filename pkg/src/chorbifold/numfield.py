"""Exact arithmetic in K0 = Q(sqrt2, sqrt3, sqrt5) and K = K0(i).

Elements of K0 are stored as eight integer numerators over one positive
common denominator.  Internally the basis monomial with index ``m`` is
sqrt(2)^(m&1) * sqrt(3)^(m>>1&1) * sqrt(5)^(m>>2&1), so multiplying two
monomials is an xor of indices times a rational factor.  The public
``coeffs`` property uses the order 1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10,
sqrt15, sqrt30.
"""
from __future__ import annotations

import math
import re
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import reduce

_PRIMES = (2, 3, 5)
# radicand of internal index m
_RADICAND = tuple(
    (2 if m & 1 else 1) * (3 if m & 2 else 1) * (5 if m & 4 else 1) for m in range(8)
)
# the radicands in the documented (public) order
RADICANDS = (1, 2, 3, 5, 6, 10, 15, 30)
_PUBLIC_TO_INTERNAL = tuple(_RADICAND.index(r) for r in RADICANDS)


def _pair_factor(i, j):
    f = 1
    for bit, p in zip((1, 2, 4), _PRIMES):
        if i & j & bit:
            f *= p
    return f


_MUL = [[(i ^ j, _pair_factor(i, j)) for j in range(8)] for i in range(8)]


class DivisionByZero(ZeroDivisionError):
    pass


class Interval:
    """Closed interval with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_interval(other)
        if other.lo <= 0 <= other.hi:
            raise DivisionByZero("interval division by an interval containing 0")
        return self * Interval(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other):
        return _as_interval(other) / self

    def __pow__(self, n):
        if n == 2:
            if self.lo >= 0:
                return Interval(self.lo ** 2, self.hi ** 2)
            if self.hi <= 0:
                return Interval(self.hi ** 2, self.lo ** 2)
            return Interval(0, max(self.lo ** 2, self.hi ** 2))
        out = Interval(1)
        for _ in range(n):
            out = out * self
        return out

    def sqrt(self, bits=60):
        """Enclosure of the square root; negative parts are clipped to 0."""
        lo = max(self.lo, Fraction(0))
        if self.hi < 0:
            raise ValueError("sqrt of a negative interval")
        return Interval(_sqrt_floor(lo, bits), _sqrt_ceil(self.hi, bits))

    def round_out(self, bits=64):
        """Widen to dyadic endpoints with denominator 2**bits."""
        s = 1 << bits
        return Interval(Fraction(math.floor(self.lo * s), s), Fraction(math.ceil(self.hi * s), s))

    def abs(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    def hull(self, other):
        other = _as_interval(other)
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersects(self, other):
        other = _as_interval(other)
        return self.lo <= other.hi and other.lo <= self.hi

    def positive(self):
        return self.lo > 0

    def negative(self):
        return self.hi < 0

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        return f"Interval({float(self.lo):.12g}, {float(self.hi):.12g})"


def _as_interval(x):
    if isinstance(x, Interval):
        return x
    if isinstance(x, RealAlgebraic):
        return x.enclose(Fraction(1, 10 ** 30))
    return Interval(x)


def _sqrt_floor(q, bits):
    q = Fraction(q)
    if q <= 0:
        return Fraction(0)
    scale = 1 << bits
    return Fraction(math.isqrt(q.numerator * scale * scale // q.denominator), scale)


def _sqrt_ceil(q, bits):
    q = Fraction(q)
    if q <= 0:
        return Fraction(0)
    lo = _sqrt_floor(q, bits)
    if lo * lo == q:
        return lo
    return lo + Fraction(1, 1 << bits)


class RealAlgebraic:
    """An element of Q(sqrt2, sqrt3, sqrt5)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, nums=(0,) * 8, den=1, _normalized=False):
        if _normalized:
            self._num = nums
            self._den = den
        else:
            nums = tuple(int(n) for n in nums)
            if len(nums) != 8:
                raise ValueError("need 8 numerators")
            den = int(den)
            if den == 0:
                raise DivisionByZero("zero denominator")
            if den < 0:
                nums = tuple(-n for n in nums)
                den = -den
            g = reduce(math.gcd, nums, den)
            if g > 1:
                nums = tuple(n // g for n in nums)
                den //= g
            self._num = nums
            self._den = den
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        return cls((q.numerator,) + (0,) * 7, q.denominator)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from rationals in the public order 1, sqrt2, ..., sqrt30."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != 8:
            raise ValueError("need 8 coefficients")
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
        nums = [0] * 8
        for pos, c in enumerate(coeffs):
            nums[_PUBLIC_TO_INTERNAL[pos]] = c.numerator * (den // c.denominator)
        return cls(nums, den)

    @classmethod
    def sqrt(cls, q):
        """sqrt(q) for a non-negative rational whose square-free part divides 30."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("negative radicand")
        if q == 0:
            return ZERO
        # sqrt(a/b) = sqrt(a*b)/b
        n = q.numerator * q.denominator
        sq, free = _split_square(n)
        if free not in _RADICAND:
            raise ValueError(f"sqrt({q}) is not in Q(sqrt2, sqrt3, sqrt5)")
        nums = [0] * 8
        nums[_RADICAND.index(free)] = sq
        return cls(nums, q.denominator)

    # access -----------------------------------------------------------
    @property
    def coeffs(self):
        """Rational coefficients in the order 1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30."""
        return tuple(Fraction(self._num[m], self._den) for m in _PUBLIC_TO_INTERNAL)

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("not rational")
        return Fraction(self._num[0], self._den)

    # arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RealAlgebraic):
            return other
        if isinstance(other, (int, Fraction)):
            return RealAlgebraic.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return RealAlgebraic([a + b for a, b in zip(self._num, other._num)], self._den)
        da, db = self._den, other._den
        return RealAlgebraic([a * db + b * da for a, b in zip(self._num, other._num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return RealAlgebraic(tuple(-a for a in self._num), self._den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return RealAlgebraic([a * q.numerator for a in self._num], self._den * q.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = [0] * 8
        a = self._num
        b = other._num
        for i in range(8):
            ai = a[i]
            if not ai:
                continue
            row = _MUL[i]
            for j in range(8):
                bj = b[j]
                if bj:
                    k, f = row[j]
                    out[k] += ai * bj * f
        return RealAlgebraic(out, self._den * other._den)

    __rmul__ = __mul__

    def galois(self, mask):
        """Apply the automorphism flipping the signs of the primes in ``mask``."""
        nums = tuple(-a if bin(m & mask).count("1") % 2 else a for m, a in enumerate(self._num))
        return RealAlgebraic(nums, self._den, _normalized=True)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        prod = ONE
        for mask in range(1, 8):
            prod = prod * self.galois(mask)
        norm = (self * prod).rational()
        return prod * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealAlgebraic.from_rational(other)
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def _bounds(self, bits):
        """Integer bounds L <= self * den * 2**bits <= U."""
        lo = hi = self._num[0] << bits
        scale2 = 1 << (2 * bits)
        for m in range(1, 8):
            a = self._num[m]
            if not a:
                continue
            r = math.isqrt(_RADICAND[m] * scale2)
            if a > 0:
                lo += a * r
                hi += a * (r + 1)
            else:
                lo += a * (r + 1)
                hi += a * r
        return lo, hi

    def sign(self):
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self._num[0] > 0 else -1
        # 10 bits is the first dyadic level at least as fine as the
        # brackets 1.414 < sqrt2 < 1.415 etc.; precision doubles after that
        bits = 10
        while True:
            lo, hi = self._bounds(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def enclose(self, width=Fraction(1, 10 ** 12)):
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if self.is_rational():
            return Interval(self.rational())
        bits = 16
        while True:
            lo, hi = self._bounds(bits)
            scale = self._den << bits
            if Fraction(hi - lo, scale) <= width:
                return Interval(Fraction(lo, scale), Fraction(hi, scale))
            bits *= 2

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.enclose(Fraction(1, 1 << 60)).mid)

    def __bool__(self):
        return not self.is_zero()

    def decimal(self, digits=6):
        return to_decimal(self, digits)

    # text -------------------------------------------------------------
    def __str__(self):
        return format_terms([(c, n, False) for c, n in zip(self.coeffs, RADICANDS)])

    def __repr__(self):
        return f"RealAlgebraic({str(self)!r})"


def _split_square(n):
    """Write n = sq**2 * free with free square-free (n small or smooth)."""
    sq = 1
    free = 1
    m = n
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            sq *= p
        if m % p == 0:
            m //= p
            free *= p
        p += 1
    free *= m
    return sq, free


ZERO = RealAlgebraic()
ONE = RealAlgebraic.from_rational(1)


def real(x):
    """Coerce an int, Fraction, str or RealAlgebraic to RealAlgebraic."""
    if isinstance(x, RealAlgebraic):
        return x
    if isinstance(x, str):
        v = parse(x)
        if not v.im.is_zero():
            raise ValueError(f"{x!r} is not real")
        return v.re
    return RealAlgebraic.from_rational(x)


def sqrt(q):
    return RealAlgebraic.sqrt(q)


class AlgebraicNumber:
    """An element re + i*im of K = K0(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        self.re = real(re)
        self.im = real(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, AlgebraicNumber):
            return x
        if isinstance(x, str):
            return parse(x)
        return cls(real(x), ZERO)

    @property
    def coeffs(self):
        """The 16 rational coordinates: real parts then imaginary parts."""
        return self.re.coeffs + self.im.coeffs

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __add__(self, other):
        other = _acoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(-self.re, -self.im)

    def __sub__(self, other):
        other = _acoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return AlgebraicNumber(self.re * other, self.im * other)
        other = _acoerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b.is_zero():
            return AlgebraicNumber(a * c, a * d)
        if d.is_zero():
            return AlgebraicNumber(a * c, b * c)
        return AlgebraicNumber(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self):
        return AlgebraicNumber(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.abs2()
        if n.is_zero():
            raise DivisionByZero("inverse of zero")
        ninv = n.inverse()
        return AlgebraicNumber(self.re * ninv, -self.im * ninv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = _acoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _acoerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = AlgebraicNumber(ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _acoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        terms = [(c, n, False) for c, n in zip(self.re.coeffs, RADICANDS)]
        terms += [(c, n, True) for c, n in zip(self.im.coeffs, RADICANDS)]
        return format_terms(terms)

    def __repr__(self):
        return f"AlgebraicNumber({str(self)!r})"


def _acoerce(x):
    if isinstance(x, AlgebraicNumber):
        return x
    if isinstance(x, (int, Fraction, RealAlgebraic)):
        return AlgebraicNumber(real(x), ZERO)
    return NotImplemented


I = AlgebraicNumber(ZERO, ONE)


def num(x):
    return AlgebraicNumber.coerce(x)


# --- text format -----------------------------------------------------------

def format_terms(terms):
    parts = []
    for c, n, imag in terms:
        if c == 0:
            continue
        mag = abs(c)
        body = f"({mag.numerator}/{mag.denominator})" if mag.denominator != 1 else f"({mag.numerator})"
        body += "*i" if imag else ""
        body += f"*sqrt({n})"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


_TERM = re.compile(
    r"\s*([+-])?\s*\(\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?\)\s*(\*\s*i\s*)?\*\s*sqrt\(\s*(\d+)\s*\)\s*"
)


def parse(text):
    """Parse the serialization produced by ``str``: signed (p/q)*sqrt(n) and (p/q)*i*sqrt(n) terms."""
    text = text.strip()
    if text == "0":
        return AlgebraicNumber()
    re_nums = [Fraction(0)] * 8
    im_nums = [Fraction(0)] * 8
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse algebraic number at {text[pos:]!r}")
        sign, p, q, imag, n = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing sign before {text[pos:]!r}")
        c = Fraction(int(p), int(q) if q else 1)
        if sign == "-":
            c = -c
        sq, free = _split_square(int(n))
        if free not in RADICANDS:
            raise ValueError(f"sqrt({n}) is not in the field")
        target = im_nums if imag else re_nums
        target[RADICANDS.index(free)] += c * sq
        pos = m.end()
        first = False
    return AlgebraicNumber(RealAlgebraic.from_coeffs(re_nums), RealAlgebraic.from_coeffs(im_nums))


def to_decimal(x, digits=6):
    """Round-half-even decimal string of a real algebraic number or interval."""
    if isinstance(x, RealAlgebraic):
        iv = x.enclose(Fraction(1, 10 ** (digits + 6)))
    elif isinstance(x, Interval):
        iv = x
    else:
        iv = Interval(Fraction(x))
    with localcontext() as ctx:
        ctx.prec = digits + 40
        m = iv.mid
        d = Decimal(m.numerator) / Decimal(m.denominator)
        return str(d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))


def pretty(x) -> str:
    """Compact human form such as ``3 - 5/2√2 + 4i√3`` (not parseable)."""
    x = num(x)
    parts = []
    for coeffs, unit in ((x.re.coeffs, ""), (x.im.coeffs, "i")):
        for c, n in zip(coeffs, RADICANDS):
            if c == 0:
                continue
            mag = abs(c)
            body = str(mag) if (mag != 1 or (n == 1 and not unit)) else ""
            body += unit + (f"√{n}" if n != 1 else "")
            parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out
