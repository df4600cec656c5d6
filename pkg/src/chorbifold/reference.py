"""Published values that the computations are compared against.

Everything here is transcribed as printed, typos included; the comparison
functions in the other modules decide what agrees.
"""
from __future__ import annotations

from fractions import Fraction

from .chgeom import HermitianVector, mat
from .numfield import I, num, real, sqrt
from .poly import Poly

s2, s3, s5, s6 = sqrt(2), sqrt(3), sqrt(5), sqrt(6)
_r2 = s2 * Fraction(1, 2)  # 1/sqrt(2)
_h = Fraction(1, 2)


def _v(*xs):
    return HermitianVector(xs)


# --- Giraud chart of (C, B0) and its discriminant ---------------------------

CHART_C_B0 = (
    _v((-9 * I - 3 * s3) * _h, (-9 - 3 * s3 * I) * _h * _r2, (-15 * I - 3 * s3) * _h * _r2),
    _v(3 * s3, (12 - 2 * s3 * I) * _h * _r2, 3 * s3 * _h * _r2),
    _v(0, (9 + s3 * I) * _h * _r2, (-3 * s3 + 3 * I) * _h * _r2),
    _v(0, (-9 + s3 * I) * _h * _r2, (3 * s3 + 3 * I) * _h * _r2),
)

# nu² - |mu|² = (9/16) * (sum of these), monomials in cos θ, sin θ as printed
DISCRIMINANT_C_B0 = {
    "scale": Fraction(9, 16),
    "const": 1669 + 414 * s2,
    "cos": 4420 - 3948 * s2,
    "cos_sq": -782 + 540 * s2,
    "sin": 492 * s3,
    "sin2": 1401 * s3 - 1134 * s6,
}

# --- Table 2 witnesses --------------------------------------------------------

_p0b = _v(-(3 * s3 - 9 * I) * _h, (-3 - 3 * s3 * I) * _h * _r2, (-3 * s3 - 9 * I) * _h * _r2)
_p3 = _v(-(3 * s3 + 9 * I) * _h, (3 - 3 * s3 * I) * _h * _r2, (3 * s3 - 9 * I) * _h * _r2)

WITNESSES = {
    "B0b": _p0b,
    "B11": _v((-9 * s3 + 9 * I) * _h, (-9 + 4 * s3 * I) * 2 * _h * _r2, -3 * sqrt(Fraction(3, 2))),
    "B5": _v(
        (9 - 9 * s3 + (9 * s3 - 9) * I) * _h,
        (19 * s3 - 39 + I * (33 - 15 * s3)) * _h * _r2,
        (3 - 3 * s3 + I * (3 * s3 - 9)) * _h * _r2,
    ),
    "B4": _p3,
    "B3": _p3,
    "B2": _v(
        -9 + 9 * I * _h + 9 * s3 * _h,
        (9 * s3 - 18 + I * (-3 - 2 * s3)) * _h * _r2,
        (-45 + 24 * s3 + I * (12 - 3 * s3)) * _h * _r2,
    ),
    "B7b": _v(
        (3 * s3 * I - 27 + 12 * s3) * _h,
        (4 * s3 - 9 + I * (6 - 7 * s3)) * _h * _r2,
        (-54 + 27 * s3 + 3 * I) * _h * _r2,
    ),
    "B1b": _p0b,
}

WITNESS_NORM_B0B = -9

# --- the coordinate change, as printed ---------------------------------------

PRINTED_P = mat([
    [4 * sqrt(Fraction(2, 5)), 0, -3 * sqrt(Fraction(3, 5)) * I],
    [-Fraction(3, 2) * sqrt(Fraction(3, 5)), -s3 * _h * I, -2 * sqrt(Fraction(2, 5))],
    [9 * _h / s5, I * _h, -2 * sqrt(Fraction(6, 5)) * I],
])

CENTER_BALL_COORD = sqrt(Fraction(3, 5))

# --- Table 3 ------------------------------------------------------------------

# monomials: exponent triples of (t1, t2, t3)
_M = {"1": (0, 0, 0), "t1^2": (2, 0, 0), "t2^2": (0, 2, 0), "t3^2": (0, 0, 2), "t1": (1, 0, 0),
      "t2": (0, 1, 0), "t3": (0, 0, 1), "t1t3": (1, 0, 1), "t2t3": (0, 1, 1), "t1t2": (1, 1, 0)}


def _row(*terms):
    """terms: (integer, radicand, monomial)."""
    out = {}
    for c, r, m in terms:
        out[_M[m]] = out.get(_M[m], real(0)) + c * sqrt(r)
    return out


TABLE3 = {
    "B0b": _row((7, 1, "1"), (12, 1, "t1^2"), (12, 1, "t2^2"), (6, 5, "t3"), (-5, 1, "t3^2"),
                (9, 6, "t2"), (1, 30, "t2t3"), (-5, 2, "t1"), (3, 10, "t1t3")),
    "B11": _row((113, 1, "1"), (78, 1, "t1^2"), (78, 1, "t2^2"), (60, 5, "t3"), (35, 1, "t3^2"),
                (20, 2, "t1"), (12, 10, "t1t3"), (76, 6, "t2"), (20, 30, "t2t3")),
    "B5": _row((64, 1, "1"), (54, 1, "t1^2"), (54, 1, "t2^2"), (24, 5, "t3"), (-3, 10, "t1t3"),
               (10, 1, "t3^2"), (48, 6, "t2"), (9, 30, "t2t3")),
    "B4": _row((425, 1, "1"), (420, 1, "t1^2"), (420, 1, "t2^2"), (42, 5, "t3"), (5, 1, "t3^2"),
               (5, 2, "t1"), (-3, 10, "t1t3"), (345, 6, "t2"), (17, 30, "t2t3")),
    "B3": _row((425, 1, "1"), (420, 1, "t1^2"), (420, 1, "t2^2"), (-42, 5, "t3"), (5, 1, "t3^2"),
               (5, 2, "t1"), (3, 10, "t1t3"), (345, 6, "t2"), (-17, 30, "t2t3")),
    "B2": _row((64, 1, "1"), (54, 1, "t1^2"), (54, 1, "t2^2"), (-24, 5, "t3"), (3, 10, "t1t3"),
               (10, 1, "t3^2"), (48, 6, "t2"), (-9, 30, "t2t3")),
    "B7b": _row((113, 1, "1"), (78, 1, "t1^2"), (78, 1, "t2^2"), (-60, 5, "t3"), (35, 1, "t3^2"),
                (-20, 2, "t1"), (-12, 10, "t1t3"), (76, 6, "t2"), (-20, 30, "t2t3")),
    "B1b": _row((-7, 1, "1"), (-12, 1, "t1^2"), (-12, 1, "t2^2"), (6, 5, "t3"), (5, 1, "t3^2"),
                (-9, 6, "t2"), (1, 30, "t2t3"), (5, 2, "t1"), (3, 10, "t1t3")),
}

# the eight faces of the octagon, in boundary order (arc i lies on OCTAGON_CYCLE[i-1])
OCTAGON_CYCLE = ("B0b", "B11", "B5", "B4", "B3", "B2", "B7b", "B1b")

# mirror pairs under t3 -> -t3
MIRROR_PAIRS = (("B4", "B3"), ("B5", "B2"), ("B11", "B7b"), ("B0b", "B1b"))

# --- arc formulas -------------------------------------------------------------


def _poly(*terms):
    """terms: (integer or Fraction, radicand, power)."""
    deg = max(p for _, _, p in terms)
    cs = [real(0)] * (deg + 1)
    for c, r, p in terms:
        cs[p] = cs[p] + c * sqrt(r)
    return Poly(cs)


class PrintedArc:
    def __init__(self, index, a, b, den, signs, intervals, label, note=""):
        self.index = index
        self.a, self.b, self.den = a, b, den
        self.signs = signs          # one sign per sub-segment
        self.intervals = intervals  # matching t3-intervals (decimal strings)
        self.label = label
        self.note = note


PHI = [
    PrintedArc(
        1,
        _poly((-171, 6, 0), (-73, 30, 1), (123, 6, 2), (17, 30, 3)),
        _poly((8750, 1, 0), (-19500, 5, 1), (72250, 1, 2), (-11400, 5, 3), (-62750, 1, 4),
              (38580, 5, 5), (-36810, 1, 6)),
        _poly((67 * 8, 1, 0), (6 * 8, 5, 1), (15 * 8, 1, 2)),
        (1,), (("0", "0.321084"),), "B0b",
    ),
    PrintedArc(
        2,
        _poly((-955, 2, 0), (873, 10, 1), (-685, 2, 2), (-129, 10, 3)),
        _poly((-2220150, 1, 0), (9226020, 2, 1), (-73068690, 1, 2), (60093240, 5, 3),
              (-130836474, 1, 4), (27959460, 5, 5), (-11466750, 1, 6)),
        _poly((271 * 32, 1, 0), (-150 * 32, 5, 1), (105 * 32, 1, 2)),
        (-1, 1), (("0.242665", "0.270392"), ("0.242665", "0.321084")), "B11",
    ),
    PrintedArc(
        3,
        _poly((-944, 6, 0), (369, 30, 1), (172, 6, 2), (-66, 30, 3)),
        _poly((-250, 1, 2), (1200, 5, 3), (-1500, 5, 4), (7680, 5, 5), (-11140, 1, 6)),
        _poly((192 * 12, 1, 0), (-72 * 12, 5, 1), (35 * 12, 1, 2)),
        (-1,), (("0.171638", "0.270392"),), "B5",
    ),
    PrintedArc(
        4,
        _poly((-58305, 6, 0), (5771, 30, 1), (27921, 6, 2), (-1411, 30, 3)),
        _poly((350, 1, 0), (1740, 5, 1), (-17270, 1, 2), (42312, 5, 3), (17074, 1, 4),
              (-306708, 5, 5), (-651546, 1, 6)),
        _poly((17855 * 8, 1, 0), (-1758 * 8, 5, 1), (219 * 8, 1, 2)),
        (-1,), (("0", "0.171638"),), "B4",
    ),
    PrintedArc(
        5,
        _poly((-58305, 6, 0), (-5771, 30, 1), (27921, 6, 2), (1411, 30, 3)),
        _poly((350, 1, 0), (-1740, 5, 1), (-17270, 1, 2), (-42312, 5, 3), (17074, 1, 4),
              (306708, 5, 5), (-651546, 1, 6)),
        _poly((17855 * 8, 1, 0), (-1758 * 8, 5, 1), (219 * 8, 1, 2)),
        (1,), (("-0.171638", "0"),), "B3",
    ),
    PrintedArc(
        6,
        _poly((-944, 6, 0), (-369, 30, 1), (172, 6, 2), (66, 30, 3)),
        _poly((-250, 1, 2), (-1200, 5, 3), (-9500, 1, 4), (-7680, 5, 5), (-11140, 1, 6)),
        _poly((192 * 12, 1, 0), (72 * 12, 5, 1), (35 * 12, 1, 2)),
        (1,), (("-0.270392", "-0.171638"),), "B2",
    ),
    PrintedArc(
        7,
        # the printed a7 has two t^3 terms; read literally they add up
        _poly((-3629, 6, 0), (-2095, 30, 1), (-683, 6, 3), (215, 30, 3)),
        _poly((-51250, 1, 0), (-247500, 5, 1), (-2387750, 1, 2), (-2452200, 5, 3),
              (-7099550, 1, 4), (-2180940, 5, 5), (-1376010, 1, 6)),
        _poly((271 * 32, 1, 0), (150 * 32, 5, 1), (105 * 32, 1, 2)),
        (1, -1), (("-0.321084", "-0.242665"), ("-0.270392", "-0.242665")), "B7b",
        note="a7 printed with t^3 twice",
    ),
    PrintedArc(
        8,
        _poly((-171, 6, 0), (73, 10, 1), (123, 6, 2), (-17, 30, 3)),
        _poly((8750, 1, 0), (19500, 5, 1), (72250, 1, 2), (11400, 5, 3), (-62750, 1, 4),
              (-38580, 5, 5), (-36810, 1, 6)),
        _poly((67 * 8, 1, 0), (-6 * 8, 5, 1), (15 * 8, 1, 2)),
        (-1,), (("-0.321084", "0"),), "B1b",
    ),
]

# the alternative reading of a7 with the first t^3 as t^2
A7_ALTERNATIVE = _poly((-3629, 6, 0), (-2095, 30, 1), (-683, 6, 2), (215, 30, 3))

# --- octagon and critical-point numerics -------------------------------------

VERTEX_B0B_B11 = ("-0.162508", "-0.933004", "0.321084")
REJECTED_B0B_B11 = ("0.0546295", "-0.856302", "0.513578")
ENDPOINTS = ("0.171638", "0.242665", "0.270392", "0.321084")
CRITICAL_B0B = (("-0.173625", "0.942177", "0.286631"), ("0.308076", "-0.341632", "-0.887906"))

# --- intersection lemma rows --------------------------------------------------

ROW_B0 = {"B0b", "B1", "B1b", "B5", "B5b", "B6", "B6b", "B11", "B11b"}
ROW_B6 = {"B0", "B0b", "B1", "B1b", "B6b", "B7b", "B11b"}
ROW_C = set(OCTAGON_CYCLE)
