"""The representation of G(6,3): vertices, rotation, generators, symmetries.

All matrices are exact.  Labels follow the bisector names B0..B11 and
their barred versions, where B_k = B(o, g_k o), g_k = gamma_k for k < 6,
g_{k+6} = gamma_k gamma_{k+1}^{-1}, and the barred label uses g_k^{-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chgeom import J1, HermitianVector, Isometry, apply, box, matmul, proj_equal
from .numfield import I, AlgebraicNumber, num, sqrt

HALF = Fraction(1, 2)
S = sqrt(6) * Fraction(1, 3)  # Euclidean radius of the hexagon at p = 6

# cos and sin of 2*pi*j/6
_COS = [Fraction(1), HALF, -HALF, Fraction(-1), -HALF, HALF]
_SIN = [0, 1, 1, 0, -1, -1]


def _cos(j):
    return num(_COS[j % 6])


def _sin(j):
    return sqrt(3) * Fraction(_SIN[j % 6], 2)


def origin() -> HermitianVector:
    return HermitianVector([1, 0, 0], J1)


def vertex(j: int) -> HermitianVector:
    """x_j = (1, s cos(2 j pi/6), s sin(2 j pi/6))."""
    return HermitianVector([1, S * _cos(j), S * _sin(j)], J1)


def s_value():
    """s = sqrt(2c^2 + 2c)/(1 + c) at c = cos(2 pi/6) = 1/2."""
    c = HALF
    return sqrt(2 * c * c + 2 * c) * (1 / (1 + c))


def polar_e0() -> HermitianVector:
    c = HALF
    return HermitianVector([sqrt(2 * c * c + 2 * c), 1 + c, _sin(1)], J1)


def rotation() -> Isometry:
    c, s = _cos(1), _sin(1)
    return Isometry([[1, 0, 0], [0, c, -s], [0, s, c]], name="R6")


_GAMMA0 = None


def gamma0() -> Isometry:
    global _GAMMA0
    if _GAMMA0 is None:
        q = Fraction(1, 4)
        s2, s3, s6 = sqrt(2), sqrt(3), sqrt(6)
        m = [
            [num(Fraction(5, 2)) - I * s3 * HALF, -s6 * 3 * q + I * s2 * 3 * q, -s2 * 3 * q + I * s6 * q],
            [s6 * 3 * q - I * s2 * 3 * q, num(-Fraction(5, 4)) + I * s3 * 3 * q, -s3 * 3 * q + I * 3 * q],
            [s2 * 3 * q - I * s6 * q, -s3 * 3 * q + I * 3 * q, num(q) + I * s3 * q],
        ]
        _GAMMA0 = Isometry(m, name="gamma0")
    return _GAMMA0


_GAMMA = {}


def gamma(j: int) -> Isometry:
    j %= 6
    if j not in _GAMMA:
        r = rotation()
        g = (r ** j) @ gamma0() @ (r ** j).inverse()
        g.name = f"gamma{j}"
        _GAMMA[j] = g
    return _GAMMA[j]


def tau(j: int = 0) -> Isometry:
    t0 = Isometry([[1, 0, 0], [0, 1, 0], [0, 0, -1]], antiholomorphic=True, name="tau0")
    if j % 6 == 0:
        return t0
    r = rotation() ** (j % 6)
    t = r @ t0 @ r.inverse()
    t.name = f"tau{j % 6}"
    return t


def sigma(j: int = 0) -> Isometry:
    c, s = _cos(1), _sin(1)
    s0 = Isometry([[1, 0, 0], [0, c, s], [0, s, -c]], antiholomorphic=True, name="sigma0")
    if j % 6 == 0:
        return s0
    r = rotation() ** (j % 6)
    t = r @ s0 @ r.inverse()
    t.name = f"sigma{j % 6}"
    return t


@dataclass(frozen=True)
class BisectorLabel:
    index: int
    barred: bool = False

    def __str__(self):
        return f"B{self.index}" + ("b" if self.barred else "")

    def pretty(self):
        return f"B{self.index}" + ("̄" if self.barred else "")

    @property
    def inverse(self):
        return BisectorLabel(self.index, not self.barred)

    @classmethod
    def parse(cls, text: str) -> "BisectorLabel":
        t = text.strip().replace("̄", "b").replace("bar", "b")
        if t.startswith("B"):
            t = t[1:]
        barred = t.endswith("b")
        if barred:
            t = t[:-1]
        k = int(t)
        if not 0 <= k < 12:
            raise ValueError(f"bisector index out of range: {text}")
        return cls(k, barred)


ALL_LABELS = tuple(BisectorLabel(k, b) for k in range(12) for b in (False, True))


def element_name(label: BisectorLabel) -> str:
    k = label.index
    if k < 6:
        base = f"γ{k}"
        return base + "⁻¹" if label.barred else base
    i = k - 6
    if label.barred:
        return f"γ{(i + 1) % 6}γ{i}⁻¹"
    return f"γ{i}γ{(i + 1) % 6}⁻¹"


@dataclass
class GeneratingSet:
    elements: list  # (BisectorLabel, Isometry) pairs

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def get(self, label) -> Isometry:
        if isinstance(label, str):
            label = BisectorLabel.parse(label)
        for lab, g in self.elements:
            if lab == label:
                return g
        raise KeyError(label)

    def labels(self):
        return [lab for lab, _ in self.elements]

    def closed_under_inverses(self) -> bool:
        for lab, g in self.elements:
            inv = self.get(lab.inverse)
            if not (g @ inv).is_projective_identity():
                return False
        return True


_GENSET = None


def generating_set() -> GeneratingSet:
    global _GENSET
    if _GENSET is None:
        els = []
        for k in range(12):
            if k < 6:
                g = gamma(k)
            else:
                i = k - 6
                g = gamma(i) @ gamma(i + 1).inverse()
            lab = BisectorLabel(k)
            g.name = element_name(lab)
            gi = g.inverse()
            gi.name = element_name(lab.inverse)
            els.append((lab, g))
            els.append((lab.inverse, gi))
        _GENSET = GeneratingSet(els)
    return _GENSET


def orbit_point(label) -> HermitianVector:
    return apply(generating_set().get(label), origin())


# --- words -------------------------------------------------------------------

def word_matrix(word) -> Isometry:
    """Product of generators gamma_j^(+-1) given as (j, e) pairs, left to right."""
    out = gamma(0) ** 0
    for j, e in word:
        g = gamma(j)
        out = out @ (g if e > 0 else g.inverse())
    return out


def verify_word(word) -> bool:
    return word_matrix(word).is_projective_identity()


def parse_gamma_word(text: str):
    """Parse words like 'g0 g1 g0^-1 g1^-1' or 'g0^3' into (j, e) pairs."""
    out = []
    for tok in text.replace("*", " ").split():
        base, _, exp = tok.partition("^")
        if not base.startswith("g"):
            raise ValueError(f"bad token {tok!r}")
        j = int(base[1:])
        e = int(exp) if exp else 1
        out.extend([(j, 1 if e > 0 else -1)] * abs(e))
    return out


# --- relation reports -------------------------------------------------------

@dataclass
class RelationCheck:
    name: str
    holds: bool
    detail: str = ""


def conjugate_by(s: Isometry, g: Isometry) -> Isometry:
    return s @ g @ s


def relation_checks():
    """All relations of the presentation plus the symmetry identities."""
    out = []
    R = rotation()
    for j in range(6):
        c = (gamma(j) ** 3).scalar()
        out.append(RelationCheck(f"γ{j}³ = Id", c is not None, f"scalar {c}" if c is not None else ""))
    for j in range(6):
        w = gamma(j) @ gamma(j + 1) @ gamma(j).inverse() @ gamma(j + 1).inverse()
        out.append(RelationCheck(f"[γ{j}, γ{(j + 1) % 6}] = Id", w.is_projective_identity()))
    for j in range(6):
        w = R @ gamma(j) @ R.inverse()
        out.append(RelationCheck(f"R6 γ{j} R6⁻¹ = γ{(j + 1) % 6}", w.proj_equal(gamma(j + 1))))
    out.append(RelationCheck("R6⁶ = Id", (R ** 6).is_projective_identity()))
    t0, s0 = tau(0), sigma(0)
    out.append(RelationCheck("τ0² = Id", (t0 @ t0).is_projective_identity()))
    out.append(RelationCheck("σ0² = Id", (s0 @ s0).is_projective_identity()))
    for k in range(6):
        out.append(RelationCheck(f"τ0 γ{k} τ0 = γ{(5 - k) % 6}", conjugate_by(t0, gamma(k)).proj_equal(gamma(5 - k))))
    out.append(RelationCheck("σ0 γ0 σ0 = γ0", conjugate_by(s0, gamma(0)).proj_equal(gamma(0))))
    for k in (1, 2, 3):
        out.append(RelationCheck(f"σ0 γ{k} σ0 = γ{6 - k}", conjugate_by(s0, gamma(k)).proj_equal(gamma(6 - k))))
    return out


def symmetry_inverse_checks():
    """The conjugation identities as they hold for the maps themselves.

    Conjugating a holomorphic map by an antiholomorphic involution reverses
    the rotation angle of a complex reflection, so the images are inverses.
    """
    out = []
    t0, s0 = tau(0), sigma(0)
    for k in range(6):
        h = conjugate_by(t0, gamma(k))
        out.append(RelationCheck(f"τ0 γ{k} τ0 = γ{(5 - k) % 6}⁻¹", h.proj_equal(gamma(5 - k).inverse())))
    for k in range(4):
        h = conjugate_by(s0, gamma(k))
        out.append(RelationCheck(f"σ0 γ{k} σ0 = γ{(6 - k) % 6}⁻¹", h.proj_equal(gamma(6 - k).inverse())))
    return out


def plain_matrix_conjugation_checks():
    """The printed identities hold for the plain matrix product T G T."""
    out = []
    T, Sm = tau(0).matrix, sigma(0).matrix
    for k in range(6):
        h = Isometry(matmul(T, matmul(gamma(k).matrix, T)), check=False)
        out.append(RelationCheck(f"T·γ{k}·T = γ{(5 - k) % 6} (matrices)", h.proj_equal(gamma(5 - k))))
    for k in range(4):
        h = Isometry(matmul(Sm, matmul(gamma(k).matrix, Sm)), check=False)
        out.append(RelationCheck(f"S·γ{k}·S = γ{(6 - k) % 6} (matrices)", h.proj_equal(gamma(6 - k))))
    return out


def symmetry_label_map(sym: Isometry):
    """Where the symmetry sends each bisector label: B(o, g o) -> B(o, s g s o)."""
    gs = generating_set()
    out = {}
    for lab, g in gs:
        h = conjugate_by(sym, g)
        match = [l2 for l2, g2 in gs if h.proj_equal(g2)]
        out[lab] = match[0] if match else None
    return out


def expected_tau_map():
    m = {}
    for k in range(6):
        m[BisectorLabel(k)] = BisectorLabel(5 - k)
        m[BisectorLabel(k, True)] = BisectorLabel(5 - k, True)
    for k in range(6, 11):
        m[BisectorLabel(k)] = BisectorLabel(16 - k, True)
        m[BisectorLabel(16 - k, True)] = BisectorLabel(k)
    m[BisectorLabel(11)] = BisectorLabel(11, True)
    m[BisectorLabel(11, True)] = BisectorLabel(11)
    return m


def expected_sigma_map():
    m = {BisectorLabel(0): BisectorLabel(0), BisectorLabel(0, True): BisectorLabel(0, True)}
    for k in (1, 2, 3, 4, 5):
        m[BisectorLabel(k)] = BisectorLabel(6 - k)
        m[BisectorLabel(k, True)] = BisectorLabel(6 - k, True)
    for k in range(6, 12):
        m[BisectorLabel(k)] = BisectorLabel(17 - k, True)
        m[BisectorLabel(17 - k, True)] = BisectorLabel(k)
    return m


def derived_tau_map():
    """Label action of tau0 as a map: B_k -> B̄_{5-k}, B_k -> B_{16-k}, B11 fixed."""
    return {k: (v.inverse if k.index != 11 else k) for k, v in expected_tau_map().items()}


def derived_sigma_map():
    return {k: v.inverse for k, v in expected_sigma_map().items()}


def symmetry_checks(derived=False):
    out = []
    if derived:
        table = (("τ0", tau(0), derived_tau_map()), ("σ0", sigma(0), derived_sigma_map()))
    else:
        table = (("τ0", tau(0), expected_tau_map()), ("σ0", sigma(0), expected_sigma_map()))
    for name, sym, expected in table:
        got = symmetry_label_map(sym)
        bad = [str(l) for l in expected if got[l] != expected[l]]
        out.append(RelationCheck(f"{name} label action", not bad, "mismatch: " + ", ".join(bad) if bad else ""))
    return out


def vertex_checks():
    out = []
    R = rotation()
    for j in range(6):
        out.append(RelationCheck(f"R6 x{j} = x{(j + 1) % 6}", proj_equal(apply(R, vertex(j)), vertex(j + 1))))
    t0 = tau(0)
    for a, b in ((0, 0), (3, 3), (1, 5), (2, 4)):
        out.append(RelationCheck(f"τ0 x{a} = x{b}", proj_equal(apply(t0, vertex(a)), vertex(b))))
    s0 = sigma(0)
    for a, b in ((0, 1), (2, 5), (3, 4)):
        out.append(RelationCheck(f"σ0 x{a} = x{b}", proj_equal(apply(s0, vertex(a)), vertex(b))))
    e0 = box(vertex(0), vertex(1))
    out.append(RelationCheck("x0 ⊠ x1 ∝ e0", proj_equal(e0, polar_e0())))
    out.append(RelationCheck("γ0 fixes x0 and x1", proj_equal(apply(gamma0(), vertex(0)), vertex(0))
                             and proj_equal(apply(gamma0(), vertex(1)), vertex(1))))
    return out
