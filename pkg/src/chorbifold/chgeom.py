"""Hermitian linear algebra on C^{2,1}.

The form is linear in the first slot: <Z, W> = W* J Z.  Vectors and
matrices hold exact AlgebraicNumber entries; isometries are stored
unnormalized and every predicate is projective.
"""
from __future__ import annotations

import enum
from fractions import Fraction

from .numfield import I, ONE, ZERO, AlgebraicNumber, RealAlgebraic, num, parse, real, sqrt


class FormMismatch(ValueError):
    pass


class CollinearInput(ValueError):
    pass


class NotInteriorPoint(ValueError):
    pass


class NotUnitary(ValueError):
    pass


# --- small matrix helpers ---------------------------------------------------

def mat(rows):
    return tuple(tuple(num(x) for x in row) for row in rows)


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(m)), AlgebraicNumber()) for j in range(p))
        for i in range(n)
    )


def matvec(a, v):
    return tuple(sum((a[i][k] * v[k] for k in range(len(v))), AlgebraicNumber()) for i in range(len(a)))


def mconj(a):
    return tuple(tuple(x.conjugate() for x in row) for row in a)


def adjoint(a):
    return tuple(tuple(a[j][i].conjugate() for j in range(len(a))) for i in range(len(a[0])))


def det3(a):
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def identity3():
    return mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def scalar_of(a):
    """The scalar c when a == c*Id exactly, else None."""
    n = len(a)
    for i in range(n):
        for j in range(n):
            if i != j and not a[i][j].is_zero():
                return None
    c = a[0][0]
    if any(a[i][i] != c for i in range(1, n)):
        return None
    return c


def proportional_matrices(a, b):
    """True iff a = c*b for some nonzero scalar c (exact)."""
    pivot = None
    for i in range(3):
        for j in range(3):
            if not b[i][j].is_zero():
                pivot = (i, j)
                break
        if pivot:
            break
    if pivot is None:
        return False
    i0, j0 = pivot
    if a[i0][j0].is_zero():
        return False
    # a[i][j]*b[i0][j0] == b[i][j]*a[i0][j0] for all entries
    return all(
        a[i][j] * b[i0][j0] == b[i][j] * a[i0][j0] for i in range(3) for j in range(3)
    )


# --- forms and vectors ------------------------------------------------------

class HermitianForm:
    def __init__(self, matrix, tag):
        self.matrix = mat(matrix)
        self.tag = tag
        if adjoint(self.matrix) != self.matrix:
            raise ValueError("form matrix is not Hermitian")

    def __call__(self, z, w):
        """<z, w> = w* J z."""
        jz = matvec(self.matrix, z)
        return sum((jz[k] * w[k].conjugate() for k in range(3)), AlgebraicNumber())

    def __repr__(self):
        return f"HermitianForm({self.tag})"


J1 = HermitianForm([[-1, 0, 0], [0, 1, 0], [0, 0, 1]], "Ball")
J2 = HermitianForm([[0, 0, 1], [0, 1, 0], [1, 0, 0]], "Siegel")


class PointClass(enum.Enum):
    Negative = -1
    Null = 0
    Positive = 1


class HermitianVector:
    __slots__ = ("coords", "form")

    def __init__(self, coords, form=J1):
        self.coords = tuple(num(x) for x in coords)
        if len(self.coords) != 3:
            raise ValueError("need 3 coordinates")
        self.form = form

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def is_zero(self):
        return all(x.is_zero() for x in self.coords)

    def _check(self, other):
        if self.form is not other.form:
            raise FormMismatch(f"{self.form.tag} vs {other.form.tag}")

    def __add__(self, other):
        self._check(other)
        return HermitianVector([a + b for a, b in zip(self, other)], self.form)

    def __sub__(self, other):
        self._check(other)
        return HermitianVector([a - b for a, b in zip(self, other)], self.form)

    def __neg__(self):
        return HermitianVector([-a for a in self], self.form)

    def scale(self, c):
        c = num(c) if not isinstance(c, AlgebraicNumber) else c
        return HermitianVector([c * a for a in self], self.form)

    def __rmul__(self, c):
        return self.scale(c)

    def conjugate(self):
        return HermitianVector([a.conjugate() for a in self], self.form)

    def norm(self):
        """<v, v> as a RealAlgebraic."""
        return herm(self, self).re

    def __eq__(self, other):
        return isinstance(other, HermitianVector) and self.form is other.form and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def approx(self):
        return tuple(complex(x) for x in self.coords)

    def __repr__(self):
        return "HermitianVector(" + ", ".join(str(x) for x in self.coords) + ")"


def vec(*coords, form=J1):
    return HermitianVector(coords, form)


def herm(u: HermitianVector, v: HermitianVector) -> AlgebraicNumber:
    """<u, v> = v* J u; conjugate-symmetric."""
    u._check(v)
    return u.form(u.coords, v.coords)


def classify(v: HermitianVector) -> PointClass:
    if v.is_zero():
        raise ValueError("zero vector")
    return PointClass(v.norm().sign())


def box(u: HermitianVector, v: HermitianVector) -> HermitianVector:
    """Hermitian cross product: Euclidean cross product of u*J and v*J."""
    u._check(v)
    J = u.form.matrix
    a = [sum((u[i].conjugate() * J[i][k] for i in range(3)), AlgebraicNumber()) for k in range(3)]
    b = [sum((v[i].conjugate() * J[i][k] for i in range(3)), AlgebraicNumber()) for k in range(3)]
    w = HermitianVector(
        [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]], u.form
    )
    if w.is_zero():
        raise CollinearInput("box of collinear vectors")
    return w


def proj_equal(u: HermitianVector, v: HermitianVector) -> bool:
    """u and v span the same complex line: all 2x2 minors vanish."""
    if u.is_zero() or v.is_zero():
        return False
    return all((u[i] * v[j] - u[j] * v[i]).is_zero() for i in range(3) for j in range(i + 1, 3))


def dist_cosh_sq(u: HermitianVector, v: HermitianVector) -> RealAlgebraic:
    """cosh^2(d(u,v)/2) = |<u,v>|^2 / (<u,u><v,v>)."""
    nu, nv = u.norm(), v.norm()
    if nu.sign() >= 0 or nv.sign() >= 0:
        raise NotInteriorPoint("both points must be negative")
    return herm(u, v).abs2() / (nu * nv)


# --- Cayley transform -------------------------------------------------------

_r = sqrt(Fraction(1, 2))
CAYLEY = mat([[_r, 0, _r], [0, 1, 0], [-_r, 0, _r]])
CAYLEY_INV = mat([[_r, 0, -_r], [0, 1, 0], [_r, 0, _r]])


def cayley(v: HermitianVector, inverse=False) -> HermitianVector:
    """Ball <-> Siegel coordinates; <Cv, Cw>_J2 = <v, w>_J1."""
    if not inverse:
        if v.form is not J1:
            raise FormMismatch("cayley expects a Ball vector")
        return HermitianVector(matvec(CAYLEY, v.coords), J2)
    if v.form is not J2:
        raise FormMismatch("inverse cayley expects a Siegel vector")
    return HermitianVector(matvec(CAYLEY_INV, v.coords), J1)


# --- isometries -------------------------------------------------------------

class Isometry:
    """v -> M v, or v -> M conj(v) when antiholomorphic."""

    __slots__ = ("matrix", "antiholomorphic", "form", "name")

    def __init__(self, matrix, antiholomorphic=False, form=J1, name=None, check=True):
        self.matrix = mat(matrix)
        self.antiholomorphic = bool(antiholomorphic)
        self.form = form
        self.name = name
        if check:
            self.unitarity_scalar()

    def unitarity_scalar(self) -> RealAlgebraic:
        """lambda with M* J M = lambda J; raises NotUnitary otherwise."""
        J = self.form.matrix
        g = matmul(adjoint(self.matrix), matmul(J, self.matrix))
        lam = None
        for i in range(3):
            for j in range(3):
                if not J[i][j].is_zero():
                    c = g[i][j] / J[i][j]
                    if lam is None:
                        lam = c
                    elif c != lam:
                        raise NotUnitary("M*JM is not a multiple of J")
                elif not g[i][j].is_zero():
                    raise NotUnitary("M*JM is not a multiple of J")
        if not lam.im.is_zero() or lam.re.sign() <= 0:
            raise NotUnitary("unitarity scalar is not positive real")
        return lam.re

    def __call__(self, v: HermitianVector) -> HermitianVector:
        return apply(self, v)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if self.form is not other.form:
            raise FormMismatch("composition across forms")
        m2 = mconj(other.matrix) if self.antiholomorphic else other.matrix
        return Isometry(
            matmul(self.matrix, m2),
            self.antiholomorphic != other.antiholomorphic,
            self.form,
            check=False,
        )

    def inverse(self) -> "Isometry":
        lam = self.unitarity_scalar()
        J = self.form.matrix
        inv = matmul(J, matmul(adjoint(self.matrix), J))
        inv = tuple(tuple(x * (1 / lam) for x in row) for row in inv)
        if self.antiholomorphic:
            inv = mconj(inv)
        return Isometry(inv, self.antiholomorphic, self.form, check=False)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Isometry(identity3(), False, self.form, check=False)
        for _ in range(n):
            out = out @ self
        return out

    def scalar(self):
        """The scalar c if this is c*Id (holomorphic), else None."""
        if self.antiholomorphic:
            return None
        return scalar_of(self.matrix)

    def is_projective_identity(self) -> bool:
        return self.scalar() is not None

    def proj_equal(self, other: "Isometry") -> bool:
        return self.antiholomorphic == other.antiholomorphic and proportional_matrices(
            self.matrix, other.matrix
        )

    def __repr__(self):
        kind = "anti" if self.antiholomorphic else "holo"
        return f"Isometry({self.name or kind})"


def apply(g: Isometry, v: HermitianVector) -> HermitianVector:
    if g.form is not v.form:
        raise FormMismatch("isometry and vector use different forms")
    coords = v.conjugate().coords if g.antiholomorphic else v.coords
    return HermitianVector(matvec(g.matrix, coords), v.form)


# --- text format ------------------------------------------------------------

def format_matrix(m) -> str:
    return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in m)


def parse_matrix(text: str):
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if not (line.startswith("[") and line.endswith("]")):
            raise ValueError(f"bad matrix row {line!r}")
        rows.append([parse(x) for x in line[1:-1].split(",")])
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    return tuple(tuple(r) for r in rows)


def load_isometry(text: str, antiholomorphic=False, form=J1) -> Isometry:
    """Parse a matrix and validate projective unitarity for ``form``."""
    return Isometry(parse_matrix(text), antiholomorphic, form)


def format_vector(v: HermitianVector) -> str:
    return "[" + ", ".join(str(x) for x in v.coords) + "]"


def parse_vector(text: str, form=J1) -> HermitianVector:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError("vector must be bracketed")
    return HermitianVector([parse(x) for x in text[1:-1].split(",")], form)
