from fractions import Fraction

from hypothesis import given, settings, strategies as st

from chorbifold.numfield import sqrt
from chorbifold.poly import Poly, count_roots, isolate_roots, poly_gcd, squarefree, sturm_sequence

X = Poly([0, 1])


def from_roots(roots):
    p = Poly([1])
    for r in roots:
        p = p * (X - r)
    return p


@given(st.lists(st.builds(Fraction, st.integers(-30, 30), st.integers(1, 5)), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_root_count_matches_construction(roots):
    p = from_roots(roots)
    assert count_roots(squarefree(p)) == len(set(roots))
    iso = isolate_roots(p)
    assert len(iso) == len(set(roots))
    for r in set(roots):
        assert sum(1 for x in iso if x.lo <= r <= x.hi) == 1


def test_irrational_roots():
    p = X * X - 2
    roots = isolate_roots(p, width=Fraction(1, 10 ** 12))
    assert [round(float(r), 9) for r in roots] == [-1.414213562, 1.414213562]
    assert count_roots(p, 0, 2) == 1


def test_coefficients_in_the_field():
    p = X * X - 2 * sqrt(3) * X + 3  # (x - √3)²
    assert squarefree(p).degree == 1
    assert count_roots(squarefree(p)) == 1


def test_no_real_roots():
    assert count_roots(X ** 4 + X * X + 1) == 0
    seq = sturm_sequence(X ** 2 + 1)
    assert count_roots(X ** 2 + 1, None, None, seq) == 0


def test_division_and_gcd():
    a = from_roots([1, 2, 3])
    b = from_roots([2, 5])
    q, r = a.divmod(b)
    assert q * b + r == a and r.degree < b.degree
    g = poly_gcd(a, b)
    assert g.monic() == (X - 2)


def test_mirror_and_compose():
    p = Poly([1, 2, 3])
    assert p.mirror() == Poly([1, -2, 3])
    assert p.compose(X + 1) == Poly([6, 8, 3])
