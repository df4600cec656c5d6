import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chorbifold import bisectors as bs, reference
from chorbifold.bisectors import IntersectionKind
from chorbifold.chgeom import herm
from chorbifold.numfield import sqrt


@pytest.fixture(scope="module")
def dirichlet():
    return bs.dirichlet_bisectors()


def test_chart_points_lie_on_both_bisectors(dirichlet):
    b1, b2 = dirichlet["B0"], dirichlet["B1"]
    chart = bs.GiraudChart(b1, b2)
    for t1, t2 in ((0.3, 1.1), (2.0, -0.7), (-2.5, 0.2)):
        w = chart.vector(bs.circle_point(t1), bs.circle_point(t2))
        for b in (b1, b2):
            assert herm(w, b.p).abs2() == herm(w, b.q).abs2()


def test_origin_is_off_every_dirichlet_bisector(dirichlet):
    from chorbifold.reps import origin
    o = origin()
    assert not any(b.contains(o) for b in dirichlet.values())
    # o is the closer center: its side of the equation is fixed
    assert len({b.equation_value(o).sign() for b in dirichlet.values()}) == 1


def test_row_b0(dirichlet):
    t = bs.row_table("B0", dirichlet)
    assert t.row("B0") == reference.ROW_B0
    assert t.kind("B0", "B0b") is IntersectionKind.ComplexGeodesic
    assert all(t.get("B0", x).sound() for x in dirichlet if x != "B0")


def test_row_b6(dirichlet):
    t = bs.row_table("B6", dirichlet)
    assert t.row("B6") == reference.ROW_B6


def test_c_meets_every_dirichlet_bisector():
    t = bs.c_row()
    assert len(t.row("C")) == 24
    for lab in t.row("C"):
        r = t.get("C", lab)
        assert r.sound()


def test_empty_verdicts_recheck(dirichlet):
    t = bs.row_table("B0", dirichlet)
    empties = [t.get("B0", x) for x in dirichlet if x != "B0" and t.kind("B0", x) is IntersectionKind.Empty]
    assert empties
    for r in empties:
        c = r.certificate
        # grid re-check: the discriminant is positive at many sample angles
        assert all(c.discriminant(2 * math.pi * k / 97) > 0 for k in range(97))
        assert c.valid


def test_certify_empty_raises_for_a_meeting_pair(dirichlet):
    with pytest.raises(bs.NotEmpty) as info:
        bs.certify_empty(dirichlet["B0"], dirichlet["B1"])
    w = info.value.witness
    assert w.norm().sign() < 0 and dirichlet["B0"].contains(w) and dirichlet["B1"].contains(w)


def test_cospinal_pair_rejected_by_chart(dirichlet):
    with pytest.raises(bs.CospinalPair):
        bs.GiraudChart(dirichlet["B0"], dirichlet["B0b"])


@given(st.floats(0, 2 * math.pi))
def test_weierstrass_form_matches_trig_poly(theta):
    F = bs.trig_from_powers(const=3, cos=-2, sin=sqrt(3), cos2=1, sin2=-1)
    W = F.weierstrass()
    t = math.tan(theta / 2)
    if abs(t) < 1e3:
        assert abs(float(W(Fraction(t))) / (1 + t * t) ** 2 - F(theta)) < 1e-6 * (1 + abs(F(theta)))


def test_circle_points_are_exact():
    for th in (0.1, 1.0, 2.5, -2.9):
        z = bs.circle_point(th)
        assert z.abs2() == 1
        assert abs(complex(z) - complex(math.cos(th), math.sin(th))) < 1e-3


def test_published_witnesses():
    reps_ = {r.label: r for r in bs.witness_reports(reference.WITNESSES)}
    assert reference.WITNESSES["B0b"].norm() == -9
    assert all(r.negative for r in reps_.values())
    verbatim = {k for k, r in reps_.items() if r.on_pair}
    assert verbatim == {"B11", "B5", "B2", "B7b"}
    assert all(r.corrected_on_pair for r in reps_.values() if not r.on_pair)


def test_derived_p0b_is_the_corrected_point():
    from chorbifold.chgeom import apply, box, proj_equal
    from chorbifold.reps import gamma, origin
    a, b = bs.c_centers()
    o = origin()
    p = box(a - b, o - apply(gamma(0).inverse(), o))
    assert p.norm() == -9
    corrected = bs._flip_first_imaginary(reference.WITNESSES["B0b"])
    assert proj_equal(p, corrected)


def test_chart_for_c_and_b0():
    cmp_ = bs.chart_comparison(reference.CHART_C_B0)
    assert [c.equal for c in cmp_] == [True, False, True, True]
    # the printed third coordinate of v1 is half the derived one
    assert cmp_[1].printed[2] * 2 == cmp_[1].derived[2]


def test_discriminant_for_c_and_b0():
    d = bs.discriminant_comparison(reference.DISCRIMINANT_C_B0)
    assert d.derived.cos[0] == 2016 and d.derived.cos[1] == -3776
    assert not d.derived_positive
    assert d.printed_positive
    assert len(d.differences()) == 5


def test_intersection_table_csv(dirichlet):
    sub = {k: dirichlet[k] for k in ("B0", "B1", "B2")}
    t = bs.intersection_table(sub)
    lines = t.to_csv().splitlines()
    assert lines[0] == ",B0,B1,B2"
    assert len(lines) == 4 and len(t.log()) == 3
