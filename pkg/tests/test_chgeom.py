import pytest
from hypothesis import assume, given, settings

from chorbifold.chgeom import (
    J1, J2, CollinearInput, FormMismatch, HermitianVector, Isometry, NotInteriorPoint, NotUnitary,
    PointClass, box, cayley, classify, dist_cosh_sq, format_matrix, format_vector, herm, identity3,
    load_isometry, mat, parse_vector, proj_equal,
)
from chorbifold.numfield import I, num, sqrt
from strategies import algebraic, vectors


def v(*xs, form=J1):
    return HermitianVector(xs, form)


@given(vectors(), vectors())
@settings(max_examples=80, deadline=None)
def test_box_is_orthogonal(a, b):
    try:
        w = box(a, b)
    except CollinearInput:
        assume(False)
    assert herm(w, a).is_zero()
    assert herm(w, b).is_zero()


@given(vectors(), vectors(), algebraic())
@settings(max_examples=60, deadline=None)
def test_form_is_sesquilinear(a, b, c):
    assert herm(a.scale(c), b) == c * herm(a, b)
    assert herm(a, b.scale(c)) == c.conjugate() * herm(a, b)
    assert herm(b, a) == herm(a, b).conjugate()


def test_box_of_parallel_vectors():
    a = v(1, I, 2)
    with pytest.raises(CollinearInput):
        box(a, a.scale(3 + I))


def test_classification():
    assert classify(v(1, 0, 0)) is PointClass.Negative
    assert classify(v(1, 1, 0)) is PointClass.Null
    assert classify(v(0, 1, 0)) is PointClass.Positive
    with pytest.raises(ValueError):
        classify(v(0, 0, 0))


def test_distance_formula():
    o = v(1, 0, 0)
    p = v(1, num(1) / 2, 0)
    # cosh²(d/2) = |<o,p>|² / (<o,o><p,p>) = 1 / (3/4)
    assert dist_cosh_sq(o, p) == num(4) / 3
    with pytest.raises(NotInteriorPoint):
        dist_cosh_sq(o, v(0, 1, 0))


@given(vectors(), vectors())
@settings(max_examples=40, deadline=None)
def test_cayley_is_an_isometry(a, b):
    ca, cb = cayley(a), cayley(b)
    assert ca.form is J2
    assert herm(ca, cb) == herm(a, b)
    assert cayley(ca, inverse=True) == a


def test_cayley_form_checks():
    with pytest.raises(FormMismatch):
        cayley(v(1, 0, 0, form=J2))


def test_isometries_compose():
    c, s = num(1) / 2, sqrt(3) / 2
    rot = Isometry(mat([[1, 0, 0], [0, c + I * s, 0], [0, 0, 1]]))
    assert (rot ** 6).is_projective_identity()
    assert (rot @ rot.inverse()).is_projective_identity()
    assert not (rot ** 3).is_projective_identity()


def test_antiholomorphic_composition():
    conj = Isometry(identity3(), antiholomorphic=True)
    rot = Isometry(mat([[1, 0, 0], [0, I, 0], [0, 0, 1]]))
    # conjugating a rotation by complex conjugation inverts it
    assert (conj @ rot @ conj).proj_equal(rot.inverse())
    assert (conj @ conj).is_projective_identity()


def test_non_unitary_matrix_rejected():
    with pytest.raises(NotUnitary):
        Isometry(mat([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))


def test_matrix_text_roundtrip():
    m = mat([[1, 0, 0], [0, I, 0], [0, 0, -1]])
    g = load_isometry(format_matrix(m))
    assert g.matrix == m
    w = v(1 + I, sqrt(2), 0)
    assert parse_vector(format_vector(w)) == w
    with pytest.raises(ValueError):
        parse_vector("1, 2, 3")


def test_projective_equality():
    a = v(1, I, 2)
    assert proj_equal(a, a.scale(sqrt(3) - I))
    assert not proj_equal(a, v(1, I, 3))
