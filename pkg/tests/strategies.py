"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from chorbifold.chgeom import HermitianVector
from chorbifold.numfield import AlgebraicNumber, RealAlgebraic

small_fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


def reals(max_terms=8):
    """Elements of Q(√2, √3, √5) with a few nonzero coordinates."""
    def build(cs):
        return RealAlgebraic.from_coeffs(cs)
    return st.lists(small_fractions, min_size=8, max_size=8).map(
        lambda cs: [c if k < max_terms else Fraction(0) for k, c in enumerate(cs)]).map(build)


def algebraic():
    return st.builds(AlgebraicNumber, reals(4), reals(4))


def vectors():
    return st.lists(algebraic(), min_size=3, max_size=3).map(HermitianVector)
