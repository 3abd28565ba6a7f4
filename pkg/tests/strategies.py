"""Hypothesis strategies for exact scalars, points and lines."""

from fractions import Fraction

from hypothesis import strategies as st

from hagge.core import ProjLine, ProjPoint
from hagge.field import FieldSpec, Mod

PRIMES = (3, 5, 7, 11, 13, 101, 1009)


def rationals(bound=10**6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def residues(p):
    return st.integers(0, p - 1).map(lambda v: Mod(v, p))


def scalars(f: FieldSpec, bound=50):
    return rationals(bound) if f.is_rational else residues(f.p)


def vectors(f: FieldSpec, bound=50):
    return st.tuples(scalars(f, bound), scalars(f, bound), scalars(f, bound)).filter(any)


def points(f: FieldSpec, bound=50):
    return vectors(f, bound).map(ProjPoint)


def lines(f: FieldSpec, bound=50):
    return vectors(f, bound).map(ProjLine)


BACKENDS = [FieldSpec(), FieldSpec(13), FieldSpec(101)]
