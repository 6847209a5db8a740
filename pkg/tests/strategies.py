from fractions import Fraction

from hypothesis import strategies as st

from hopfinv.exactfield import FieldSpec
from hopfinv.freealg import FreePoly

FIELDS = [FieldSpec.rational(), FieldSpec.prime(2), FieldSpec.prime(7), FieldSpec.prime(101)]


def scalars(F: FieldSpec):
    if F.is_prime:
        return st.integers(0, F.p - 1)
    return st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))


def nonzero_scalars(F: FieldSpec):
    return scalars(F).filter(lambda a: a != 0)


def words(rank, min_len=0, max_len=4):
    return st.lists(st.integers(1, rank), min_size=min_len, max_size=max_len).map(tuple)


def polys(F: FieldSpec, rank, max_len=4, max_terms=5, degree=None):
    w = words(rank, degree, degree) if degree is not None else words(rank, 0, max_len)
    return st.dictionaries(w, scalars(F), max_size=max_terms).map(lambda t: FreePoly(F, rank, t))


def matrices(F: FieldSpec, r):
    return st.lists(st.lists(scalars(F), min_size=r, max_size=r), min_size=r, max_size=r)
