from fractions import Fraction

from hypothesis import strategies as st

from bundleinv.laurent import LaurentPoly


def laurent_polys(n=2, max_terms=4, zspan=3, max_udeg=3):
    mono = st.tuples(
        st.integers(-zspan, zspan),
        st.tuples(*[st.integers(0, max_udeg) for _ in range(n)]),
    )
    coeff = st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=4)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: LaurentPoly(n, d))
