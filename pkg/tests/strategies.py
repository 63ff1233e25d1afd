from hypothesis import strategies as st

from qvertex.algebra import LaurentPolynomial, RationalFunction, VariableTable
from qvertex.geometry import Partition

T3 = VariableTable(["q", "h", "a"])

small_int = st.integers(min_value=-3, max_value=3)
exps3 = st.tuples(small_int, small_int, small_int)
coeff = st.integers(min_value=-4, max_value=4).filter(bool)


@st.composite
def polys(draw, table=T3, max_terms=4):
    n = len(table)
    e = st.tuples(*[small_int] * n)
    terms = draw(st.dictionaries(e, coeff, max_size=max_terms))
    return LaurentPolynomial(table, terms)


@st.composite
def nonzero_polys(draw, table=T3, max_terms=3):
    p = draw(polys(table, max_terms))
    return p if p else LaurentPolynomial.one(table)


@st.composite
def rationals(draw, table=T3):
    return RationalFunction(draw(polys(table, 3)), draw(nonzero_polys(table, 2)))


@st.composite
def monomials(draw, table=T3):
    return LaurentPolynomial.monomial(table, draw(st.tuples(*[small_int] * len(table))))


@st.composite
def partitions(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    rest = n
    while rest:
        p = draw(st.integers(min_value=1, max_value=min(rest, parts[-1] if parts else rest)))
        parts.append(p)
        rest -= p
    return Partition(tuple(parts))
