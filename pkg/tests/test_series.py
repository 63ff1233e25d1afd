import pytest

from qvertex.algebra import AlgebraError, LaurentPolynomial, RationalFunction, TruncatedSeries, VariableTable

C = VariableTable(["q"])
q = RationalFunction(LaurentPolynomial.var(C, "q"))
one = RationalFunction.one(C)


def geom(order, ratio=one):
    """sum (ratio z)^n"""
    return TruncatedSeries(C, ("z",), order, {(n,): ratio ** n for n in range(order + 1)})


def test_truncation_on_construction():
    s = TruncatedSeries(C, ("z",), 2, {(3,): one, (1,): q})
    assert set(s.coeffs) == {(1,)}


def test_product_truncates():
    s = geom(3) * TruncatedSeries(C, ("z",), 3, {(0,): one, (1,): -one})
    assert s == TruncatedSeries.one(C, ("z",), 3)


def test_two_variables():
    x = TruncatedSeries(C, ("z1", "z2"), 2, {(0, 0): one, (1, 0): one})
    y = TruncatedSeries(C, ("z1", "z2"), 2, {(0, 0): one, (0, 1): q})
    p = x * y
    assert p.coefficient((1, 1)) == q
    assert list(p.degrees())[:3] == [(0, 0), (0, 1), (1, 0)]
    assert (x * x * x).coefficient((2, 0)) == 3 * one
    assert (2, 1) not in (x * x * y).coeffs


def test_series_variable_not_in_coefficients():
    with pytest.raises(AlgebraError):
        TruncatedSeries(VariableTable(["q", "z"]), ("z",), 2)


def test_mismatches_and_text():
    a, b = geom(3), geom(3, q)
    assert a.mismatches(b) == [(1,), (2,), (3,)]
    assert a.mismatches(b, order=0) == []
    assert geom(1).text() == "1 + z + O(z^2)"
    assert TruncatedSeries.one(C, (), 0).text() == "1"


def test_add_sub():
    assert geom(2) - geom(2) == TruncatedSeries(C, ("z",), 2)
    assert (geom(2) + geom(2)).coefficient(2) == 2 * one
