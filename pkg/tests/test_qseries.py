import random

import pytest
from hypothesis import given, settings, strategies as st

from qvertex.algebra import AlgebraError, LaurentPolynomial, RationalFunction, TruncatedSeries, VariableTable
from qvertex.geometry import Character
from qvertex.qseries import (
    CollisionError,
    PochhammerPole,
    phi_of_character,
    pochhammer,
    pochhammer_product,
    xi_product,
    xi_series,
)

T = VariableTable(["q", "h", "a"])
q = RationalFunction(LaurentPolynomial.var(T, "q"))
h = RationalFunction(LaurentPolynomial.var(T, "h"))
a = RationalFunction(LaurentPolynomial.var(T, "a"))
one = RationalFunction.one(T)
W = T.extend("w")  # q, h, a, w


def test_pochhammer_examples():
    assert pochhammer(a, 2) == (1 - a) * (1 - a * q)
    assert pochhammer(a, 0) == one
    assert pochhammer(a, -1) == 1 / (1 - a / q)


def test_pochhammer_non_monomial_argument():
    x = a + h
    assert pochhammer(x, 2) == (1 - x) * (1 - x * q)
    assert pochhammer(x, -2) == 1 / ((1 - x / q) * (1 - x / q ** 2))


def test_pochhammer_pole():
    with pytest.raises(PochhammerPole):
        pochhammer(q, -1)
    assert pochhammer(q ** -1, 2).is_zero()


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-2, 2), st.integers(-2, 2))
def test_cocycle(d, e, i, j):
    x = a ** i * h ** j * h  # never a pure power of q
    assert pochhammer(x, d) * pochhammer(x * q ** d, e) == pochhammer(x, d + e)


def test_phi_examples():
    b, c = T.unit_exps("h"), T.unit_exps("q")
    N = Character(T, {T.unit_exps("a"): 1, b: 2, c: -3})
    assert phi_of_character(N).multiset() == {T.unit_exps("a"): 1, b: 2, c: -3}
    assert phi_of_character(Character(T, {})).multiset() == {}
    qx, hx = (1, 0, 1), (0, 2, 1)
    assert phi_of_character(Character(T, {qx: 1, hx: -1})).multiset() == {qx: 1, hx: -1}


@pytest.mark.parametrize("d", [-3, -1, 0, 2, 4])
def test_phi_ratio_is_pochhammer(d):
    qm = (1, 1, 2)
    f = phi_of_character(Character(T, {qm: 1})).ratio(lambda e: d)
    assert f.to_rational() == pochhammer(q * h * a ** 2, d)


def test_zero_order_accounting():
    # (q^-1)_2 vanishes; dividing by it would be a collision
    assert pochhammer_product(T, [((-1, 0, 0), 2, 1)]) is None
    with pytest.raises(CollisionError) as err:
        pochhammer_product(T, [((-1, 0, 0), 2, -1)])
    assert err.value.offenders
    assert pochhammer_product(T, [((-1, 0, 0), 2, 1), ((-1, 0, 0), 2, -1)]).to_rational() == one



def weight(*exps):
    return LaurentPolynomial.monomial(W, exps)


def test_xi_coefficients():
    b = h ** 2
    s = xi_series(b, weight(0, 0, 0, 1), 3, "w")
    assert s.coefficient(1) == (1 - b) / (1 - q)
    assert s.coefficient(2) == (1 - b) * (1 - b * q) / ((1 - q) * (1 - q ** 2))
    t = xi_series(q, weight(0, 0, 0, 1), 5, "w")
    assert all(t.coefficient(n) == one for n in range(6))


def test_xi_grading_by_weight():
    s = xi_series(h ** 2, weight(0, 1, 0, 2), 5, "w")
    assert set(s.coeffs) == {(0,), (2,), (4,)}
    assert s.coefficient(2) == h * (1 - h ** 2) / (1 - q)


def test_xi_nonpositive_degree():
    with pytest.raises(AlgebraError):
        xi_series(h, weight(1, 0, 0, 0), 3, "w")
    with pytest.raises(AlgebraError):
        xi_series(h, weight(0, 0, 0, -1), 3, "w")


def test_xi_product_examples():
    b = h ** 2
    empty = xi_product(b, Character(W, {}), 4, "w")
    assert empty == TruncatedSeries.one(T, ("w",), 4)
    w1, w2 = (0, 0, 1, 1), (1, 0, 0, 2)
    both = xi_product(b, Character(W, {w1: 1, w2: 1}), 4, "w")
    assert both == xi_series(b, weight(*w1), 4, "w") * xi_series(b, weight(*w2), 4, "w")
    with pytest.raises(AlgebraError):
        xi_product(b, Character(W, {w1: -1}), 4, "w")


def test_dual_kernel_first_order():
    D = VariableTable(["q", "hp", "ap"])
    C = D.without("ap")
    b = RationalFunction.parse("q*hp^-2", C)
    s = xi_product(b, Character(D, {(0, 1, 1): 1}), 1, "ap")
    expect = (1 - b) / (1 - RationalFunction.parse("q", C)) * RationalFunction.parse("hp", C)
    assert s.coefficient(1) == expect and s.coefficient(0) == RationalFunction.one(C)


def random_base(rng):
    """Monomial or binomial b in (q, h, a), never a pure power of q."""
    e = (rng.randint(-2, 2), rng.randint(1, 3), rng.randint(-2, 2))
    b = RationalFunction(LaurentPolynomial.monomial(T, e))
    if rng.random() < 0.3:
        b = b + rng.choice([-1, 1]) * a ** rng.randint(1, 2)
    return b


@pytest.mark.parametrize("seed", range(20))
def test_functional_equation(seed):
    rng = random.Random(seed)
    b = random_base(rng)
    N = 8
    w = weight(0, 0, 0, 1)
    lhs = TruncatedSeries(T, ("w",), N, {(0,): one, (1,): -one}) * xi_series(b, w, N, "w")
    shifted = xi_series(b, weight(1, 0, 0, 1), N, "w")
    rhs = TruncatedSeries(T, ("w",), N, {(0,): one, (1,): -b}) * shifted
    assert lhs == rhs


@given(st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(1, 2)), max_size=3),
       st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(1, 2)), max_size=2))
@settings(max_examples=25, deadline=None)
def test_xi_product_additive(n1, n2):
    b = h ** 2
    def char(ws):
        out = {}
        for x, y, d in ws:
            e = (0, x, y, d)
            out[e] = out.get(e, 0) + 1
        return Character(W, out)
    A, B = char(n1), char(n2)
    assert xi_product(b, A + B, 4, "w") == xi_product(b, A, 4, "w") * xi_product(b, B, 4, "w")
