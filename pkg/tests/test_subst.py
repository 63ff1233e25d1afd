import pytest
from hypothesis import assume, given, strategies as st

from qvertex.algebra import (
    AlgebraError,
    Cocharacter,
    MonomialMap,
    PoleError,
    RationalFunction,
    VariableTable,
    limit_at_zero,
    substitute_monomials,
)

from strategies import T3, rationals

SRC = VariableTable(["q", "h", "z"])
DST = VariableTable(["q", "hp", "ap"])
GR = VariableTable(["q", "h", "a1", "a2"])
MIRROR = MonomialMap(SRC, DST, {"h": "q*hp^-2", "z": "ap*hp^2"}, roots={"h": 2})


def rf(text, table):
    return RationalFunction.parse(text, table)


def test_hbar_to_q_over_hbar_prime():
    assert substitute_monomials(rf("h^2", SRC), MIRROR) == rf("q*hp^-2", DST)


def test_identity_map():
    f = rf("(1 - q*h^2)/(1 - q*z)", SRC)
    assert substitute_monomials(f, MonomialMap(SRC, SRC, {})) == f


def test_z_hbar_k2():
    # z -> a' hbar'^(k-1) with k = 2, hbar -> q/hbar'
    assert substitute_monomials(rf("z*h^2", SRC), MIRROR) == rf("q*ap", DST)


def test_odd_root_power_rejected():
    with pytest.raises(AlgebraError):
        substitute_monomials(rf("h", SRC), MIRROR)


def test_missing_target_variable():
    with pytest.raises(AlgebraError):
        MonomialMap(SRC, DST, {"h": "q*hp^-2"}, roots={"h": 2})


def test_vanishing_denominator():
    m = MonomialMap(VariableTable(["q", "a"]), VariableTable(["q"]), {"a": "q"})
    with pytest.raises(AlgebraError):
        substitute_monomials(rf("1/(q - a)", VariableTable(["q", "a"])), m)


@given(rationals(), rationals())
def test_substitution_is_homomorphism(f, g):
    m = MonomialMap(T3, T3, {"a": "q*a^-1", "h": "h*a^2"})
    assert substitute_monomials(f + g, m) == substitute_monomials(f, m) + substitute_monomials(g, m)
    assert substitute_monomials(f * g, m) == substitute_monomials(f, m) * substitute_monomials(g, m)


def test_cocharacter_parse_and_guard():
    s = Cocharacter.parse("a1=-1,a2=-2")
    assert dict(s.assignments)["a2"] == -2 and str(s) == "a1=-1,a2=-2"
    for bad in ("q=1", "h=1", "z=2", "a1"):
        with pytest.raises(AlgebraError):
            Cocharacter.parse(bad)


GR_SIGMA = Cocharacter.of({"a1": -1, "a2": -2})
LIM = VariableTable(["q", "h"])


def test_limit_ratio_of_slices():
    f = rf("(1 - h^2*a2*a1^-1)/(1 - q*a2*a1^-1)", GR)
    assert limit_at_zero(f, GR_SIGMA) == rf("q^-1*h^2", LIM)


def test_limit_constant_in_w():
    assert limit_at_zero(rf("1/(1 - q)", GR), GR_SIGMA) == rf("1/(1 - q)", LIM)


def test_limit_positive_valuation():
    assert limit_at_zero(rf("a1*a2^-1", GR), GR_SIGMA).is_zero()


def test_limit_pole():
    with pytest.raises(PoleError):
        limit_at_zero(rf("a2*a1^-1", GR), GR_SIGMA)


def test_limit_denominator_vanishes_on_the_cocharacter():
    with pytest.raises(AlgebraError):
        limit_at_zero(rf("1/(a1 - a2)", GR), Cocharacter.of({"a1": 1, "a2": 1}))


@st.composite
def balanced(draw):
    """Rational functions whose a-valuations match, so the limit a -> 0 is finite and nonzero."""
    f = draw(rationals())
    assume(not f.is_zero())
    ia = T3.index("a")
    vn = min(e[ia] for e in f.num.terms)
    vd = min(e[ia] for e in f.den.terms)
    return RationalFunction(f.num.shift(T3.unit_exps("a", vd - vn)), f.den)


@given(balanced(), balanced())
def test_limit_multiplicative(f, g):
    sigma = Cocharacter.of({"a": 1})
    lf, lg = limit_at_zero(f, sigma), limit_at_zero(g, sigma)
    assert not lf.is_zero() and not lg.is_zero()
    assert limit_at_zero(f * g, sigma) == lf * lg
