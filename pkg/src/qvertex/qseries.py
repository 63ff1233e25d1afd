"""q-Pochhammer symbols and q-binomial series.

``xi(b, w) = phi(b*w)/phi(w)`` is only ever handled through its expansion
``sum_n (b)_n/(q)_n w^n``; the infinite product ``phi`` itself is never
expanded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from .algebra import AlgebraError, Factored, LaurentPolynomial, RationalFunction, TruncatedSeries, VariableTable
from .algebra.laurent import Exps
from .geometry.character import Character


class PochhammerPole(AlgebraError):
    """A factor ``1 - x q^k`` in a Pochhammer denominator vanishes identically."""


def _q_exps(table: VariableTable) -> Exps:
    if "q" not in table:
        raise AlgebraError("table has no variable 'q'")
    return table.unit_exps("q")


def pochhammer_binomials(x: Exps, d: int, q: Exps) -> List[Tuple[Exps, int]]:
    """``(x)_d`` as ``[(exps of x*q^s, +-1), ...]``, i.e. a product of ``(1 - x q^s)^(+-1)``."""
    out = []
    if d >= 0:
        for s in range(d):
            out.append((tuple(a + s * b for a, b in zip(x, q)), 1))
    else:
        for s in range(d, 0):
            out.append((tuple(a + s * b for a, b in zip(x, q)), -1))
    return out


def _monomial_exps(x) -> Optional[Exps]:
    """Exponents of ``x`` if it is a coefficient-1 monomial, else None."""
    if isinstance(x, RationalFunction):
        if x.den_factors is None or x.den_factors.factors or len(x.num.terms) != 1:
            return None
        (e, c), = x.num.terms.items()
        if c != 1:
            return None
        return tuple(a - b for a, b in zip(e, x.den_factors.mono))
    if isinstance(x, LaurentPolynomial) and len(x.terms) == 1:
        (e, c), = x.terms.items()
        return e if c == 1 else None
    return None


def pochhammer_factored(table: VariableTable, x: Exps, d: int) -> Optional[Factored]:
    """``(x)_d`` for a monomial ``x``; None if it vanishes, PochhammerPole if it is infinite."""
    q = _q_exps(table)
    pairs = pochhammer_binomials(x, d, q)
    good = []
    for e, p in pairs:
        if not any(e):
            if p > 0:
                return None
            raise PochhammerPole(f"(x)_{d}: a denominator factor vanishes identically")
        good.append((e, p))
    return Factored.from_binomials(table, good)


def pochhammer(x: Union[RationalFunction, LaurentPolynomial], d: int) -> RationalFunction:
    """``(x)_d``: ``(1-x)...(1-x q^(d-1))`` for ``d >= 0``, ``1/((1-x q^d)...(1-x q^-1))`` for ``d < 0``."""
    if isinstance(x, LaurentPolynomial):
        x = RationalFunction(x)
    table = x.table
    mono = _monomial_exps(x)
    if mono is not None:
        try:
            f = pochhammer_factored(table, mono, d)
        except PochhammerPole:
            raise PochhammerPole(f"({x})_{d}: a denominator factor vanishes identically") from None
        return RationalFunction.zero(table) if f is None else f.to_rational()
    qpow = lambda s: RationalFunction(LaurentPolynomial.var(table, "q", s))
    out = RationalFunction.one(table)
    if d >= 0:
        for s in range(d):
            out = out * (1 - x * qpow(s))
        return out
    for s in range(d, 0):
        fac = 1 - x * qpow(s)
        if fac.is_zero():
            raise PochhammerPole(f"({x})_{d}: factor 1 - x*q^{s} vanishes identically")
        out = out / fac
    return out


@dataclass(frozen=True)
class PhiProduct:
    """Formal ``Phi(N) = prod phi(w)^mult`` as a multiset of weights; never evaluated."""

    table: VariableTable
    items: Tuple[Tuple[Exps, int], ...]

    def ratio(self, shift: Callable[[Exps], int]) -> Optional[Factored]:
        """``Phi(N) / Phi(N with each weight w -> w q^shift(w))`` = ``prod (w)_k^mult``.

        Returns None when the ratio vanishes identically.
        """
        return pochhammer_product(self.table, [(e, shift(e), m) for e, m in self.items])

    def multiset(self) -> Dict[Exps, int]:
        return dict(self.items)


def phi_of_character(N: Character) -> PhiProduct:
    return PhiProduct(N.table, tuple(sorted(N.weights.items())))


class CollisionError(AlgebraError):
    """A vanishing Pochhammer factor survives in a denominator."""

    def __init__(self, message: str, offenders=()):
        super().__init__(message)
        self.offenders = list(offenders)


def pochhammer_product(table: VariableTable, items: Iterable[Tuple[Exps, int, int]]) -> Optional[Factored]:
    """``prod (x)_k^power`` over ``(x, k, power)`` with identically-zero factors counted.

    Factors ``1 - 1`` contribute to a zero order; a positive net order means
    the product is 0 (None is returned), a negative one is a collision.
    """
    q = _q_exps(table)
    pairs: List[Tuple[Exps, int]] = []
    zero_order = 0
    offenders = []
    for x, k, power in items:
        if not power or not k:
            continue
        for e, p in pochhammer_binomials(x, k, q):
            if not any(e):
                zero_order += p * power
                offenders.append((x, k, power))
            else:
                pairs.append((e, p * power))
    if zero_order > 0:
        return None
    if zero_order < 0:
        raise CollisionError("vanishing Pochhammer factor in a denominator", offenders)
    return Factored.from_binomials(table, pairs)


def _split_weight(w: LaurentPolynomial, series_var: str) -> Tuple[int, Exps, VariableTable]:
    if len(w.terms) != 1:
        raise AlgebraError(f"weight {w} is not a single monomial")
    (e, c), = w.terms.items()
    if c != 1:
        raise AlgebraError(f"weight {w} must have coefficient 1")
    i = w.table.index(series_var)
    coeff_table = w.table.without(series_var)
    rest = e[:i] + e[i + 1 :]
    return e[i], rest, coeff_table


def _coerce_b(b, coeff_table: VariableTable) -> RationalFunction:
    if isinstance(b, LaurentPolynomial):
        b = RationalFunction(b)
    if b.table != coeff_table:
        b = b.retable(coeff_table)
    return b


def xi_coefficient(b: RationalFunction, n: int) -> RationalFunction:
    """``(b)_n / (q)_n``."""
    table = b.table
    mono = _monomial_exps(b)
    if mono is not None:
        num = pochhammer_factored(table, mono, n)
        if num is None:
            return RationalFunction.zero(table)
        den = pochhammer_factored(table, _q_exps(table), n)
        return (num / den).to_rational()
    return pochhammer(b, n) / pochhammer(RationalFunction(LaurentPolynomial.var(table, "q")), n)


def xi_series(b, w: LaurentPolynomial, order: int, series_var: str) -> TruncatedSeries:
    """Expansion of ``xi(b, w)`` graded by the exponent of ``series_var`` in ``w``."""
    deg, rest, coeff_table = _split_weight(w, series_var)
    if deg <= 0:
        raise AlgebraError(f"weight {w} has nonpositive degree {deg} in {series_var}; expansion would not terminate")
    b = _coerce_b(b, coeff_table)
    coeffs = {}
    for n in range(order // deg + 1):
        c = xi_coefficient(b, n)
        if c.is_zero():
            continue
        if any(rest):
            c = c * RationalFunction(LaurentPolynomial.monomial(coeff_table, tuple(n * x for x in rest)))
        coeffs[(n * deg,)] = c
    return TruncatedSeries(coeff_table, (series_var,), order, coeffs)


def xi_product(b, N: Character, order: int, series_var: str) -> TruncatedSeries:
    """``Xi(b, N) = prod xi(b, w)`` over the weights of ``N`` with multiplicity."""
    coeff_table = N.table.without(series_var)
    for e, c in N.weights.items():
        if c < 0:
            raise AlgebraError(f"Xi needs nonnegative multiplicities; weight {e} has {c}")
    out = TruncatedSeries.one(coeff_table, (series_var,), order)
    # low-degree weights first keeps intermediate products short
    i = N.table.index(series_var)
    for e in sorted(N.expanded(), key=lambda e: (e[i], e)):
        out = out * xi_series(b, LaurentPolynomial.monomial(N.table, e), order, series_var)
    return out
