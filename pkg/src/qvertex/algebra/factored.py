"""Products of binomials ``c * x^m * prod (1 - x^k)^e`` kept in factored form.

Every Pochhammer symbol at a monomial argument is such a product, so vertex
summands, q-binomial coefficients and their limits never need expanding
until they are summed.
"""
from __future__ import annotations

from fractions import Fraction
from operator import add
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .laurent import AlgebraError, Coeff, Exps, LaurentPolynomial, VariableTable, _norm_coeff


class VanishingFactor(AlgebraError):
    """A binomial ``1 - x^k`` is identically zero (``k == 0``)."""


def canonical_key(exps: Exps) -> Tuple[Exps, int, Exps]:
    """Rewrite ``1 - x^e`` as ``sign * x^u * (1 - x^key)`` with ``key >lex 0``."""
    for e in exps:
        if e > 0:
            return exps, 1, (0,) * len(exps)
        if e < 0:
            return tuple(-x for x in exps), -1, exps
    raise VanishingFactor("factor 1 - x^0 vanishes identically")


class Factored:
    __slots__ = ("table", "coeff", "mono", "factors")

    def __init__(self, table: VariableTable, coeff: Coeff, mono: Exps, factors: Mapping[Exps, int]):
        if not coeff:
            raise AlgebraError("Factored values are nonzero; use None for zero")
        self.table = table
        self.coeff = _norm_coeff(coeff)
        self.mono = tuple(mono)
        self.factors: Dict[Exps, int] = {k: e for k, e in factors.items() if e}

    @classmethod
    def one(cls, table: VariableTable) -> "Factored":
        return cls(table, 1, table.zero_exps(), {})

    @classmethod
    def monomial(cls, table: VariableTable, exps: Sequence[int], coeff: Coeff = 1) -> "Factored":
        return cls(table, coeff, tuple(exps), {})

    @classmethod
    def one_minus(cls, table: VariableTable, exps: Sequence[int], power: int = 1) -> "Factored":
        key, sign, unit = canonical_key(tuple(exps))
        return cls(table, sign if power & 1 else 1, tuple(u * power for u in unit), {key: power})

    @classmethod
    def from_binomials(
        cls, table: VariableTable, pairs: Iterable[Tuple[Exps, int]], coeff: Coeff = 1, mono: Optional[Exps] = None
    ) -> "Factored":
        """Product of ``(1 - x^e)^p`` over ``(e, p)`` pairs; raises VanishingFactor on ``e == 0``."""
        mono_l = list(mono) if mono is not None else [0] * len(table)
        facs: Dict[Exps, int] = {}
        sign = 1
        for exps, p in pairs:
            if not p:
                continue
            key, s, unit = canonical_key(exps)
            if s < 0:
                if p & 1:
                    sign = -sign
                for i, u in enumerate(unit):
                    if u:
                        mono_l[i] += u * p
            facs[key] = facs.get(key, 0) + p
        return cls(table, sign * coeff, tuple(mono_l), facs)

    # arithmetic ---------------------------------------------------------
    def __mul__(self, other: "Factored") -> "Factored":
        facs = dict(self.factors)
        for k, e in other.factors.items():
            facs[k] = facs.get(k, 0) + e
        return Factored(self.table, self.coeff * other.coeff, tuple(map(add, self.mono, other.mono)), facs)

    def inverse(self) -> "Factored":
        return Factored(
            self.table, Fraction(1) / self.coeff, tuple(-m for m in self.mono), {k: -e for k, e in self.factors.items()}
        )

    def __truediv__(self, other: "Factored") -> "Factored":
        return self * other.inverse()

    def __pow__(self, n: int) -> "Factored":
        if n < 0:
            return self.inverse() ** (-n)
        return Factored(self.table, self.coeff**n, tuple(m * n for m in self.mono), {k: e * n for k, e in self.factors.items()})

    def scale(self, c: Coeff) -> "Factored":
        return Factored(self.table, self.coeff * c, self.mono, self.factors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Factored):
            return NotImplemented
        return (
            self.table == other.table
            and self.coeff == other.coeff
            and self.mono == other.mono
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.coeff, self.mono, frozenset(self.factors.items())))

    # views --------------------------------------------------------------
    def is_polynomial(self) -> bool:
        return all(e > 0 for e in self.factors.values())

    def numerator_part(self) -> "Factored":
        return Factored(self.table, self.coeff, self.mono, {k: e for k, e in self.factors.items() if e > 0})

    def denominator_part(self) -> "Factored":
        return Factored(self.table, 1, self.table.zero_exps(), {k: -e for k, e in self.factors.items() if e < 0})

    def expand(self) -> LaurentPolynomial:
        if not self.is_polynomial():
            raise AlgebraError("cannot expand a factored value with negative exponents")
        p = LaurentPolynomial.monomial(self.table, self.mono, self.coeff)
        # multiply small keys first to keep intermediates sparse
        for k in sorted(self.factors, key=lambda k: sum(abs(x) for x in k)):
            p = p.mul_one_minus(k, self.factors[k])
        return p

    def to_rational(self):
        from .rational import RationalFunction

        num = self.numerator_part().expand()
        return RationalFunction.from_factored_denominator(num, self.denominator_part())

    def variables(self) -> Tuple[str, ...]:
        used = [bool(m) for m in self.mono]
        for k in self.factors:
            for i, x in enumerate(k):
                if x:
                    used[i] = True
        return tuple(n for n, u in zip(self.table.names, used) if u)

    def __repr__(self) -> str:
        from .textform import format_monomial

        parts = [str(self.coeff)]
        m = format_monomial(self.table.names, self.mono)
        if m:
            parts.append(m)
        for k, e in sorted(self.factors.items()):
            parts.append(f"(1 - {format_monomial(self.table.names, k)})^{e}")
        return "Factored(" + "*".join(parts) + ")"

    def __reduce__(self):
        return (Factored, (self.table, self.coeff, self.mono, dict(self.factors)))


def lcm_factors(dicts: Iterable[Mapping[Exps, int]]) -> Dict[Exps, int]:
    out: Dict[Exps, int] = {}
    for d in dicts:
        for k, e in d.items():
            if e > out.get(k, 0):
                out[k] = e
    return out


def expand_binomials(table: VariableTable, facs: Mapping[Exps, int]) -> LaurentPolynomial:
    p = LaurentPolynomial.one(table)
    for k in sorted(facs, key=lambda k: sum(abs(x) for x in k)):
        p = p.mul_one_minus(k, facs[k])
    return p


def sum_factored(terms: Iterable[Factored], table: VariableTable):
    """Exact sum of factored values as a RationalFunction.

    Uses the least common multiple of the binomial factor multisets as the
    common denominator, then cancels whatever binomials still divide the
    numerator.
    """
    from .rational import RationalFunction

    terms = list(terms)
    if not terms:
        return RationalFunction.zero(table)
    L = lcm_factors({k: -e for k, e in t.factors.items() if e < 0} for t in terms)
    num = LaurentPolynomial.zero(table)
    for t in terms:
        facs = {k: e for k, e in t.factors.items() if e > 0}
        for k, e in L.items():
            have = -t.factors.get(k, 0) if t.factors.get(k, 0) < 0 else 0
            if e > have:
                facs[k] = facs.get(k, 0) + e - have
        part = LaurentPolynomial.monomial(table, t.mono, t.coeff)
        for k in sorted(facs, key=lambda k: sum(abs(x) for x in k)):
            part = part.mul_one_minus(k, facs[k])
        num = num + part
    den = Factored(table, 1, table.zero_exps(), L)
    return RationalFunction.from_factored_denominator(num, den).cancel_known_factors()
