"""Rational functions: fractions of Laurent polynomials, compared by cross-multiplication."""
from __future__ import annotations

from fractions import Fraction
from operator import add
from typing import Optional

from .factored import Factored, lcm_factors
from .laurent import AlgebraError, LaurentPolynomial, VariableTable, _check_table, divide_one_minus


class RationalFunction:
    """``num / den`` with monomial content removed and a monic leading denominator term.

    No gcd is ever taken.  When the denominator is known as a product of
    binomials ``(1 - x^k)`` that factorization is kept alongside, which lets
    sums use a least common multiple instead of the full product of
    denominators.
    """

    __slots__ = ("table", "num", "_den", "_dfac")

    def __init__(self, num: LaurentPolynomial, den: Optional[LaurentPolynomial] = None):
        table = num.table
        if den is None:
            den = LaurentPolynomial.one(table)
        else:
            _check_table(num, den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.table = table
        if num.is_zero():
            self._set_zero()
            return
        lo = den.min_exponents()
        shift = tuple(-x for x in lo)
        c = min(den.terms.items())[1]
        inv = Fraction(1) / c
        den_n = den.shift(shift, inv)
        self.num = num.shift(shift, inv)
        if len(den_n.terms) == 1:
            self._den = den_n
            self._dfac = Factored.one(table)
        else:
            self._den = den_n
            self._dfac = None

    def _set_zero(self) -> None:
        self.num = LaurentPolynomial.zero(self.table)
        self._den = LaurentPolynomial.one(self.table)
        self._dfac = Factored.one(self.table)

    @classmethod
    def from_factored_denominator(cls, num: LaurentPolynomial, dfac: Factored) -> "RationalFunction":
        """``num / dfac`` where ``dfac`` has only positive binomial exponents."""
        if not dfac.is_polynomial():
            raise AlgebraError("denominator factorization must have positive exponents")
        self = cls.__new__(cls)
        self.table = num.table
        if num.is_zero():
            self._set_zero()
            return self
        # lex-least term of prod (1 - x^k)^e is 1, so the leading term is coeff * x^mono
        lo = list(dfac.mono)
        for k, e in dfac.factors.items():
            for i, x in enumerate(k):
                if x < 0:
                    lo[i] += e * x
        shift = tuple(-x for x in lo)
        inv = Fraction(1) / dfac.coeff
        self.num = num.shift(shift, inv)
        new_mono = tuple(map(add, dfac.mono, shift))
        self._dfac = Factored(num.table, 1, new_mono, dfac.factors)
        self._den = None
        return self

    @classmethod
    def zero(cls, table: VariableTable) -> "RationalFunction":
        return cls(LaurentPolynomial.zero(table))

    @classmethod
    def one(cls, table: VariableTable) -> "RationalFunction":
        return cls(LaurentPolynomial.one(table))

    @classmethod
    def constant(cls, table: VariableTable, c) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(table, c))

    @classmethod
    def parse(cls, text: str, table: VariableTable) -> "RationalFunction":
        from .textform import parse_pair

        n, d = parse_pair(text, table)
        return cls(n, d)

    # denominator access -------------------------------------------------
    @property
    def den(self) -> LaurentPolynomial:
        if self._den is None:
            self._den = self._dfac.expand()
        return self._den

    @property
    def den_factors(self) -> Optional[Factored]:
        return self._dfac

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        if not self.num.is_constant():
            return False
        if self._dfac is not None:
            return not self._dfac.factors and not any(self._dfac.mono)
        return self.den.is_constant()

    def variables(self):
        names = set(self.num.variables())
        if self._dfac is not None:
            names.update(self._dfac.variables())
        else:
            names.update(self.den.variables())
        return tuple(n for n in self.table.names if n in names)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.table != self.table:
                raise AlgebraError(f"table mismatch: {self.table!r} vs {other.table!r}")
            return other
        if isinstance(other, LaurentPolynomial):
            _check_table(self.num, other)
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.table, other)
        return NotImplemented

    def _over_lcm(self, L):
        """Numerator of ``self`` rewritten over the binomial product ``L``."""
        f = self._dfac
        p = self.num.shift(tuple(-m for m in f.mono))
        for k in sorted(L, key=lambda k: sum(abs(x) for x in k)):
            extra = L[k] - f.factors.get(k, 0)
            if extra:
                p = p.mul_one_minus(k, extra)
        return p

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self._dfac is not None and other._dfac is not None:
            L = lcm_factors([self._dfac.factors, other._dfac.factors])
            num = self._over_lcm(L) + other._over_lcm(L)
            return RationalFunction.from_factored_denominator(num, Factored(self.table, 1, self.table.zero_exps(), L))
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.table, out.num, out._den, out._dfac = self.table, -self.num, self._den, self._dfac
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero(self.table)
        num = self.num * other.num
        if self._dfac is not None and other._dfac is not None:
            return RationalFunction.from_factored_denominator(num, self._dfac * other._dfac)
        return RationalFunction(num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        if len(self.num.terms) == 1 and self._dfac is not None:
            (e, c), = self.num.terms.items()
            unit = Factored.monomial(self.table, e, c)
            return RationalFunction.from_factored_denominator(self._dfac.expand(), unit)
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFunction.one(self.table)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def cancel_known_factors(self) -> "RationalFunction":
        """Divide out known denominator binomials that also divide the numerator."""
        if self._dfac is None or not self._dfac.factors or self.is_zero():
            return self
        num = self.num
        facs = dict(self._dfac.factors)
        changed = False
        for k in sorted(facs):
            while facs[k]:
                q = divide_one_minus(num, k)
                if q is None:
                    break
                num = q
                facs[k] -= 1
                changed = True
        if not changed:
            return self
        # num is over x^mono * prod; keep the unit monomial in the denominator
        return RationalFunction.from_factored_denominator(
            num, Factored(self.table, 1, self._dfac.mono, {k: e for k, e in facs.items() if e})
        )

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self._dfac is not None and other._dfac is not None:
            L = lcm_factors([self._dfac.factors, other._dfac.factors])
            return self._over_lcm(L) == other._over_lcm(L)
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is not structural

    # output -------------------------------------------------------------
    def text(self) -> str:
        from .textform import format_rational

        return format_rational(self.num, self.den)

    def num_den_text(self):
        from .textform import format_polynomial

        return {"num": format_polynomial(self.num), "den": format_polynomial(self.den)}

    __str__ = text

    def __repr__(self) -> str:
        return f"RationalFunction({self.text()!r})"

    def retable(self, table: VariableTable) -> "RationalFunction":
        if table == self.table:
            return self
        if self._dfac is not None:
            num = self.num.retable(table)
            d = self._dfac
            idx = [(i, table.index(n)) for i, n in enumerate(d.table.names) if n in table]

            def move(e):
                t = [0] * len(table)
                for i, j in idx:
                    t[j] = e[i]
                for i, x in enumerate(e):
                    if x and d.table.names[i] not in table:
                        raise AlgebraError(f"variable {d.table.names[i]} not in target table")
                return tuple(t)

            return RationalFunction.from_factored_denominator(
                num, Factored(table, d.coeff, move(d.mono), {move(k): e for k, e in d.factors.items()})
            )
        return RationalFunction(self.num.retable(table), self.den.retable(table))

    def __reduce__(self):
        if self._dfac is not None:
            return (RationalFunction.from_factored_denominator, (self.num, self._dfac))
        return (RationalFunction, (self.num, self.den))
