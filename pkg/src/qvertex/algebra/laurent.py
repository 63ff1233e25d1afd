"""Variable tables and sparse multivariate Laurent polynomials over Q."""
from __future__ import annotations

from fractions import Fraction
from operator import add, sub
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Exps = Tuple[int, ...]
Coeff = Union[int, Fraction]

# exponents are Python ints; this bound keeps them inside signed 32-bit range
EXPONENT_LIMIT = 2**31 - 1


class AlgebraError(ValueError):
    """Base class for errors raised by the exact-algebra layer."""


class TableMismatch(AlgebraError):
    pass


class ExponentOverflow(AlgebraError):
    pass


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def check_exponents(exps: Sequence[int]) -> None:
    for e in exps:
        if e > EXPONENT_LIMIT or e < -EXPONENT_LIMIT:
            raise ExponentOverflow(f"exponent {e} outside the supported range")


def _reach(terms: Iterable[Exps]) -> int:
    # sums of exponents can leave the range only if the operands' reaches add past it
    return max((abs(x) for e in terms for x in e), default=0)


class VariableTable:
    """Ordered, immutable list of distinct variable names.

    Two tables are compatible iff they list the same names in the same order.
    """

    __slots__ = ("names", "_index", "_hash")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate variable names in {names}")
        for name in names:
            if not name or not (name[0].isalpha() or name[0] == "_") or not all(
                ch.isalnum() or ch == "_" for ch in name
            ):
                raise AlgebraError(f"invalid variable name {name!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash(names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, VariableTable) and self.names == other.names

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VariableTable({list(self.names)})"

    def __reduce__(self):
        return (VariableTable, (self.names,))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"variable {name!r} not in {self.names}") from None

    def zero_exps(self) -> Exps:
        return (0,) * len(self.names)

    def unit_exps(self, name: str, power: int = 1) -> Exps:
        e = [0] * len(self.names)
        e[self.index(name)] = power
        return tuple(e)

    def exps_from(self, powers: Mapping[str, int]) -> Exps:
        e = [0] * len(self.names)
        for name, p in powers.items():
            e[self.index(name)] += p
        check_exponents(e)
        return tuple(e)

    def extend(self, *names: str) -> "VariableTable":
        return VariableTable(self.names + tuple(n for n in names if n not in self._index))

    def without(self, *names: str) -> "VariableTable":
        drop = set(names)
        return VariableTable(n for n in self.names if n not in drop)


def _check_table(a: "LaurentPolynomial", b: "LaurentPolynomial") -> None:
    if a.table is not b.table and a.table != b.table:
        raise TableMismatch(f"{a.table!r} vs {b.table!r}")


class LaurentPolynomial:
    """Sparse Laurent polynomial: ``{exponent tuple: nonzero rational}``.

    Instances are treated as immutable; every operation returns a new object.
    Plain ints and Fractions are accepted on either side of ``+ - *``.
    """

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VariableTable, terms: Optional[Mapping[Exps, Coeff]] = None, *, _trusted: bool = False):
        self.table = table
        self._hash = None
        if _trusted:
            self.terms = terms  # type: ignore[assignment]
            return
        clean: Dict[Exps, Coeff] = {}
        n = len(table)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise AlgebraError(f"exponent vector {exps} has wrong length for {table!r}")
            check_exponents(exps)
            if not isinstance(c, (int, Fraction)):
                raise AlgebraError(f"coefficient {c!r} is not an exact rational")
            if c:
                prev = clean.get(exps, 0) + c
                if prev:
                    clean[exps] = _norm_coeff(prev)
                else:
                    clean.pop(exps, None)
        self.terms = clean

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, table: VariableTable) -> "LaurentPolynomial":
        return cls(table, {}, _trusted=True)

    @classmethod
    def constant(cls, table: VariableTable, c: Coeff = 1) -> "LaurentPolynomial":
        c = _norm_coeff(c)
        return cls(table, {table.zero_exps(): c} if c else {}, _trusted=True)

    @classmethod
    def one(cls, table: VariableTable) -> "LaurentPolynomial":
        return cls.constant(table, 1)

    @classmethod
    def monomial(cls, table: VariableTable, exps: Sequence[int], c: Coeff = 1) -> "LaurentPolynomial":
        exps = tuple(exps)
        if len(exps) != len(table):
            raise AlgebraError("exponent vector has wrong length")
        check_exponents(exps)
        c = _norm_coeff(c)
        return cls(table, {exps: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, table: VariableTable, name: str, power: int = 1) -> "LaurentPolynomial":
        return cls.monomial(table, table.unit_exps(name, power))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        """True for a single term (any nonzero coefficient)."""
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        return len(self.terms) == 1 and not any(next(iter(self.terms)))

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise AlgebraError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def single_term(self) -> Tuple[Exps, Coeff]:
        if len(self.terms) != 1:
            raise AlgebraError("polynomial is not a single term")
        return next(iter(self.terms.items()))

    def variables(self) -> Tuple[str, ...]:
        """Names of the variables actually occurring."""
        used = [False] * len(self.table)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.table.names, used) if u)

    def __len__(self) -> int:
        return len(self.terms)

    # ordering -----------------------------------------------------------
    def sorted_terms(self) -> list:
        """Terms in canonical (ascending lexicographic exponent) order."""
        return sorted(self.terms.items())

    def leading_term(self) -> Tuple[Exps, Coeff]:
        """First term in canonical order."""
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        return min(self.terms.items())

    def min_exponents(self) -> Exps:
        """Exponent vector of the monomial content (componentwise minimum)."""
        if not self.terms:
            return self.table.zero_exps()
        it = iter(self.terms)
        lo = list(next(it))
        for exps in it:
            for i, e in enumerate(exps):
                if e < lo[i]:
                    lo[i] = e
        return tuple(lo)

    def max_exponents(self) -> Exps:
        if not self.terms:
            return self.table.zero_exps()
        it = iter(self.terms)
        hi = list(next(it))
        for exps in it:
            for i, e in enumerate(exps):
                if e > hi[i]:
                    hi[i] = e
        return tuple(hi)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            _check_table(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        res = dict(big)
        for e, c in small.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = _norm_coeff(v)
            else:
                del res[e]
        return LaurentPolynomial(self.table, res, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.table, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self.terms)
        for e, c in other.terms.items():
            v = res.get(e, 0) - c
            if v:
                res[e] = _norm_coeff(v)
            else:
                del res[e]
        return LaurentPolynomial(self.table, res, _trusted=True)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPolynomial.zero(self.table)
        if len(a) < len(b):
            a, b = b, a
        if _reach(a) + _reach(b) > EXPONENT_LIMIT:
            for ea in a:
                for eb in b:
                    check_exponents(tuple(map(add, ea, eb)))
        if len(b) == 1:
            (eb, cb), = b.items()
            if not any(eb):
                if cb == 1:
                    return LaurentPolynomial(self.table, dict(a), _trusted=True)
                return LaurentPolynomial(self.table, {e: _norm_coeff(c * cb) for e, c in a.items()}, _trusted=True)
            return LaurentPolynomial(
                self.table, {tuple(map(add, e, eb)): _norm_coeff(c * cb) for e, c in a.items()}, _trusted=True
            )
        res: Dict[Exps, Coeff] = {}
        get = res.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                res[e] = get(e, 0) + ca * cb
        out = {e: _norm_coeff(c) for e, c in res.items() if c}
        return LaurentPolynomial(self.table, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.terms) != 1:
                raise AlgebraError("negative powers only exist for single terms")
            (e, c), = self.terms.items()
            exps = tuple(x * n for x in e)
            check_exponents(exps)
            return LaurentPolynomial.monomial(self.table, exps, Fraction(1, c) ** (-n))
        result = LaurentPolynomial.one(self.table)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Coeff) -> "LaurentPolynomial":
        if not c:
            return LaurentPolynomial.zero(self.table)
        return LaurentPolynomial(self.table, {e: _norm_coeff(v * c) for e, v in self.terms.items()}, _trusted=True)

    def shift(self, exps: Sequence[int], c: Coeff = 1) -> "LaurentPolynomial":
        """Multiply by the monomial ``c * x^exps``."""
        exps = tuple(exps)
        if _reach(self.terms) + _reach([exps]) > EXPONENT_LIMIT:
            for e in self.terms:
                check_exponents(tuple(map(add, e, exps)))
        if not c:
            return LaurentPolynomial.zero(self.table)
        if c == 1:
            return LaurentPolynomial(self.table, {tuple(map(add, e, exps)): v for e, v in self.terms.items()}, _trusted=True)
        return LaurentPolynomial(
            self.table, {tuple(map(add, e, exps)): _norm_coeff(v * c) for e, v in self.terms.items()}, _trusted=True
        )

    def mul_one_minus(self, exps: Exps, power: int = 1) -> "LaurentPolynomial":
        """Multiply by ``(1 - x^exps)^power`` for ``power >= 0``."""
        terms = self.terms
        if _reach(terms) + power * _reach([exps]) > EXPONENT_LIMIT:
            for e in terms:
                check_exponents(tuple(x + power * k for x, k in zip(e, exps)))
        for _ in range(power):
            res = dict(terms)
            for e, c in terms.items():
                k = tuple(map(add, e, exps))
                v = res.get(k, 0) - c
                if v:
                    res[k] = v
                else:
                    del res[k]
            terms = res
        return LaurentPolynomial(self.table, terms, _trusted=True)

    def divide_exact(self, other: "LaurentPolynomial") -> Optional["LaurentPolynomial"]:
        """Exact quotient ``self / other`` in the Laurent ring, or None if it does not exist.

        Both operands are shifted to ordinary polynomials and divided with
        respect to the lexicographic order; a zero remainder means exact.
        """
        _check_table(self, other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPolynomial.zero(self.table)
        lo_d = other.min_exponents()
        d_terms = {tuple(map(sub, e, lo_d)): c for e, c in other.terms.items()}
        lead_e, lead_c = max(d_terms.items())
        lo_n = self.min_exponents()
        rem = {tuple(map(sub, e, lo_n)): c for e, c in self.terms.items()}
        quot: Dict[Exps, Coeff] = {}
        while rem:
            e, c = max(rem.items())
            qe = tuple(map(sub, e, lead_e))
            if min(qe) < 0:
                return None
            qc = _norm_coeff(Fraction(c) / lead_c)
            quot[qe] = qc
            for de, dc in d_terms.items():
                k = tuple(map(add, qe, de))
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = _norm_coeff(v)
                else:
                    rem.pop(k, None)
        shift = tuple(map(sub, lo_n, lo_d))
        return LaurentPolynomial(self.table, {tuple(map(add, e, shift)): c for e, c in quot.items()}, _trusted=True)

    # comparison ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == ({self.table.zero_exps(): other} if other else {})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # misc ---------------------------------------------------------------
    def retable(self, table: VariableTable) -> "LaurentPolynomial":
        """Re-express over another table containing every variable that occurs."""
        if table == self.table:
            return self
        for n in self.variables():
            table.index(n)
        idx = [(i, table.index(n)) for i, n in enumerate(self.table.names) if n in table]
        width = len(table)
        out = {}
        for e, c in self.terms.items():
            t = [0] * width
            for i, j in idx:
                t[j] = e[i]
            out[tuple(t)] = c
        return LaurentPolynomial(table, out, _trusted=True)

    def degree_in(self, name: str) -> Tuple[int, int]:
        """(min, max) exponent of one variable."""
        i = self.table.index(name)
        es = [e[i] for e in self.terms] or [0]
        return min(es), max(es)

    def __repr__(self) -> str:
        from .textform import format_polynomial

        return f"LaurentPolynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        from .textform import format_polynomial

        return format_polynomial(self)

    def __reduce__(self):
        return (_rebuild_poly, (self.table, tuple(self.terms.items())))


def _rebuild_poly(table, items):
    return LaurentPolynomial(table, dict(items), _trusted=True)


def divide_one_minus(p: LaurentPolynomial, key: Exps) -> Optional[LaurentPolynomial]:
    """Exact quotient ``p / (1 - x^key)`` for ``key >lex 0``, or None.

    Terms split into chains ``e + t*key``; along a chain this is division of a
    univariate polynomial by ``1 - y``, so the quotient coefficients are prefix
    sums and the chain is divisible iff its coefficients sum to zero.
    """
    if not p.terms:
        return p
    i0 = next(i for i, k in enumerate(key) if k)
    step = key[i0]
    chains: Dict[Exps, Dict[int, Coeff]] = {}
    for e, c in p.terms.items():
        t = e[i0] // step
        base = tuple(x - t * k for x, k in zip(e, key))
        chains.setdefault(base, {})[t] = c
    quot: Dict[Exps, Coeff] = {}
    for base, chain in chains.items():
        if len(chain) < 2 or sum(chain.values()):
            return None
        ts = sorted(chain)
        acc: Coeff = 0
        for t in range(ts[0], ts[-1]):
            acc += chain.get(t, 0)
            if acc:
                quot[tuple(x + t * k for x, k in zip(base, key))] = _norm_coeff(acc)
    return LaurentPolynomial(p.table, quot, _trusted=True)
