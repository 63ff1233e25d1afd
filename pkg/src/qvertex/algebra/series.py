"""Power series in one or more series variables, truncated at a total degree."""
from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

from .laurent import AlgebraError, VariableTable
from .rational import RationalFunction

Degree = Tuple[int, ...]


class TruncatedSeries:
    """``sum_d c_d * s^d`` over degree vectors ``d`` with ``|d| <= order``.

    Coefficients live over ``table``, which must not contain the series
    variables.  Zero coefficients are not stored.
    """

    __slots__ = ("table", "series_vars", "order", "coeffs")

    def __init__(
        self,
        table: VariableTable,
        series_vars: Sequence[str],
        order: int,
        coeffs: Optional[Dict[Degree, RationalFunction]] = None,
    ):
        if order < 0:
            raise AlgebraError("truncation order must be nonnegative")
        series_vars = tuple(series_vars)
        for v in series_vars:
            if v in table:
                raise AlgebraError(f"series variable {v!r} also appears in the coefficient table")
        self.table = table
        self.series_vars = series_vars
        self.order = order
        clean: Dict[Degree, RationalFunction] = {}
        for d, c in (coeffs or {}).items():
            d = tuple(d)
            if len(d) != len(series_vars) or min(d, default=0) < 0:
                raise AlgebraError(f"bad degree vector {d}")
            if sum(d) > order:
                continue
            if c.table != table:
                raise AlgebraError("coefficient over the wrong table")
            if not c.is_zero():
                clean[d] = c
        self.coeffs = clean

    @classmethod
    def one(cls, table: VariableTable, series_vars: Sequence[str], order: int) -> "TruncatedSeries":
        return cls(table, series_vars, order, {(0,) * len(series_vars): RationalFunction.one(table)})

    def _compatible(self, other: "TruncatedSeries") -> None:
        if self.table != other.table or self.series_vars != other.series_vars:
            raise AlgebraError("series over different tables or variables")

    def degrees(self) -> Iterator[Degree]:
        """All degree vectors up to the order, sorted by total degree then lexicographically."""
        n = len(self.series_vars)
        out = [d for d in iproduct(range(self.order + 1), repeat=n) if sum(d) <= self.order]
        return iter(sorted(out, key=lambda d: (sum(d), d)))

    def coefficient(self, degree) -> RationalFunction:
        if isinstance(degree, int):
            degree = (degree,)
        return self.coeffs.get(tuple(degree), RationalFunction.zero(self.table))

    def constant_term(self) -> RationalFunction:
        return self.coefficient((0,) * len(self.series_vars))

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.table, self.series_vars, min(order, self.order), self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._compatible(other)
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return TruncatedSeries(self.table, self.series_vars, order, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.table, self.series_vars, self.order, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._compatible(other)
        order = min(self.order, other.order)
        buckets: Dict[Degree, list] = {}
        for d1, c1 in self.coeffs.items():
            s1 = sum(d1)
            for d2, c2 in other.coeffs.items():
                if s1 + sum(d2) > order:
                    continue
                d = tuple(a + b for a, b in zip(d1, d2))
                buckets.setdefault(d, []).append(c1 * c2)
        out = {}
        for d, parts in buckets.items():
            acc = parts[0]
            for p in parts[1:]:
                acc = acc + p
            out[d] = acc.cancel_known_factors()
        return TruncatedSeries(self.table, self.series_vars, order, out)

    def scale(self, c: RationalFunction) -> "TruncatedSeries":
        return TruncatedSeries(self.table, self.series_vars, self.order, {d: v * c for d, v in self.coeffs.items()})

    def map_coefficients(self, fn: Callable[[RationalFunction], RationalFunction], table: Optional[VariableTable] = None) -> "TruncatedSeries":
        return TruncatedSeries(table or self.table, self.series_vars, self.order, {d: fn(c) for d, c in self.coeffs.items()})

    def mismatches(self, other: "TruncatedSeries", order: Optional[int] = None):
        """Degrees (ascending) where coefficients differ, up to the common order."""
        self._compatible(other)
        top = min(self.order, other.order) if order is None else order
        bad = []
        for d in TruncatedSeries(self.table, self.series_vars, top).degrees():
            if not (self.coefficient(d) == other.coefficient(d)):
                bad.append(d)
        return bad

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and not self.mismatches(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.text()!r})"

    def text(self) -> str:
        from .textform import format_monomial

        parts = []
        for d in self.degrees():
            c = self.coeffs.get(d)
            if c is None:
                continue
            mono = format_monomial(self.series_vars, d)
            ct = c.text()
            if not mono:
                parts.append(ct)
            elif ct == "1":
                parts.append(mono)
            else:
                parts.append(f"({ct})*{mono}" if not ct.startswith("(") else f"{ct}*{mono}")
        body = " + ".join(parts) if parts else "0"
        if not self.series_vars:
            return body
        vs = self.series_vars[0] if len(self.series_vars) == 1 else "(" + ", ".join(self.series_vars) + ")"
        return f"{body} + O({vs}^{self.order + 1})"
