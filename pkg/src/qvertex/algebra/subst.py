"""Monomial substitutions and limits along cocharacters."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

from .factored import Factored, VanishingFactor, canonical_key
from .laurent import AlgebraError, Exps, LaurentPolynomial, VariableTable, check_exponents
from .rational import RationalFunction


class PoleError(AlgebraError):
    """The limit w -> 0 does not exist (negative valuation)."""


class MonomialMap:
    """Simultaneous substitution ``v^root -> monomial`` from one table into another.

    Variables without an explicit image go to the same-named variable of the
    target table.  A ``root`` other than 1 (e.g. ``h^2 -> q*hp^-2`` for
    ``hbar -> q/hbar'`` with ``hbar = h^2``) only accepts exponents divisible
    by it.
    """

    def __init__(
        self,
        source: VariableTable,
        target: VariableTable,
        images: Optional[Mapping[str, Union[str, LaurentPolynomial]]] = None,
        roots: Optional[Mapping[str, int]] = None,
    ):
        from .textform import parse_polynomial

        self.source = source
        self.target = target
        images = dict(images or {})
        roots = dict(roots or {})
        for name in list(images) + list(roots):
            source.index(name)
        rows: List[Tuple[Exps, int]] = []
        for name in source.names:
            if name in images:
                img = images[name]
                if isinstance(img, str):
                    img = parse_polynomial(img, target)
                elif img.table != target:
                    raise AlgebraError(f"image of {name} is not over the target table")
                if len(img.terms) != 1:
                    raise AlgebraError(f"image of {name} must be a monomial, got {img}")
                (exps, c), = img.terms.items()
                if c != 1:
                    raise AlgebraError(f"image of {name} must have coefficient 1, got {c}")
                rows.append((exps, roots.get(name, 1)))
            else:
                if name not in target:
                    raise AlgebraError(f"image variable {name!r} not present in the target table {target.names}")
                rows.append((target.unit_exps(name), roots.get(name, 1)))
        self.rows = rows
        self.images = images
        self.roots = roots
        self._identity = source == target and not images and not any(r != 1 for _, r in rows)

    def map_exps(self, exps: Exps) -> Exps:
        out = [0] * len(self.target)
        for x, (vec, r) in zip(exps, self.rows):
            if not x:
                continue
            if r != 1:
                if x % r:
                    raise AlgebraError(f"exponent {x} not divisible by root {r} in substitution")
                x //= r
            for j, v in enumerate(vec):
                if v:
                    out[j] += x * v
        check_exponents(out)
        return tuple(out)

    def apply_poly(self, p: LaurentPolynomial) -> LaurentPolynomial:
        if p.table != self.source:
            raise AlgebraError("polynomial is not over the map's source table")
        if self._identity:
            return p
        out: Dict[Exps, object] = {}
        for e, c in p.terms.items():
            k = self.map_exps(e)
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(self.target, out)

    def apply_factored(self, f: Factored) -> Factored:
        mono = list(self.map_exps(f.mono))
        coeff = f.coeff
        facs: Dict[Exps, int] = {}
        for k, e in f.factors.items():
            key, sign, unit = canonical_key(self.map_exps(k))
            if sign < 0:
                if e & 1:
                    coeff = -coeff
                for i, u in enumerate(unit):
                    mono[i] += u * e
            facs[key] = facs.get(key, 0) + e
        return Factored(self.target, coeff, tuple(mono), facs)

    def apply(self, f):
        if isinstance(f, LaurentPolynomial):
            return self.apply_poly(f)
        if isinstance(f, Factored):
            return self.apply_factored(f)
        if isinstance(f, RationalFunction):
            num = self.apply_poly(f.num)
            if f.den_factors is not None:
                try:
                    dfac = self.apply_factored(f.den_factors)
                except VanishingFactor:
                    raise AlgebraError("substitution makes the denominator vanish") from None
                return RationalFunction.from_factored_denominator(num, dfac)
            den = self.apply_poly(f.den)
            if den.is_zero():
                raise AlgebraError("substitution makes the denominator vanish")
            return RationalFunction(num, den)
        raise TypeError(f"cannot substitute into {type(f).__name__}")

    __call__ = apply

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """``other`` after ``self`` (apply self first)."""
        if other.source != self.target:
            raise AlgebraError("maps do not compose")
        images = {}
        roots = {}
        for name, (vec, r) in zip(self.source.names, self.rows):
            images[name] = LaurentPolynomial.monomial(other.target, other.map_exps(vec))
            if r != 1:
                roots[name] = r
        return MonomialMap(self.source, other.target, images, roots)


def substitute_monomials(f, m: MonomialMap):
    """Apply a monomial substitution to a polynomial, factored value or rational function."""
    return m.apply(f)


@dataclass(frozen=True)
class Cocharacter:
    """``a_i -> w^sigma_i`` for the listed equivariant variables."""

    assignments: Tuple[Tuple[str, int], ...]

    FORBIDDEN = ("q", "h", "hbar", "z")

    def __post_init__(self):
        names = [n for n, _ in self.assignments]
        if len(set(names)) != len(names):
            raise AlgebraError("cocharacter assigns a variable twice")
        for n in names:
            if n in self.FORBIDDEN or n.startswith("z"):
                raise AlgebraError(f"cocharacters act on equivariant variables only, not {n!r}")

    @classmethod
    def of(cls, mapping: Mapping[str, int]) -> "Cocharacter":
        return cls(tuple(mapping.items()))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.assignments)

    def weights(self, table: VariableTable) -> Exps:
        w = [0] * len(table)
        for n, s in self.assignments:
            if n in table:
                w[table.index(n)] = s
        return tuple(w)

    def target_table(self, table: VariableTable) -> VariableTable:
        return table.without(*self.names)

    def to_map(self, table: VariableTable, w: str = "w") -> MonomialMap:
        target = table.without(*self.names).extend(w)
        images = {n: LaurentPolynomial.var(target, w, s) for n, s in self.assignments if n in table}
        return MonomialMap(table, target, images)

    def __str__(self) -> str:
        return ",".join(f"{n}={s}" for n, s in self.assignments)

    @classmethod
    def parse(cls, text: str) -> "Cocharacter":
        out = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            name, _, val = part.partition("=")
            try:
                out[name.strip()] = int(val)
            except ValueError:
                raise AlgebraError(f"bad cocharacter entry {part!r}; expected name=int") from None
        return cls.of(out)


class _Projector:
    def __init__(self, table: VariableTable, sigma: Cocharacter):
        self.weights = sigma.weights(table)
        self.target = sigma.target_table(table)
        self.keep = [i for i, n in enumerate(table.names) if n in self.target]

    def val(self, e: Exps) -> int:
        return sum(x * s for x, s in zip(e, self.weights) if s)

    def proj(self, e: Exps) -> Exps:
        return tuple(e[i] for i in self.keep)


def _lowest_slice(p: LaurentPolynomial, pr: _Projector) -> Tuple[int, LaurentPolynomial]:
    vals: Dict[int, Dict[Exps, object]] = {}
    for e, c in p.terms.items():
        v = pr.val(e)
        d = vals.setdefault(v, {})
        k = pr.proj(e)
        d[k] = d.get(k, 0) + c
    for v in sorted(vals):
        sl = LaurentPolynomial(pr.target, vals[v])
        if not sl.is_zero():
            return v, sl
    raise AlgebraError("slice vanishes identically")


def _factored_lowest(f: Factored, pr: _Projector) -> Tuple[int, int, Factored]:
    """(w-valuation, zero order, lowest slice) of a factored value.

    The zero order counts binomials whose lowest slice is ``1 - 1``; a
    positive count means the value vanishes, a negative one is a pole.
    """
    val = pr.val(f.mono)
    coeff = f.coeff
    mono = list(pr.proj(f.mono))
    facs: Dict[Exps, int] = {}
    zero_order = 0
    for k, e in f.factors.items():
        v = pr.val(k)
        if v > 0:
            continue
        pk = pr.proj(k)
        if v < 0:
            val += v * e
            if e & 1:
                coeff = -coeff
            for i, x in enumerate(pk):
                mono[i] += x * e
            continue
        if not any(pk):
            zero_order += e
            continue
        key, sign, unit = canonical_key(pk)
        if sign < 0:
            if e & 1:
                coeff = -coeff
            for i, u in enumerate(unit):
                mono[i] += u * e
        facs[key] = facs.get(key, 0) + e
    return val, zero_order, Factored(pr.target, coeff, tuple(mono), facs)


def limit_factored(f: Factored, sigma: Cocharacter) -> Optional[Factored]:
    """Limit of a factored value as w -> 0; None when the limit is 0."""
    val, zero_order, lead = _factored_lowest(f, _Projector(f.table, sigma))
    if zero_order > 0:
        return None
    if zero_order < 0:
        raise PoleError("a binomial in the denominator vanishes in the limit")
    if val > 0:
        return None
    if val < 0:
        raise PoleError(f"pole of order {-val} at w = 0")
    return lead


def limit_at_zero(f: RationalFunction, sigma: Cocharacter) -> RationalFunction:
    """``lim_{w->0} f(a -> w^sigma)``, comparing lowest w-valuations of top and bottom."""
    pr = _Projector(f.table, sigma)
    if f.is_zero():
        return RationalFunction.zero(pr.target)
    v_num, s_num = _lowest_slice(f.num, pr)
    if f.den_factors is not None:
        v_den, zero_order, s_den = _factored_lowest(f.den_factors, pr)
        if zero_order:
            raise PoleError("lowest denominator slice is identically zero after substitution")
    else:
        v_den, s_den = _lowest_slice(f.den, pr)
    if v_num > v_den:
        return RationalFunction.zero(pr.target)
    if v_num < v_den:
        raise PoleError(f"pole of order {v_den - v_num} at w = 0")
    if isinstance(s_den, Factored):
        return RationalFunction.from_factored_denominator(s_num, s_den)
    return RationalFunction(s_num, s_den)
