"""Characters of torus modules: finite integer combinations of Laurent monomials."""
from __future__ import annotations

from operator import add
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from ..algebra import AlgebraError, LaurentPolynomial, MonomialMap, VariableTable
from ..algebra.laurent import Exps
from ..algebra.textform import format_polynomial, parse_polynomial


class Character:
    """``sum_m c_m * m`` with integer multiplicities; zero multiplicities are dropped."""

    __slots__ = ("table", "weights")

    def __init__(self, table: VariableTable, weights: Mapping[Exps, int] | None = None):
        self.table = table
        clean: Dict[Exps, int] = {}
        for e, c in (weights or {}).items():
            if not isinstance(c, int):
                raise AlgebraError(f"character multiplicity {c!r} is not an integer")
            e = tuple(e)
            if len(e) != len(table):
                raise AlgebraError("weight has wrong length for table")
            v = clean.get(e, 0) + c
            if v:
                clean[e] = v
            else:
                clean.pop(e, None)
        self.weights = clean

    @classmethod
    def zero(cls, table: VariableTable) -> "Character":
        return cls(table)

    @classmethod
    def from_monomials(cls, table: VariableTable, monomials: Iterable[Sequence[int]], mult: int = 1) -> "Character":
        out: Dict[Exps, int] = {}
        for m in monomials:
            m = tuple(m)
            out[m] = out.get(m, 0) + mult
        return cls(table, out)

    @classmethod
    def from_polynomial(cls, p: LaurentPolynomial) -> "Character":
        for c in p.terms.values():
            if not isinstance(c, int):
                raise AlgebraError("characters need integer coefficients")
        return cls(p.table, dict(p.terms))

    @classmethod
    def parse(cls, text: str, table: VariableTable) -> "Character":
        return cls.from_polynomial(parse_polynomial(text, table))

    def to_polynomial(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.table, dict(self.weights))

    def __iter__(self) -> Iterator[Tuple[Exps, int]]:
        return iter(sorted(self.weights.items()))

    def __len__(self) -> int:
        return len(self.weights)

    def dimension(self) -> int:
        """Signed sum of multiplicities (the virtual dimension)."""
        return sum(self.weights.values())

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.weights.values())

    def _check(self, other: "Character") -> None:
        if self.table != other.table:
            raise AlgebraError("characters over different tables")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self.weights)
        for e, c in other.weights.items():
            out[e] = out.get(e, 0) + c
        return Character(self.table, out)

    def __neg__(self) -> "Character":
        return Character(self.table, {e: -c for e, c in self.weights.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other: "Character") -> "Character":
        self._check(other)
        out: Dict[Exps, int] = {}
        for e1, c1 in self.weights.items():
            for e2, c2 in other.weights.items():
                e = tuple(map(add, e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Character(self.table, out)

    def dual(self) -> "Character":
        return Character(self.table, {tuple(-x for x in e): c for e, c in self.weights.items()})

    def shift(self, exps: Sequence[int]) -> "Character":
        """Multiply every weight by the monomial ``x^exps``."""
        exps = tuple(exps)
        return Character(self.table, {tuple(map(add, e, exps)): c for e, c in self.weights.items()})

    def times_var(self, name: str, power: int = 1) -> "Character":
        return self.shift(self.table.unit_exps(name, power))

    def substitute(self, m: MonomialMap) -> "Character":
        out: Dict[Exps, int] = {}
        for e, c in self.weights.items():
            k = m.map_exps(e)
            out[k] = out.get(k, 0) + c
        return Character(m.target, out)

    def expanded(self) -> list:
        """Weights repeated by multiplicity (effective characters only)."""
        if not self.is_effective():
            raise AlgebraError("character has negative multiplicities")
        return [e for e, c in sorted(self.weights.items()) for _ in range(c)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.table == other.table and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.table, frozenset(self.weights.items())))

    def text(self) -> str:
        return format_polynomial(self.to_polynomial())

    __str__ = text

    def __repr__(self) -> str:
        return f"Character({self.text()!r})"
