"""Quiver data, fixed-point restrictions of Grothendieck roots, and the polarization."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra import AlgebraError, LaurentPolynomial, MonomialMap, VariableTable
from ..algebra.laurent import Exps
from .character import Character


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    twist: Optional[Exps] = None  # extra torus weight carried by the arrow (e.g. t1 on the Jordan loop)


@dataclass(frozen=True, eq=False)
class QuiverData:
    """Vertices, oriented arrows (loops allowed), dimension vectors and framing characters.

    ``table`` holds the coefficient variables; it must contain ``q`` and the
    generator ``h`` with hbar = h^2.  ``framing[i]`` lists the torus
    characters of ``W_i`` (length ``w[i]``), trivial by default.
    """

    table: VariableTable
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    v: Mapping[str, int]
    w: Mapping[str, int]
    framing: Mapping[str, Tuple[Exps, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("q", "h"):
            if name not in self.table:
                raise AlgebraError(f"quiver table must contain {name!r}")
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex labels")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise AlgebraError(f"arrow {a.source}->{a.target} references an unknown vertex")
        for i in self.vertices:
            if self.v.get(i, 0) < 0 or self.w.get(i, 0) < 0:
                raise AlgebraError(f"negative dimension at vertex {i}")
        fr = {}
        for i in self.vertices:
            given = tuple(tuple(e) for e in self.framing.get(i, ()))
            wi = self.w.get(i, 0)
            if not given:
                given = (self.table.zero_exps(),) * wi
            if len(given) != wi:
                raise AlgebraError(f"vertex {i}: {len(given)} framing characters for w = {wi}")
            fr[i] = given
        object.__setattr__(self, "framing", fr)

    def dim(self, i: str) -> int:
        return self.v.get(i, 0)

    def root_names(self) -> List[str]:
        return [root_name(i, j) for i in self.vertices for j in range(1, self.dim(i) + 1)]

    def framing_names(self) -> List[str]:
        return [f"u{i}_{m}" for i in self.vertices for m in range(1, self.w.get(i, 0) + 1)]

    def twist_names(self) -> List[str]:
        return [f"t{k}" for k, a in enumerate(self.arrows, 1) if a.twist is not None]


def root_name(vertex: str, j: int) -> str:
    return f"x{vertex}_{j}"


@dataclass(frozen=True, eq=False)
class FixedPointData:
    """``x_{i,j}(p)``: one monomial over ``table`` per Grothendieck root."""

    table: VariableTable
    restrictions: Mapping[str, Tuple[Exps, ...]]

    def monomials(self, vertex: str) -> Tuple[Exps, ...]:
        return tuple(self.restrictions.get(vertex, ()))

    def permuted(self, vertex: str, order: Sequence[int]) -> "FixedPointData":
        r = dict(self.restrictions)
        cur = r[vertex]
        r[vertex] = tuple(cur[i] for i in order)
        return FixedPointData(self.table, r)

    def text(self) -> str:
        from ..algebra.textform import format_monomial

        out = []
        for i, ms in self.restrictions.items():
            out.append(f"{i}: " + ", ".join(format_monomial(self.table.names, m) or "1" for m in ms))
        return "; ".join(out)


def symbolic_table(quiver: QuiverData) -> VariableTable:
    return VariableTable(quiver.root_names() + quiver.framing_names() + quiver.twist_names())


def polarization(quiver: QuiverData) -> Character:
    """Expanded polarization in root, framing-root and arrow-twist symbols.

    ``sum_{i->j} t (sum x_i^-1)(sum x_j) + sum_i (sum u_i^-1)(sum x_i) - sum_i (sum x_i^-1)(sum x_i)``
    """
    S = symbolic_table(quiver)
    out: Dict[Exps, int] = {}
    idx = {n: S.index(n) for n in S.names}
    width = len(S)

    def bump(pairs, c):
        e = [0] * width
        for name, p in pairs:
            e[idx[name]] += p
        e = tuple(e)
        out[e] = out.get(e, 0) + c

    roots = {i: [root_name(i, j) for j in range(1, quiver.dim(i) + 1)] for i in quiver.vertices}
    for k, a in enumerate(quiver.arrows, 1):
        tw = [(f"t{k}", 1)] if a.twist is not None else []
        for xi in roots[a.source]:
            for xj in roots[a.target]:
                bump([(xi, -1), (xj, 1)] + tw, 1)
    for i in quiver.vertices:
        for m in range(1, quiver.w.get(i, 0) + 1):
            for xj in roots[i]:
                bump([(f"u{i}_{m}", -1), (xj, 1)], 1)
        for xa in roots[i]:
            for xb in roots[i]:
                bump([(xa, -1), (xb, 1)], -1)
    return Character(S, out)


def specialize_polarization(quiver: QuiverData) -> Tuple[VariableTable, Character]:
    """Polarization with framing roots and twists replaced by their torus characters.

    The result lives over ``roots + quiver.table``.
    """
    S = symbolic_table(quiver)
    target = VariableTable(quiver.root_names() + list(quiver.table.names))
    images = {}
    for i in quiver.vertices:
        for m, ch in enumerate(quiver.framing[i], 1):
            images[f"u{i}_{m}"] = LaurentPolynomial.monomial(target, _lift(ch, quiver.table, target))
    for k, a in enumerate(quiver.arrows, 1):
        if a.twist is not None:
            images[f"t{k}"] = LaurentPolynomial.monomial(target, _lift(a.twist, quiver.table, target))
    return target, polarization(quiver).substitute(MonomialMap(S, target, images))


def _lift(e: Exps, src: VariableTable, dst: VariableTable) -> Exps:
    out = [0] * len(dst)
    for name, x in zip(src.names, e):
        out[dst.index(name)] += x
    return tuple(out)
