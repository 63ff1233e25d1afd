"""Normalized vertex functions of quiver varieties and their chamber limits.

A degree tuple ``D = (d_{i,j})`` shifts every Grothendieck root
``x_{i,j} -> x_{i,j}(p) q^{d_{i,j}}``.  Against the normalization, a
polarization weight ``m`` of multiplicity ``c`` then contributes
``[(hbar m(p))_k / (q m(p))_k]^c`` with ``k = <D, m>``, and the tuple
contributes ``z^{sum d}``.
"""
from __future__ import annotations

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .algebra import (
    Cocharacter,
    Factored,
    LaurentPolynomial,
    PoleError,
    RationalFunction,
    TruncatedSeries,
    VariableTable,
    limit_at_zero,
    limit_factored,
    sum_factored,
)
from .algebra.laurent import Exps
from .algebra.textform import format_monomial
from .geometry import FixedPointData, QuiverData, SubsetPoint, specialize_polarization
from .geometry.character import Character
from .geometry.partitions import Partition
from .qseries import CollisionError, pochhammer_product, xi_product

log = logging.getLogger(__name__)

Tuple_ = Tuple[int, ...]


@dataclass(frozen=True)
class _Weight:
    roots: Tuple[Tuple[int, int], ...]  # (flat root index, exponent)
    at_point: Exps  # restriction m(p) over the quiver table
    mult: int


@dataclass(frozen=True, eq=False)
class VertexInstance:
    quiver: QuiverData
    point: FixedPointData
    kaehler_vars: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.point.table != self.quiver.table:
            raise ValueError("fixed-point data and quiver use different tables")
        for i in self.quiver.vertices:
            got = len(self.point.monomials(i))
            if got != self.quiver.dim(i):
                raise ValueError(f"vertex {i}: {got} restrictions for dim V = {self.quiver.dim(i)}")
        if not self.kaehler_vars:
            zs = ("z",) if len(self.quiver.vertices) == 1 else tuple(f"z{i}" for i in self.quiver.vertices)
            object.__setattr__(self, "kaehler_vars", zs)
        if len(self.kaehler_vars) != len(self.quiver.vertices):
            raise ValueError("need one Kaehler variable per vertex")

    @property
    def table(self) -> VariableTable:
        return self.quiver.table

    @cached_property
    def weights(self) -> Tuple[_Weight, ...]:
        sym_table, pol = specialize_polarization(self.quiver)
        n_roots = len(self.quiver.root_names())
        roots_at_p: List[Exps] = [m for i in self.quiver.vertices for m in self.point.monomials(i)]
        out = []
        for e, c in pol:
            r = tuple((j, x) for j, x in enumerate(e[:n_roots]) if x)
            at = list(e[n_roots:])
            for j, x in r:
                for t, y in enumerate(roots_at_p[j]):
                    at[t] += x * y
            out.append(_Weight(r, tuple(at), c))
        return tuple(out)

    def __getstate__(self):
        return {"quiver": self.quiver, "point": self.point, "kaehler_vars": self.kaehler_vars}

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)


def _hbar_q(table: VariableTable) -> Tuple[Exps, Exps]:
    return table.unit_exps("h", 2), table.unit_exps("q")


def _add(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def coefficient_factored(inst: VertexInstance, D: Sequence[int]) -> Optional[Factored]:
    """Contribution of one degree tuple (flattened over vertices); None if it vanishes."""
    D = tuple(D)
    if len(D) != len(inst.quiver.root_names()) or min(D, default=0) < 0:
        raise ValueError(f"degree tuple {D} does not match the dimension vector")
    hb, q = _hbar_q(inst.table)
    items = []
    for w in inst.weights:
        k = sum(D[j] * x for j, x in w.roots)
        if k:
            items.append((_add(hb, w.at_point), k, w.mult))
            items.append((_add(q, w.at_point), k, -w.mult))
    try:
        return pochhammer_product(inst.table, items)
    except CollisionError as exc:
        names = inst.table.names
        where = ", ".join(f"({format_monomial(names, x) or '1'})_{k}" for x, k, _ in exc.offenders)
        raise CollisionError(f"non-generic collision at degree tuple {D}: {exc}: {where}", exc.offenders) from None


def vertex_coefficient(inst: VertexInstance, D: Sequence[int]) -> RationalFunction:
    f = coefficient_factored(inst, D)
    return RationalFunction.zero(inst.table) if f is None else f.to_rational()


def compositions(d: int, parts: int) -> Iterator[Tuple_]:
    """Weak compositions of d into ``parts`` nonnegative parts, lexicographically descending."""
    if parts == 0:
        if d == 0:
            yield ()
        return
    if parts == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for tail in compositions(d - first, parts - 1):
            yield (first,) + tail


def degree_tuples(inst: VertexInstance, order: int) -> Iterator[Tuple[Tuple_, Tuple_]]:
    """``(kaehler degree vector, flattened tuple)`` for every tuple with total degree <= order."""
    dims = [inst.quiver.dim(i) for i in inst.quiver.vertices]
    nv = len(dims)
    for total in range(order + 1):
        for kd in compositions(total, nv) if nv else ([()] if total == 0 else []):
            # a vertex with dim V = 0 only carries degree 0
            if any(d and not v for d, v in zip(kd, dims)):
                continue
            for parts in iproduct(*(compositions(d, v) for d, v in zip(kd, dims))):
                yield kd, tuple(x for p in parts for x in p)


def _eval_chunk(args):
    inst, tuples = args
    return [coefficient_factored(inst, D) for D in tuples]


def _evaluate(inst: VertexInstance, tuples: List[Tuple_], jobs: int, progress: bool) -> List[Optional[Factored]]:
    if jobs <= 1 or len(tuples) < 2 * jobs:
        out = []
        for n, D in enumerate(tuples, 1):
            out.append(coefficient_factored(inst, D))
            if progress and (n % 50 == 0 or n == len(tuples)):
                print(f"tuples evaluated: {n}/{len(tuples)}", file=sys.stderr)
        return out
    size = max(1, len(tuples) // (4 * jobs))
    chunks = [tuples[i : i + size] for i in range(0, len(tuples), size)]
    out: List[Optional[Factored]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_eval_chunk, [(inst, c) for c in chunks]):
            out.extend(res)
            if progress:
                print(f"tuples evaluated: {len(out)}/{len(tuples)}", file=sys.stderr)
    return out


def vertex_terms(inst: VertexInstance, order: int, jobs: int = 1, progress: bool = False) -> Dict[Tuple_, List[Factored]]:
    """Nonzero factored contributions grouped by Kaehler degree, in enumeration order."""
    pairs = list(degree_tuples(inst, order))
    values = _evaluate(inst, [D for _, D in pairs], jobs, progress)
    grouped: Dict[Tuple_, List[Factored]] = {}
    for (kd, _), f in zip(pairs, values):
        grouped.setdefault(kd, [])
        if f is not None:
            grouped[kd].append(f)
    return grouped


def vertex_series(inst: VertexInstance, order: int, jobs: int = 1, progress: bool = False) -> TruncatedSeries:
    """``V_p(a, z)`` truncated at total Kaehler degree ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    grouped = vertex_terms(inst, order, jobs, progress)
    coeffs = {kd: sum_factored(fs, inst.table) for kd, fs in grouped.items()}
    return TruncatedSeries(inst.table, inst.kaehler_vars, order, coeffs)


def chamber_limit_series(s: TruncatedSeries, sigma: Cocharacter) -> TruncatedSeries:
    """Coefficientwise ``lim_{w->0}`` along ``sigma``; poles propagate as PoleError."""
    target = sigma.target_table(s.table)
    out = {}
    for d, c in s.coeffs.items():
        try:
            out[d] = limit_at_zero(c, sigma)
        except PoleError as exc:
            raise PoleError(f"coefficient of degree {d}: {exc}") from None
    return TruncatedSeries(target, s.series_vars, s.order, out)


def _limit_by_substitution(terms: List[Factored], sigma: Cocharacter) -> RationalFunction:
    m = sigma.to_map(terms[0].table)
    summed = sum_factored([m.apply_factored(t) for t in terms], m.target)
    return limit_at_zero(summed, Cocharacter.of({"w": 1}))


def limit_of_terms(
    grouped: Dict[Tuple_, List[Factored]], sigma: Cocharacter, series_vars: Sequence[str], order: int, method: str = "termwise"
) -> TruncatedSeries:
    """Chamber limit of ``sum_d (sum of grouped[d]) z^d`` from its summands.

    ``termwise`` takes the limit of each summand and sums the limits, which
    is exact whenever every summand has a finite limit; a degree where some
    summand has a pole falls back to ``substituted``.  ``substituted``
    specializes ``a -> w^sigma`` in every summand, sums over Q(w, q, h) and
    then takes the valuation limit.
    """
    if method not in ("termwise", "substituted"):
        raise ValueError(f"unknown limit method {method!r}")
    terms_table = next((t[0].table for t in grouped.values() if t), None)
    if terms_table is None:
        raise ValueError("no summands to take the limit of")
    target = sigma.target_table(terms_table)
    coeffs = {}
    for kd, terms in grouped.items():
        if not terms:
            continue
        if method == "termwise":
            try:
                lims = [limit_factored(t, sigma) for t in terms]
            except PoleError:
                log.info("degree %s: summand with a pole, summing before the limit", kd)
                coeffs[kd] = _limit_by_substitution(terms, sigma)
                continue
            coeffs[kd] = sum_factored([x for x in lims if x is not None], target)
        else:
            coeffs[kd] = _limit_by_substitution(terms, sigma)
    return TruncatedSeries(target, series_vars, order, coeffs)


def limit_vertex_series(
    inst: VertexInstance,
    sigma: Cocharacter,
    order: int,
    method: str = "termwise",
    jobs: int = 1,
    progress: bool = False,
) -> TruncatedSeries:
    """``V_p(0_C, z)`` computed from the summands of the vertex series (see ``limit_of_terms``)."""
    grouped = vertex_terms(inst, order, jobs, progress)
    return limit_of_terms(grouped, sigma, inst.kaehler_vars, order, method)


# ---------------------------------------------------------------------------
# instances


def hilbert_instance(lam: Partition) -> VertexInstance:
    from .geometry.hilbert import hilb_fixed_point, jordan_quiver

    return VertexInstance(jordan_quiver(lam.size), hilb_fixed_point(lam))


def grassmannian_instance(p: SubsetPoint) -> VertexInstance:
    from .geometry.grassmannian import gr_fixed_point, grassmannian_quiver

    return VertexInstance(grassmannian_quiver(p.k, p.n), gr_fixed_point(p))


def hilbert_chamber(positive: bool = True) -> Cocharacter:
    """C+ sends a -> 0, C- sends a -> infinity."""
    return Cocharacter.of({"a": 1 if positive else -1})


def grassmannian_chamber(n: int) -> Cocharacter:
    """``a_i -> w^-i``, i.e. ``a_i / a_j -> 0`` for ``i < j``."""
    return Cocharacter.of({f"a{i}": -i for i in range(1, n + 1)})


def gr_limit_exponents(p: SubsetPoint) -> List[int]:
    """``n - k - p_i + 2i - 1`` for i = 1..k."""
    return [p.n - p.k - pi + 2 * i - 1 for i, pi in enumerate(p.elements, 1)]


LIMIT_TABLE = VariableTable(["q", "h"])


def gr_limit_closed_form(p: SubsetPoint, order: int) -> TruncatedSeries:
    """``prod_i xi(hbar, (hbar/q)^(n-k-p_i+2i-1) z)``."""
    full = VariableTable(["q", "h", "z"])
    N = Character(full, {})
    for e in gr_limit_exponents(p):
        N = N + Character(full, {(-e, 2 * e, 1): 1})
    hbar = RationalFunction(LaurentPolynomial.var(LIMIT_TABLE, "h", 2))
    return xi_product(hbar, N, order, "z")


# ---------------------------------------------------------------------------
# summands transcribed directly from the explicit formulas (independent of
# the polarization machinery; used as oracles)


def hilbert_summand(lam: Partition, D: Sequence[int]) -> Optional[Factored]:
    """``prod_i (hbar x_i)_{d_i}/(q x_i)_{d_i} * prod_{i,j} (hbar t1 x_i/x_j)_{d_i-d_j}
    (q x_i/x_j)_{d_i-d_j} / ((q t1 x_i/x_j)_{d_i-d_j} (hbar x_i/x_j)_{d_i-d_j})``."""
    from .geometry.hilbert import TABLE, hilb_fixed_point

    xs = hilb_fixed_point(lam).monomials("1")
    n = len(xs)
    hb, q = _hbar_q(TABLE)
    t1 = (0, -1, 1)
    items = []
    for i in range(n):
        items.append((_add(hb, xs[i]), D[i], 1))
        items.append((_add(q, xs[i]), D[i], -1))
    for i in range(n):
        for j in range(n):
            k = D[i] - D[j]
            ratio = tuple(a - b for a, b in zip(xs[i], xs[j]))
            items.append((_add(_add(hb, t1), ratio), k, 1))
            items.append((_add(_add(q, t1), ratio), k, -1))
            items.append((_add(q, ratio), k, 1))
            items.append((_add(hb, ratio), k, -1))
    return pochhammer_product(TABLE, items)


def grassmannian_summand(p: SubsetPoint, D: Sequence[int]) -> Optional[Factored]:
    """``prod_{i<=n, j<=k} (hbar a_i/a_{p_j})_{d_j}/(q a_i/a_{p_j})_{d_j}
    * prod_{i,j<=k} (q a_{p_j}/a_{p_i})_{d_i-d_j}/(hbar a_{p_j}/a_{p_i})_{d_i-d_j}``."""
    from .geometry.grassmannian import table

    T = table(p.n)
    hb, q = _hbar_q(T)

    def ratio(top: int, bottom: int) -> Exps:
        return _add(T.unit_exps(f"a{top}"), T.unit_exps(f"a{bottom}", -1))

    items = []
    for i in range(1, p.n + 1):
        for j, pj in enumerate(p.elements):
            items.append((_add(hb, ratio(i, pj)), D[j], 1))
            items.append((_add(q, ratio(i, pj)), D[j], -1))
    for i, pi in enumerate(p.elements):
        for j, pj in enumerate(p.elements):
            k = D[i] - D[j]
            if pi == pj:
                continue
            items.append((_add(q, ratio(pj, pi)), k, 1))
            items.append((_add(hb, ratio(pj, pi)), k, -1))
    return pochhammer_product(T, items)


def direct_terms(summand: Callable[[Sequence[int]], Optional[Factored]], roots: int, order: int) -> Dict[Tuple_, List[Factored]]:
    return {(d,): [f for D in compositions(d, roots) if (f := summand(D)) is not None] for d in range(order + 1)}


def direct_series(summand: Callable[[Sequence[int]], Optional[Factored]], roots: int, table: VariableTable, order: int) -> TruncatedSeries:
    coeffs = {d: sum_factored(terms, table) for d, terms in direct_terms(summand, roots, order).items()}
    return TruncatedSeries(table, ("z",), order, coeffs)
