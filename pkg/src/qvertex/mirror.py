"""3d-mirror substitution and the comparison of limited vertex functions with q-binomial products."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import (
    Cocharacter,
    LaurentPolynomial,
    MonomialMap,
    RationalFunction,
    TruncatedSeries,
    VariableTable,
)
from .algebra.textform import format_monomial, format_polynomial
from .geometry import SubsetPoint
from .geometry.character import Character
from .geometry.grassmannian import gr_dual_attracting_split, gr_nn_character
from .geometry.hilbert import DUAL_TABLE, TO_DUAL, hilb_attracting_split
from .geometry.partitions import Partition
from .qseries import xi_product
from .vertex import (
    LIMIT_TABLE,
    VertexInstance,
    grassmannian_chamber,
    grassmannian_instance,
    hilbert_chamber,
    hilbert_instance,
    limit_vertex_series,
)

DUAL_SERIES_VAR = "ap"
DUAL_COEFF_TABLE = DUAL_TABLE.without(DUAL_SERIES_VAR)


class ExpansionError(ValueError):
    pass


@dataclass(frozen=True)
class MirrorMap:
    """``hbar -> q/hbar'`` on the coefficients and ``z_i -> a'^r hbar'^s`` on the Kaehler variables.

    ``z_images`` holds, per Kaehler variable, the exponents of ``(ap, hp)``;
    the hbar' power is ``hp`` exponent / 2.
    """

    coefficients: MonomialMap
    z_images: Dict[str, Tuple[int, int]]

    @classmethod
    def standard(cls, z_images: Dict[str, Tuple[int, int]], source: VariableTable = LIMIT_TABLE) -> "MirrorMap":
        m = MonomialMap(source, DUAL_COEFF_TABLE, {"h": "q*hp^-2"}, roots={"h": 2})
        return cls(m, dict(z_images))

    def __str__(self) -> str:
        zs = ", ".join(
            f"{z} -> {format_monomial(('hp', 'ap'), (hp, ap))}" for z, (ap, hp) in sorted(self.z_images.items())
        )
        return f"hbar -> q/hbar', {zs}"


def hilbert_mirror() -> MirrorMap:
    """``z -> a' sqrt(hbar')``."""
    return MirrorMap.standard({"z": (1, 1)})


def grassmannian_mirror(k: int) -> MirrorMap:
    """``z -> a' hbar'^(k-1)``."""
    return MirrorMap.standard({"z": (1, 2 * (k - 1))})


def kappa_pullback(s: TruncatedSeries, m: MirrorMap, order: int) -> TruncatedSeries:
    """Apply ``m`` to every coefficient and regrade by the a'-degree of the z-images."""
    missing = [z for z in s.series_vars if z not in m.z_images]
    if missing:
        raise ExpansionError(f"no image for Kaehler variable(s) {missing}")
    grades = [m.z_images[z] for z in s.series_vars]
    if any(r <= 0 for r, _ in grades):
        raise ExpansionError("every Kaehler image needs positive a'-degree")
    hp = DUAL_COEFF_TABLE.index("hp")
    out: Dict[Tuple[int, ...], RationalFunction] = {}
    for d, c in s.coeffs.items():
        deg = sum(x * r for x, (r, _) in zip(d, grades))
        if deg > order:
            continue
        shift = [0] * len(DUAL_COEFF_TABLE)
        shift[hp] = sum(x * e for x, (_, e) in zip(d, grades))
        mono = RationalFunction(LaurentPolynomial.monomial(DUAL_COEFF_TABLE, tuple(shift)))
        term = m.coefficients.apply(c) * mono
        key = (deg,)
        out[key] = out[key] + term if key in out else term
    return TruncatedSeries(DUAL_COEFF_TABLE, (DUAL_SERIES_VAR,), order, out)


def kernel_base() -> RationalFunction:
    """``q / hbar'``."""
    return RationalFunction(LaurentPolynomial.monomial(DUAL_COEFF_TABLE, (1, -2)))


def conjecture_rhs(Nminus: Character, order: int) -> TruncatedSeries:
    """``Xi(q/hbar', (N-)*)`` expanded in ``a'``."""
    if Nminus.table != DUAL_TABLE:
        raise ExpansionError("N- must be a character over (q, hp, ap)")
    ap = DUAL_TABLE.index(DUAL_SERIES_VAR)
    for e, _ in Nminus.dual():
        if e[ap] <= 0:
            raise ExpansionError(f"weight {format_monomial(DUAL_TABLE.names, e)} of (N-)* has nonpositive a'-degree")
    return xi_product(kernel_base(), Nminus.dual(), order, DUAL_SERIES_VAR)


@dataclass(frozen=True)
class MirrorCase:
    instance_label: str
    point_label: str
    inst: VertexInstance
    chamber: Cocharacter
    mirror: MirrorMap
    dual_minus: Character  # N- at the dual fixed point, over DUAL_TABLE


def hilbert_case(lam: Partition) -> MirrorCase:
    _, minus = hilb_attracting_split(lam)
    return MirrorCase(
        f"hilbert n={lam.size}", lam.text(), hilbert_instance(lam), hilbert_chamber(), hilbert_mirror(), minus.substitute(TO_DUAL)
    )


def grassmannian_case(p: SubsetPoint) -> MirrorCase:
    _, minus = gr_dual_attracting_split(p)
    return MirrorCase(
        f"grassmannian k={p.k} n={p.n}",
        p.text(),
        grassmannian_instance(p),
        grassmannian_chamber(p.n),
        grassmannian_mirror(p.k),
        minus,
    )


def perturb_first_weight(Nminus: Character) -> Character:
    """Multiply one weight of ``(N-)*`` of lowest a'-degree by hbar' (divide the N- weight by it)."""
    ap = DUAL_TABLE.index(DUAL_SERIES_VAR)
    items = sorted(Nminus, key=lambda ec: (-ec[0][ap], ec[0]))
    if not items:
        raise ExpansionError("nothing to perturb in an empty character")
    (e, c), rest = items[0], items[1:]
    weights: Dict[Tuple[int, ...], int] = {}
    for x, m in rest:
        weights[x] = weights.get(x, 0) + m
    hp = DUAL_TABLE.index("hp")
    moved = list(e)
    moved[hp] -= 2
    if c > 1:
        weights[e] = weights.get(e, 0) + c - 1
    weights[tuple(moved)] = weights.get(tuple(moved), 0) + 1
    return Character(DUAL_TABLE, weights)


def _render(c: RationalFunction) -> Dict[str, str]:
    return c.num_den_text()


@dataclass
class ConjectureReport:
    instance: str
    fixed_point: str
    order: int
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    rhs_factors: int
    mirror: str
    records: List[Tuple[int, bool]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.records)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def mismatch_degrees(self) -> List[int]:
        return [d for d, ok in self.records if not ok]

    @property
    def first_mismatch(self) -> Optional[int]:
        bad = self.mismatch_degrees()
        return bad[0] if bad else None

    def to_json(self) -> dict:
        mism = [
            {"degree": d, "lhs": _render(self.lhs.coefficient(d)), "rhs": _render(self.rhs.coefficient(d))}
            for d in self.mismatch_degrees()
        ]
        return {
            "instance": self.instance,
            "fixed_point": self.fixed_point,
            "order": self.order,
            "mirror_map": self.mirror,
            "rhs_factors": self.rhs_factors,
            "series": series_records(self.lhs),
            "verdict": self.verdict,
            "mismatches": mism,
        }

    def text(self) -> str:
        lines = [
            f"instance: {self.instance}",
            f"fixed point: {self.fixed_point}",
            f"mirror map: {self.mirror}",
            f"order: {self.order}",
            f"q-binomial factors: {self.rhs_factors}",
        ]
        for d, ok in self.records:
            lines.append(f"  a'^{d}: {'equal' if ok else 'DIFFERENT'}")
        if self.first_mismatch is not None:
            d = self.first_mismatch
            lines.append(f"first mismatch at a'-degree {d}:")
            lines.append(f"  lhs = {pretty_rational(self.lhs.coefficient(d))}")
            lines.append(f"  rhs = {pretty_rational(self.rhs.coefficient(d))}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def series_records(s: TruncatedSeries) -> List[dict]:
    """``[{"degree", "coefficient": {"num", "den"}}]`` for a one-variable series, zero terms omitted."""
    out = []
    for d in s.degrees():
        c = s.coefficient(d)
        if c.is_zero():
            continue
        out.append({"degree": sum(d), "coefficient": _render(c)})
    return out


def compare(lhs: TruncatedSeries, rhs: TruncatedSeries, order: int) -> List[Tuple[int, bool]]:
    return [(d, lhs.coefficient((d,)) == rhs.coefficient((d,))) for d in range(order + 1)]


def verify_case(case: MirrorCase, order: int, perturb: bool = False, jobs: int = 1, progress: bool = False) -> ConjectureReport:
    if order < 1:
        raise ValueError("verification needs order >= 1")
    t0 = time.perf_counter()
    try:
        limit = limit_vertex_series(case.inst, case.chamber, order, jobs=jobs, progress=progress)
        lhs = kappa_pullback(limit, case.mirror, order)
    except Exception as exc:
        raise type(exc)(f"lhs: {exc}") from exc
    minus = perturb_first_weight(case.dual_minus) if perturb else case.dual_minus
    try:
        rhs = conjecture_rhs(minus, order)
    except Exception as exc:
        raise type(exc)(f"rhs: {exc}") from exc
    report = ConjectureReport(
        case.instance_label, case.point_label, order, lhs, rhs, minus.dimension(), str(case.mirror)
    )
    report.records = compare(lhs, rhs, order)
    report.seconds = time.perf_counter() - t0
    return report


def verify_conjecture(inst, fixed_point, chamber: Optional[Cocharacter], order: int, **kw) -> ConjectureReport:
    """``inst`` is ``"hilbert"`` (fixed point a Partition) or ``"grassmannian"`` (a SubsetPoint)."""
    if inst == "hilbert":
        case = hilbert_case(fixed_point)
    elif inst == "grassmannian":
        case = grassmannian_case(fixed_point)
    else:
        raise ValueError(f"unknown instance {inst!r}")
    if chamber is not None:
        case = MirrorCase(case.instance_label, case.point_label, case.inst, chamber, case.mirror, case.dual_minus)
    return verify_case(case, order, **kw)


# ---------------------------------------------------------------------------
# reading weights back from a product of q-binomial series


def extract_xi_weights(s: TruncatedSeries, b: RationalFunction) -> Optional[Character]:
    """Weights ``w`` (over DUAL_TABLE) with ``s = prod xi(b, w)`` to the order of ``s``, or None.

    Degree by degree: after dividing out the weights found so far (using
    ``1/xi(b, w) = xi(1/b, b w)``) the lowest surviving coefficient is
    ``(1-b)/(1-q)`` times the sum of the weights of that degree.
    """
    if s.series_vars != (DUAL_SERIES_VAR,) or s.table != DUAL_COEFF_TABLE:
        raise ExpansionError("expected a series in a' over (q, hp)")
    q = RationalFunction(LaurentPolynomial.var(DUAL_COEFF_TABLE, "q"))
    scale = (1 - q) / (1 - b)
    b_exps = b.num.single_term()
    if b_exps is None or not b.den.is_constant():
        raise ExpansionError("kernel base must be a monomial")
    b_exps = b_exps[0] + (0,)
    found = Character(DUAL_TABLE, {})
    for d in range(1, s.order + 1):
        if found.dimension():
            undo = xi_product(1 / b, found.shift(b_exps), s.order, DUAL_SERIES_VAR)
            rest = s * undo
        else:
            rest = s
        c = rest.coefficient((d,)) * scale
        if c.is_zero():
            continue
        poly = c.num.divide_exact(c.den)
        if poly is None:
            return None
        weights = {}
        for e, k in poly.terms.items():
            if k != int(k) or k < 0:
                return None
            weights[e + (d,)] = int(k)
        found = found + Character(DUAL_TABLE, weights)
    if xi_product(b, found, s.order, DUAL_SERIES_VAR) != s:
        return None
    return found


def nn_note_check(n: int, order: Optional[int] = None, jobs: int = 1) -> Tuple[bool, Character, Character]:
    """For T*Gr(n, n): N- read off kappa* of the chamber limit gives ``N- + (N-)*/hbar' = char(C^2n)``.

    ``(N-)*`` of the dual point has one weight per a'-degree 1 factor, so order 2
    is enough to see all weights; the default goes a little further to confirm nothing else appears.
    """
    p = SubsetPoint(n, n, tuple(range(1, n + 1)))
    case = grassmannian_case(p)
    order = order if order is not None else 4
    lhs = kappa_pullback(limit_vertex_series(case.inst, case.chamber, order, jobs=jobs), case.mirror, order)
    weights = extract_xi_weights(lhs, kernel_base())
    if weights is None:
        return False, Character(DUAL_TABLE, {}), gr_nn_character(n)
    minus = weights.dual()
    tangent = minus + weights.shift((0, -2, 0))
    expected = gr_nn_character(n)
    return tangent == expected, tangent, expected


# ---------------------------------------------------------------------------
# display


_PRETTY = {"h": "hbar", "hp": "hbarp"}


def pretty_polynomial(p: LaurentPolynomial) -> str:
    """Canonical text, but with ``h^2k`` shown as ``hbar^k`` when every h exponent is even."""
    names = list(p.table.names)
    halve = []
    for v, alias in _PRETTY.items():
        if v in names:
            i = names.index(v)
            if all(e[i] % 2 == 0 for e in p.terms):
                names[i] = alias
                halve.append(i)
    if not halve:
        return str(p)
    terms = {}
    for e, c in p.terms.items():
        e = list(e)
        for i in halve:
            e[i] //= 2
        terms[tuple(e)] = c
    return format_polynomial(LaurentPolynomial(VariableTable(names), terms)).replace("hbarp", "hbar'")


def pretty_rational(f: RationalFunction) -> str:
    num, den = pretty_polynomial(f.num), pretty_polynomial(f.den)
    if den == "1":
        return num
    if len(f.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({den})"
