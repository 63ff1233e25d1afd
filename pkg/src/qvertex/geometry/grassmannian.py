"""Cotangent bundles of Grassmannians: fixed points and dual tangent data."""
from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from ..algebra import VariableTable
from .character import Character
from .hilbert import DUAL_TABLE
from .partitions import SubsetPoint
from .quiver import FixedPointData, QuiverData


@lru_cache(maxsize=None)
def table(n: int) -> VariableTable:
    return VariableTable(["q", "h"] + [f"a{i}" for i in range(1, n + 1)])


def gr_fixed_point(p: SubsetPoint) -> FixedPointData:
    """``x_i(p) = a_{p_i}^-1``."""
    T = table(p.n)
    return FixedPointData(T, {"1": tuple(T.unit_exps(f"a{pi}", -1) for pi in p.elements)})


def grassmannian_quiver(k: int, n: int) -> QuiverData:
    """Single vertex, dim V = k, framing C^n on which a_i acts with character a_i^-1."""
    T = table(n)
    framing = tuple(T.unit_exps(f"a{i}", -1) for i in range(1, n + 1))
    return QuiverData(T, ("1",), (), {"1": k}, {"1": n}, {"1": framing})


def dual_exponent(p: SubsetPoint, i: int) -> int:
    """hbar' exponent ``2k - n + p_i - 2i`` of the i-th weight of ``(N'-)*``."""
    return 2 * p.k - p.n + p.elements[i - 1] - 2 * i


def gr_dual_attracting_split(p: SubsetPoint) -> Tuple[Character, Character]:
    """``N'+ = sum a' hbar'^(2k-n+p_i-2i-1)``, ``N'- = sum a'^-1 hbar'^(-2k+n-p_i+2i)``.

    Over the dual table with ``hbar' = hp^2``; ``a' = a'_1/a'_2`` is one variable.
    """
    plus, minus = {}, {}
    for i in range(1, p.k + 1):
        e = dual_exponent(p, i)
        kp = (0, 2 * (e - 1), 1)
        km = (0, -2 * e, -1)
        plus[kp] = plus.get(kp, 0) + 1
        minus[km] = minus.get(km, 0) + 1
    return Character(DUAL_TABLE, plus), Character(DUAL_TABLE, minus)


def gr_nn_character(n: int) -> Character:
    """``sum_i (a' hbar'^(n-i-1) + hbar'^(-n+i)/a')`` for the mirror of T*Gr(n, n)."""
    out = {}
    for i in range(1, n + 1):
        for e in ((0, 2 * (n - i - 1), 1), (0, 2 * (i - n), -1)):
            out[e] = out.get(e, 0) + 1
    return Character(DUAL_TABLE, out)
