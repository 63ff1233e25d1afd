"""Hilbert scheme of points on C^2: fixed points, tangent characters, dual variables."""
from __future__ import annotations

from typing import Tuple

from ..algebra import MonomialMap, VariableTable
from ..algebra.laurent import Exps
from .character import Character
from .partitions import Box, Partition, arm_leg
from .quiver import Arrow, FixedPointData, QuiverData

TORUS = VariableTable(["t1", "t2"])
# coefficient variables on X: hbar = h^2, t1 = a/h, t2 = 1/(a h)
TABLE = VariableTable(["q", "h", "a"])
# dual side: hbar' = hp^2, t1' = ap/hp, t2' = 1/(ap hp)
DUAL_TABLE = VariableTable(["q", "hp", "ap"])

TO_EQUIVARIANT = MonomialMap(TORUS, TABLE, {"t1": "a*h^-1", "t2": "a^-1*h^-1"})
TO_DUAL = MonomialMap(TORUS, DUAL_TABLE, {"t1": "ap*hp^-1", "t2": "ap^-1*hp^-1"})


def box_weight(box: Box) -> Exps:
    """Character ``t1^-(n-1) t2^-(m-1)`` of the monomial sitting in box (m, n)."""
    return (-(box.col - 1), -(box.row - 1))


def hilb_fixed_point(lam: Partition) -> FixedPointData:
    roots = tuple(TO_EQUIVARIANT.map_exps(box_weight(b)) for b in lam.boxes())
    return FixedPointData(TABLE, {"1": roots})


def _per_box(lam: Partition):
    for b in lam.boxes():
        arm, leg = arm_leg(lam, b)
        yield arm, leg


def hilb_attracting_split(lam: Partition) -> Tuple[Character, Character]:
    """``N+ = sum t2^-a t1^(l+1)``, ``N- = sum t1^-l t2^(a+1)`` in the (t1, t2) torus."""
    plus, minus = {}, {}
    for arm, leg in _per_box(lam):
        p = (leg + 1, -arm)
        m = (-leg, arm + 1)
        plus[p] = plus.get(p, 0) + 1
        minus[m] = minus.get(m, 0) + 1
    return Character(TORUS, plus), Character(TORUS, minus)


def hilb_tangent(lam: Partition) -> Character:
    plus, minus = hilb_attracting_split(lam)
    return plus + minus


def hbar_inverse() -> Character:
    """``hbar^-1 = t1 t2`` as a one-weight character."""
    return Character(TORUS, {(1, 1): 1})


def jordan_quiver(n: int) -> QuiverData:
    """One vertex, one loop twisted by t1, dim V = n, dim W = 1 with trivial framing."""
    t1 = TO_EQUIVARIANT.map_exps((1, 0))
    return QuiverData(TABLE, ("1",), (Arrow("1", "1", t1),), {"1": n}, {"1": 1})
