"""Partitions, boxes, arm/leg statistics and k-subsets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Tuple

from ..algebra import AlgebraError


@dataclass(frozen=True)
class Box:
    """Box in row ``row``, column ``col`` (both 1-based)."""

    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise AlgebraError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise AlgebraError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text or text == "0":
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError:
            raise AlgebraError(f"cannot parse partition {text!r}; expected e.g. 3,1,1") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def boxes(self) -> List[Box]:
        """Boxes in row-major order."""
        return [Box(r + 1, c + 1) for r, row in enumerate(self.parts) for c in range(row)]

    def __contains__(self, box: object) -> bool:
        return isinstance(box, Box) and 1 <= box.row <= len(self.parts) and 1 <= box.col <= self.parts[box.row - 1]

    def text(self) -> str:
        return ",".join(map(str, self.parts)) or "0"

    __str__ = text


def partitions_of(n: int) -> List[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise AlgebraError("n must be nonnegative")

    def gen(rest: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(n, n)]


def arm_leg(lam: Partition, box: Box) -> Tuple[int, int]:
    """``(arm, leg) = (lam'_j - i, lam_i - j)`` for the box in row i, column j.

    Note the names are swapped relative to the usual convention, where
    lam_i - j is the arm; the swapped naming matches the tangent formulas.
    """
    if box not in lam:
        raise AlgebraError(f"box {box} is outside the diagram {lam.parts}")
    conj = lam.conjugate().parts
    return conj[box.col - 1] - box.row, lam.parts[box.row - 1] - box.col


@dataclass(frozen=True)
class SubsetPoint:
    k: int
    n: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        el = tuple(self.elements)
        object.__setattr__(self, "elements", el)
        if not (0 <= self.k <= self.n) or len(el) != self.k:
            raise AlgebraError(f"subset {el} does not have size k={self.k}")
        if any(a >= b for a, b in zip(el, el[1:])):
            raise AlgebraError(f"subset elements must be strictly increasing: {el}")
        if el and (el[0] < 1 or el[-1] > self.n):
            raise AlgebraError(f"subset elements must lie in 1..{self.n}: {el}")

    @classmethod
    def parse(cls, k: int, n: int, text: str) -> "SubsetPoint":
        try:
            el = tuple(int(t) for t in text.split(",") if t.strip())
        except ValueError:
            raise AlgebraError(f"cannot parse subset {text!r}; expected e.g. 1,3") from None
        return cls(k, n, el)

    def text(self) -> str:
        return ",".join(map(str, self.elements))

    __str__ = text


def subsets_of(k: int, n: int) -> List[SubsetPoint]:
    return [SubsetPoint(k, n, c) for c in combinations(range(1, n + 1), k)]


def subset_from_diagram(lam: Partition, k: int, n: int) -> SubsetPoint:
    """Positions of the k vertical steps of the boundary of ``lam`` inside a k x (n-k) box.

    The boundary is walked from the bottom-left corner; row ``k+1-i`` (of
    length ``lam_{k+1-i}``, padded with zeros) puts its vertical step at
    position ``lam_{k+1-i} + i``.
    """
    if len(lam) > k or (lam.parts and lam.parts[0] > n - k):
        raise AlgebraError(f"diagram {lam.parts} does not fit in a {k} x {n - k} rectangle")
    rows = list(lam.parts) + [0] * (k - len(lam))
    return SubsetPoint(k, n, tuple(rows[k - i] + i for i in range(1, k + 1)))


def diagram_from_subset(p: SubsetPoint) -> Partition:
    rows = [p.elements[p.k - r] - (p.k + 1 - r) for r in range(1, p.k + 1)]
    return Partition(tuple(x for x in rows if x))
