import pytest
from hypothesis import given

from qvertex.algebra import AlgebraError, MonomialMap
from qvertex.geometry import (
    Box,
    Character,
    Partition,
    SubsetPoint,
    arm_leg,
    diagram_from_subset,
    gr_dual_attracting_split,
    gr_fixed_point,
    grassmannian_quiver,
    hilb_attracting_split,
    hilb_fixed_point,
    hilb_tangent,
    jordan_quiver,
    partitions_of,
    polarization,
    specialize_polarization,
    subset_from_diagram,
    subsets_of,
)
from qvertex.geometry.grassmannian import table as gr_table
from qvertex.geometry.hilbert import DUAL_TABLE, TABLE, TO_EQUIVARIANT, TORUS, hbar_inverse
from qvertex.geometry.quiver import QuiverData, symbolic_table

from strategies import partitions


def ch(text, table=TORUS):
    return Character.parse(text, table)


def test_partition_validation_and_parse():
    assert Partition.parse("3,1,1").parts == (3, 1, 1)
    assert Partition.parse("2,1").conjugate() == Partition((2, 1))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    for bad in ((1, 2), (2, 0), (0,)):
        with pytest.raises(AlgebraError):
            Partition(bad)


def test_partitions_of():
    assert len(partitions_of(4)) == 5
    assert partitions_of(0) == [Partition(())]
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert [len(partitions_of(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_arm_leg():
    assert arm_leg(Partition((2,)), Box(1, 1)) == (0, 1)
    assert arm_leg(Partition((2,)), Box(1, 2)) == (0, 0)
    assert arm_leg(Partition((1,)), Box(1, 1)) == (0, 0)
    assert arm_leg(Partition((2, 1)), Box(1, 1)) == (1, 1)
    with pytest.raises(AlgebraError):
        arm_leg(Partition((2,)), Box(2, 1))


def torus_roots(lam):
    """Restrictions written back in (t1, t2): t1 = a/h, t2 = 1/(a h) is injective on exponents."""
    out = []
    for e in hilb_fixed_point(lam).monomials("1"):
        q, h, a = e
        # solve h-exponent = -(i + j), a-exponent = i - j
        i, j = (a - h) // 2, (-a - h) // 2
        assert TO_EQUIVARIANT.map_exps((i, j)) == e
        out.append((i, j))
    return out


def test_hilb_fixed_points():
    assert torus_roots(Partition((1,))) == [(0, 0)]
    assert torus_roots(Partition((2,))) == [(0, 0), (-1, 0)]
    assert torus_roots(Partition((1, 1))) == [(0, 0), (0, -1)]
    assert hilb_fixed_point(Partition((1,))).monomials("1") == ((0, 0, 0),)


def test_hilb_tangent_examples():
    assert hilb_tangent(Partition((1,))) == ch("t1 + t2")
    assert hilb_tangent(Partition((2,))) == ch("t1^2 + t2*t1^-1 + t1 + t2")
    plus, minus = hilb_attracting_split(Partition((1,)))
    assert plus == ch("t1") and minus == ch("t2")
    assert hilb_attracting_split(Partition((2,)))[1] == ch("t2*t1^-1 + t2")


@given(partitions())
def test_hilb_tangent_counts_and_split(lam):
    plus, minus = hilb_attracting_split(lam)
    assert hilb_tangent(lam).dimension() == 2 * lam.size
    assert plus.dimension() == minus.dimension() == lam.size
    assert plus + minus == hilb_tangent(lam)
    assert plus == minus.dual() * hbar_inverse()


@given(partitions())
def test_hilb_tangent_transpose_symmetry(lam):
    swap = MonomialMap(TORUS, TORUS, {"t1": "t2", "t2": "t1"})
    assert hilb_tangent(lam.conjugate()) == hilb_tangent(lam).substitute(swap)


def test_gr_fixed_points():
    T = gr_table(4)
    assert gr_fixed_point(SubsetPoint(2, 4, (1, 3))).monomials("1") == (T.unit_exps("a1", -1), T.unit_exps("a3", -1))
    assert gr_fixed_point(SubsetPoint(1, 5, (1,))).monomials("1") == (gr_table(5).unit_exps("a1", -1),)
    full = gr_fixed_point(SubsetPoint(3, 3, (1, 2, 3))).monomials("1")
    assert full == tuple(gr_table(3).unit_exps(f"a{i}", -1) for i in (1, 2, 3))


def test_gr_dual_split_examples():
    assert gr_dual_attracting_split(SubsetPoint(1, 2, (2,)))[1] == ch("ap^-1", DUAL_TABLE)
    assert gr_dual_attracting_split(SubsetPoint(1, 2, (1,)))[1] == ch("ap^-1*hp^2", DUAL_TABLE)


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 3)])
def test_gr_dual_split_note_identity(k, n):
    hbar_prime_inv = Character(DUAL_TABLE, {(0, -2, 0): 1})
    for p in subsets_of(k, n):
        plus, minus = gr_dual_attracting_split(p)
        assert plus.dimension() == minus.dimension() == k
        assert plus == minus.dual() * hbar_prime_inv


def test_subsets_and_diagrams():
    assert [p.elements for p in subsets_of(2, 3)] == [(1, 2), (1, 3), (2, 3)]
    for bad in ("2,1", "0,1", "1,5", "1"):
        with pytest.raises(AlgebraError):
            SubsetPoint.parse(2, 4, bad)
    assert subset_from_diagram(Partition(()), 2, 4).elements == (1, 2)
    assert subset_from_diagram(Partition((2, 2)), 2, 4).elements == (3, 4)
    with pytest.raises(AlgebraError):
        subset_from_diagram(Partition((3,)), 2, 4)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_diagram_subset_roundtrip(k, n):
    seen = set()
    for p in subsets_of(k, n):
        lam = diagram_from_subset(p)
        assert len(lam) <= k and (not lam.parts or lam.parts[0] <= n - k)
        assert subset_from_diagram(lam, k, n) == p
        seen.add(lam.parts)
    assert len(seen) == len(subsets_of(k, n))


def test_polarization_jordan():
    j = jordan_quiver(1)
    S = symbolic_table(j)
    assert polarization(j) == Character.parse("x1_1*u1_1^-1 + t1 - 1", S)
    T, P = specialize_polarization(j)
    assert P == Character.parse("x1_1 + a*h^-1 - 1", T)


def test_polarization_grassmannian():
    g = grassmannian_quiver(2, 3)
    T, P = specialize_polarization(g)
    xs = ["x1_1", "x1_2"]
    expect = Character(T, {})
    for x in xs:
        for i in (1, 2, 3):
            expect = expect + Character.parse(f"{x}*a{i}", T)
        for y in xs:
            expect = expect - Character.parse(f"{y}^-1*{x}", T)
    assert P == expect


def test_polarization_weight_count():
    for quiver, expected in ((jordan_quiver(3), 9 + 3 - 9), (grassmannian_quiver(2, 5), 10 - 4)):
        assert polarization(quiver).dimension() == expected


def test_polarization_empty():
    empty = QuiverData(TABLE, ("1",), (), {"1": 0}, {"1": 2})
    assert polarization(empty) == Character(symbolic_table(empty), {})


def test_dual():
    N = ch("t2 + t2*t1^-1")
    assert N.dual() == ch("t2^-1 + t1*t2^-1")
    assert N.dual().dual() == N
    assert Character(TORUS, {}).dual() == Character(TORUS, {})
