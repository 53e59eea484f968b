import itertools
import math

import pytest

from symstab.partitions import (
    Cell,
    Composition,
    Partition,
    centralizer_order,
    coarm,
    coleg,
    dominance_leq,
    leg,
    pad,
    partitions_of,
    partitions_up_to_size,
    rearrangement_count,
    unpad,
)


def test_partition_validation():
    assert Partition((3, 2, 1)) == (3, 2, 1)
    assert Partition() == ()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_text_round_trip():
    for parts in [(), (5,), (3, 2, 1), (2, 2, 2)]:
        lam = Partition(parts)
        assert Partition.parse(lam.text()) == lam
    assert Partition.parse("[]") == Partition()
    assert Composition.parse("[1,3,1]") == Composition((1, 3, 1))
    with pytest.raises(ValueError):
        Partition.parse("3,2,1")


def test_pad_examples():
    assert pad(Partition(), 3) == Partition((3,))
    assert pad(Partition((2, 1)), 6) == Partition((3, 2, 1))
    assert pad(Partition((2, 1)), 4) is None
    assert pad(Partition(), 0) == Partition()


def test_unpad_examples():
    assert unpad(Partition((3, 2, 1))) == (Partition((2, 1)), 6)
    assert unpad(Partition((5,))) == (Partition(), 5)
    assert unpad(Partition()) == (Partition(), 0)


def test_pad_unpad_round_trip():
    for lam in partitions_up_to_size(5):
        first = lam[0] if lam else 0
        for n in range(lam.size + first, lam.size + first + 6):
            assert unpad(pad(lam, n)) == (lam, n)
    # and the other direction: every partition is a unique pad
    for n in range(0, 9):
        for nu in partitions_of(n):
            core, total = unpad(nu)
            assert pad(core, total) == nu


def test_centralizer_order():
    assert centralizer_order(Partition((1, 1, 1))) == 6
    assert centralizer_order(Partition((3, 2, 2))) == 24
    for n in range(1, 8):
        assert centralizer_order(Partition((n,))) == n


def test_centralizer_orders_count_permutations():
    # conjugacy class sizes n!/z sum to n!
    for n in range(1, 9):
        total = sum(math.factorial(n) // centralizer_order(mu) for mu in partitions_of(n))
        assert total == math.factorial(n)


def test_rearrangement_count():
    assert rearrangement_count(Partition((2, 1))) == 2
    assert rearrangement_count(Partition((2, 2, 2))) == 1
    assert rearrangement_count(Partition((3, 2, 2, 1))) == 12
    for lam in partitions_up_to_size(8):
        brute = len(set(itertools.permutations(lam)))
        assert rearrangement_count(lam) == brute


def test_conjugate():
    assert Partition((3, 2)).conjugate() == Partition((2, 2, 1))
    for lam in partitions_up_to_size(8):
        conj = lam.conjugate()
        assert conj.conjugate() == lam
        assert conj.size == lam.size


def test_cell_geometry():
    lam = Partition((3, 2))
    assert coleg(lam, Cell(2, 1)) == 1
    assert coarm(lam, Cell(2, 1)) == 0
    # coleg-coarm pairs over the cells, reading order
    pairs = sorted((coleg(lam, c), coarm(lam, c)) for c in lam.cells())
    assert pairs == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]
    assert leg(Partition((4, 3, 3)), Cell(2, 3)) == 1
    assert leg(Partition((4, 3, 3)), Cell(3, 1)) == 0
    with pytest.raises(ValueError):
        coarm(lam, Cell(2, 3))


def test_partitions_of():
    assert [tuple(p) for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    for n, c in enumerate(counts):
        assert len(partitions_of(n)) == c


def test_dominance():
    assert dominance_leq(Partition((2, 1, 1)), Partition((2, 2)))
    assert not dominance_leq(Partition((2, 2)), Partition((2, 1, 1)))
    assert dominance_leq(Partition((2, 2)), Partition((2, 2)))
    with pytest.raises(ValueError):
        dominance_leq(Partition((2,)), Partition((3,)))


def test_canonical_order_extends_dominance():
    # needed for the unitriangular inversion of the Kostka matrix
    for n in range(0, 9):
        parts = partitions_of(n)
        for i, lam in enumerate(parts):
            for j, mu in enumerate(parts):
                if dominance_leq(mu, lam) and lam != mu:
                    assert i < j
