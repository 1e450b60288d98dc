import itertools

import pytest

from braidinv.core_combinatorics import Partition, all_partitions
from braidinv.cycle_invariants import (
    DeltaMap,
    InvariantCycle,
    cycle_block_key,
)
from braidinv.product_catalog import (
    GeneratorLabel,
    MarkedPartition,
    PoincareTable,
    enumerate_generators,
    enumerate_marked,
    label_from_delta,
    product_dimension,
)

# pinned against the brute-force character path (see test_character_oracle)
PRODUCT_TABLES = {
    (2, 0): {0: 1, 1: 1},
    (2, 1): {0: 1, 1: 1},
    (4, 2): {0: 1, 1: 3, 2: 3, 3: 1},
    (6, 2): {0: 1, 1: 3, 2: 4, 3: 5, 4: 6, 5: 3},
    (6, 3): {0: 1, 1: 3, 2: 5, 3: 8, 4: 8, 5: 3},
    (8, 3): {0: 1, 1: 3, 2: 5, 3: 9, 4: 16, 5: 22, 6: 19, 7: 7},
}


def test_marked_partition_validation():
    lam = Partition((3, 3, 1))
    MarkedPartition(lam, (2, 1, 0))
    with pytest.raises(ValueError):
        MarkedPartition(lam, (1, 2, 0))  # marks must not increase in a block
    with pytest.raises(ValueError):
        MarkedPartition(lam, (4, 1, 0))  # mark exceeds its part
    with pytest.raises(ValueError):
        MarkedPartition(lam, (2, 1))  # one mark per part


def test_marked_partition_block_marks():
    mp = MarkedPartition(Partition((3, 3, 1, 1)), (2, 1, 1, 0))
    assert mp.block_marks() == ((3, (2, 1)), (1, (1, 0)))
    assert mp.weight == 4


def test_generator_label_validation():
    lam = Partition((2, 2))
    one = InvariantCycle(2, (1,))
    full = InvariantCycle(2, (0, 0))
    GeneratorLabel(lam, (full, one))
    with pytest.raises(ValueError):
        GeneratorLabel(lam, (one, full))  # weight must not increase in a block
    with pytest.raises(ValueError):
        GeneratorLabel(lam, (one, one))  # repeat on an even part
    with pytest.raises(ValueError):
        GeneratorLabel(Partition((3,)), (InvariantCycle.empty(3),))
    # repeats on odd parts are fine
    chi = InvariantCycle(3, (2,))
    GeneratorLabel(Partition((3, 3)), (chi, chi))


def test_generator_label_degree_weight():
    lam = Partition((4, 2))
    label = GeneratorLabel(lam, (InvariantCycle(4, (0, 2)), InvariantCycle(2, (1,))))
    assert label.degree == 4
    assert label.weight == 3
    assert label.marked() == MarkedPartition(lam, (2, 1))
    assert str(label) == "(4,2) (0,2)(1)"


def test_poincare_table():
    t = PoincareTable.from_dict({0: 1, 2: 5, 7: 0})
    assert t[0] == 1 and t[2] == 5 and t[1] == 0 and t[7] == 0
    assert t.total == 6
    assert t.max_degree == 2
    assert t.as_dict() == {0: 1, 2: 5}
    assert PoincareTable.from_degrees([0, 1, 1, 3]).as_dict() == {0: 1, 1: 2, 3: 1}


def test_enumerate_marked_small():
    # n=2, q=1: (2) marked 1, (1,1) marked (1,0)
    got = {(mp.partition.parts, mp.marks) for mp in enumerate_marked(2, 1)}
    assert got == {((2,), (1,)), ((1, 1), (1, 0))}
    total_weight = {mp.weight for mp in enumerate_marked(6, 2)}
    assert total_weight == {2}


def test_enumerate_generators_weights_sum_to_q():
    for n, q in ((4, 2), (6, 3), (7, 2)):
        labels = enumerate_generators(n, q)
        assert len(set(labels)) == len(labels)
        for g in labels:
            assert g.weight == q
            blocks = g.partition.blocks
            pos = 0
            for _, m in blocks:
                keys = [cycle_block_key(c) for c in g.cycles[pos:pos + m]]
                assert keys == sorted(keys)
                pos += m


@pytest.mark.parametrize("n,q", sorted(PRODUCT_TABLES))
def test_product_dimension_pinned(n, q):
    assert product_dimension(n, q).as_dict() == PRODUCT_TABLES[(n, q)]


@pytest.mark.parametrize("n", range(1, 9))
def test_product_dimension_routes_agree(n):
    for q in range(n + 1):
        formula = product_dimension(n, q, method="formula")
        catalog = product_dimension(n, q, method="catalog")
        assert formula.as_dict() == catalog.as_dict()


@pytest.mark.parametrize("n", range(2, 9))
def test_product_dimension_symmetry_and_degree_zero(n):
    for q in range(n + 1):
        table = product_dimension(n, q)
        assert table[0] == 1
        assert table.as_dict() == product_dimension(n, n - q).as_dict()


@pytest.mark.parametrize("n", range(2, 9))
def test_classical_anchor_full_invariants(n):
    assert product_dimension(n, 0).as_dict() == {0: 1, 1: 1}


def test_label_from_delta_accepts_and_rejects():
    lam = Partition((4,))
    # 1010 pattern on a 4-cycle has rotation multiplicity 2 at 4 = 0 mod 4
    assert label_from_delta(DeltaMap((1, 0, 1, 0)), lam) is None
    built = label_from_delta(DeltaMap((1, 1, 0, 0)), lam)
    assert built is not None
    assert built.cycles[0] == InvariantCycle(4, (0, 2))


@pytest.mark.parametrize("n", range(2, 8))
def test_label_from_delta_reaches_exactly_the_catalog(n):
    # the labels reachable from marking words are exactly the enumerated ones
    for q in range(n // 2 + 1):
        labels = set(enumerate_generators(n, q))
        reachable = set()
        for lam in all_partitions(n):
            for word in set(itertools.permutations([1] * q + [0] * (n - q))):
                got = label_from_delta(DeltaMap(word), lam)
                if got is not None:
                    reachable.add(got)
        assert reachable == labels
