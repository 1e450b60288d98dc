import os

import pytest

from braidinv.character_oracle import (
    CyclotomicSum,
    GroupSpec,
    Perm,
    _cyclotomic,
    _elements_with_exponents,
    build_centralizer,
    double_cosets,
    isotropy_inner_product,
    oracle_dimension,
    root_order,
    total_rank_check,
    zeta_value,
)
from braidinv.core_combinatorics import Partition, all_partitions
from braidinv.cycle_invariants import delta_from_permutation
from braidinv.errors import CapabilityError
from braidinv.extension_catalog import ext_dimension
from braidinv.product_catalog import label_from_delta, product_dimension

LONG = os.environ.get("BRAID_LONG") == "1"


def test_perm_basics():
    s = Perm((2, 3, 1))
    assert s(1) == 2 and s(3) == 1
    assert (s * s).images == (3, 1, 2)
    assert s.inverse().images == (3, 1, 2)
    assert s.sign() == 1
    assert Perm((2, 1, 3)).sign() == -1
    assert Perm.from_cycles(4, (1, 3, 2)).images == (3, 1, 2, 4)
    with pytest.raises(ValueError):
        Perm((1, 1, 2))


def test_group_spec_orders_and_membership():
    g = GroupSpec.product(5, 2)
    assert g.order == 12
    assert g.contains((2, 3, 1, 5, 4))
    assert not g.contains((4, 2, 3, 1, 5))
    assert len(list(g.members())) == 12
    e = GroupSpec.extension(2)
    assert e.order == 2 * 2 * 2
    assert e.contains((4, 3, 2, 1))  # the reversal itself
    assert not e.contains((2, 3, 4, 1))
    assert len(set(e.members())) == 8
    assert GroupSpec.full(3).order == 6
    with pytest.raises(ValueError):
        GroupSpec("extension", 5, 2)


def test_group_generators_generate():
    for g in (GroupSpec.product(4, 2), GroupSpec.extension(2), GroupSpec.full(4)):
        seen = {tuple(range(1, g.n + 1))}
        frontier = [tuple(range(1, g.n + 1))]
        gens = g.generators()
        while frontier:
            s = frontier.pop()
            for z in gens:
                t = tuple(s[z[i] - 1] for i in range(g.n))
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        assert len(seen) == g.order
        assert all(g.contains(s) for s in seen)


def test_centralizer_orders():
    assert build_centralizer(Partition((2,))).order == 2
    assert build_centralizer(Partition((2, 2))).order == 8
    assert build_centralizer(Partition((3, 1))).order == 3
    assert build_centralizer(Partition((1, 1, 1, 1))).order == 24
    for lam in all_partitions(5):
        pres = build_centralizer(lam)
        assert len(set(p.images for p in pres.elements())) == pres.order


def test_root_order():
    assert root_order(Partition((2,))) == 2
    assert root_order(Partition((3,))) == 6
    assert root_order(Partition((4, 3))) == 12
    assert root_order(Partition((5, 3))) == 30


def test_cyclotomic_polynomials():
    assert _cyclotomic(1) == (-1, 1)
    assert _cyclotomic(2) == (1, 1)
    assert _cyclotomic(3) == (1, 1, 1)
    assert _cyclotomic(4) == (1, 0, 1)
    assert _cyclotomic(6) == (1, -1, 1)
    assert _cyclotomic(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_sum_arithmetic():
    # sum of all 6th roots vanishes
    total = CyclotomicSum(6, (1, 1, 1, 1, 1, 1))
    assert total.integer_value() == 0
    # a cube root times its square is 1
    a = CyclotomicSum.monomial(6, 2)
    assert (a * a * a).integer_value() == 1
    assert a != CyclotomicSum.monomial(6, 4)
    # 1 + two primitive cube roots = 0
    s = CyclotomicSum.monomial(6, 0) + CyclotomicSum.monomial(6, 2) + CyclotomicSum.monomial(6, 4)
    assert s.integer_value() == 0
    assert CyclotomicSum.monomial(6, 3).reduced() == (-1,)


def test_zeta_values_pinned():
    assert zeta_value(Partition((2,)), Perm((2, 1))).integer_value() == 1
    # the 3-cycle gets a primitive cube root: x^2 over order 6 reduces to x-1
    assert zeta_value(Partition((3,)), Perm((2, 3, 1))).reduced() == (-1, 1)
    # a block transposition on two 2-cycles is odd
    assert zeta_value(Partition((2, 2)), Perm((3, 4, 1, 2))).integer_value() == -1
    # and on two 3-cycles even
    assert zeta_value(Partition((3, 3)), Perm((4, 5, 6, 1, 2, 3))).integer_value() == 1
    with pytest.raises(ValueError):
        zeta_value(Partition((3, 1)), Perm((1, 2, 4, 3)))


@pytest.mark.parametrize("n", range(1, 7))
def test_zeta_multiplicative_exhaustive(n):
    for lam in all_partitions(n):
        elements = [Perm(im) for im, _ in _elements_with_exponents(lam)]
        values = {z.images: zeta_value(lam, z) for z in elements}
        for z1 in elements:
            for z2 in elements:
                assert values[(z1 * z2).images] == values[z1.images] * values[z2.images]


def test_double_cosets_examples():
    assert len(double_cosets(GroupSpec.extension(1), Partition((2,)))) == 1
    assert len(double_cosets(GroupSpec.product(4, 2), Partition((4,)))) == 2
    # identity-centralizer case: the full symmetric group acts transitively
    assert len(double_cosets(GroupSpec.product(4, 2), Partition((1, 1, 1, 1)))) == 1
    with pytest.raises(CapabilityError):
        double_cosets(GroupSpec.product(11, 5), Partition((11,)), mode="generic")


GENERIC_DELTA_NS = range(2, 7)


@pytest.mark.parametrize("n", GENERIC_DELTA_NS)
def test_double_coset_modes_agree(n):
    groups = [GroupSpec.product(n, q) for q in range(n // 2 + 1)]
    if n % 2 == 0:
        groups.append(GroupSpec.extension(n // 2))
    for lam in all_partitions(n):
        for g in groups:
            generic = double_cosets(g, lam, mode="generic")
            delta = double_cosets(g, lam, mode="delta")
            assert len(generic) == len(delta), (n, lam.parts, g.describe())


def test_double_coset_modes_agree_n7():
    for lam in all_partitions(7):
        for q in range(4):
            g = GroupSpec.product(7, q)
            assert len(double_cosets(g, lam, mode="generic")) == len(
                double_cosets(g, lam, mode="delta")
            )


@pytest.mark.skipif(not LONG, reason="set BRAID_LONG=1 for the full n=8 sweep")
def test_double_coset_modes_agree_n8_full():
    groups = [GroupSpec.product(8, q) for q in range(5)]
    groups.append(GroupSpec.extension(4))
    for lam in all_partitions(8):
        for g in groups:
            assert len(double_cosets(g, lam, mode="generic")) == len(
                double_cosets(g, lam, mode="delta")
            )


def test_double_coset_modes_agree_n8_spot():
    # default-run subset of the n=8 sweep; BRAID_LONG=1 covers all groups
    for g in (GroupSpec.extension(4), GroupSpec.product(8, 3)):
        for lam in all_partitions(8):
            assert len(double_cosets(g, lam, mode="generic")) == len(
                double_cosets(g, lam, mode="delta")
            )


def test_isotropy_examples():
    assert (
        isotropy_inner_product(Perm.identity(2), Partition((2,)), GroupSpec.extension(1))
        == 1
    )
    # the alternating 1010 marking on a 4-cycle fails the multiplicity rule
    s = Perm((3, 1, 4, 2))
    assert delta_from_permutation(s, 2).bits == (1, 0, 1, 0)
    assert isotropy_inner_product(s, Partition((4,)), GroupSpec.product(4, 2)) == 0


@pytest.mark.parametrize("n,q", [(n, q) for n in range(2, 7) for q in range(n // 2 + 1)])
def test_predicate_matches_oracle(n, q):
    group = GroupSpec.product(n, q)
    for lam in all_partitions(n):
        for s in double_cosets(group, lam):
            delta = delta_from_permutation(s, q)
            verdict = 0 if label_from_delta(delta, lam) is None else 1
            assert verdict == isotropy_inner_product(s, lam, group)


@pytest.mark.parametrize("n", (4, 6, 8))
def test_sigma_shift_invariance(n):
    group = GroupSpec.extension(n // 2)
    sigma = Perm(tuple(range(n, 0, -1)))
    for lam in all_partitions(n):
        for s in double_cosets(group, lam):
            assert isotropy_inner_product(s, lam, group) == isotropy_inner_product(
                sigma * s, lam, group
            )


ORACLE_PRODUCT_NS = range(2, 9)


@pytest.mark.parametrize("n", ORACLE_PRODUCT_NS)
def test_oracle_matches_product_formula(n):
    for q in range(n // 2 + 1):
        oracle = oracle_dimension(n, GroupSpec.product(n, q))
        assert oracle.as_dict() == product_dimension(n, q).as_dict()


@pytest.mark.parametrize("n", (2, 4, 6, 8))
def test_oracle_matches_ext_formula(n):
    oracle = oracle_dimension(n, GroupSpec.extension(n // 2))
    total, table = ext_dimension(n)
    assert oracle.as_dict() == table.as_dict()
    assert oracle.total == total


@pytest.mark.skipif(not LONG, reason="set BRAID_LONG=1 for the n=10 oracle run")
def test_oracle_matches_ext_formula_n10():
    oracle = oracle_dimension(10, GroupSpec.extension(5), long_running=True, workers=4)
    assert oracle.as_dict() == ext_dimension(10)[1].as_dict()


def test_oracle_capability_gate():
    with pytest.raises(CapabilityError):
        oracle_dimension(10, GroupSpec.extension(5))
    with pytest.raises(CapabilityError):
        oracle_dimension(12, GroupSpec.extension(6), long_running=True)


def test_oracle_workers_deterministic():
    serial = oracle_dimension(6, GroupSpec.extension(3), workers=1)
    parallel = oracle_dimension(6, GroupSpec.extension(3), workers=3)
    assert serial.as_dict() == parallel.as_dict()


@pytest.mark.parametrize("n", range(2, 9))
def test_total_rank_check(n):
    assert total_rank_check(n)
