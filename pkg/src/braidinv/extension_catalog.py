"""Catalog machinery for the order-2 extension of the half-block product.

For n = 2q the reversal permutation swaps the two value blocks; on generator
labels it dualizes every gap word and re-sorts.  This module enumerates the
pairing structures a swap-fixed label can have, lists the fixed labels
themselves, attaches the reordering sign, and turns both into counting
formulas and the graded dimension of the extension invariants.
"""

from __future__ import annotations

import itertools
from collections import Counter, namedtuple
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .core_combinatorics import (
    all_partitions,
    binomial,
    compositions_count,
)
from .cycle_invariants import (
    cycle_block_key,
    dual_cycle,
    enumerate_Pi,
)
from .errors import InternalConsistencyError
from .product_catalog import (
    GeneratorLabel,
    MarkedPartition,
    PoincareTable,
    product_dimension,
)

# Resolved pairing data of one block: m parts of value v carrying k dual
# pairs, of which u join distinct weights (h, v-h) and w join two distinct
# words of equal weight v/2, plus t = m - 2k self-dual words at weight v/2.
BlockPairing = namedtuple("BlockPairing", "value mult marks k u w t")


@dataclass(frozen=True)
class PairedMarkedPartition:
    """A marked partition together with one dual-pair count per block.

    Within each block of m equal parts v, k pairs carry weights summing to
    v, and the remaining m - 2k parts carry weight exactly v/2.  Two
    structures on the same marks but with different pair counts are
    distinct: a pair may join two different words of the same weight v/2.
    """

    marked: MarkedPartition
    pair_counts: Tuple[int, ...]

    def __post_init__(self):
        pair_counts = tuple(self.pair_counts)
        object.__setattr__(self, "pair_counts", pair_counts)
        n = self.marked.partition.n
        if n % 2 != 0:
            raise ValueError("pairing structures need an even total")
        if 2 * self.marked.weight != n:
            raise ValueError("total weight must be half the partition total")
        blocks = self.marked.block_marks()
        if len(pair_counts) != len(blocks):
            raise ValueError("one pair count per block required")
        for (v, marks), k in zip(blocks, pair_counts):
            highs = Counter(d for d in marks if 2 * d > v)
            lows = Counter(d for d in marks if 2 * d < v)
            if Counter(v - d for d in highs.elements()) != lows:
                raise ValueError("marks are not balanced into dual pairs")
            u = sum(highs.values())
            e = len(marks) - 2 * u
            if e and v % 2:
                raise ValueError("odd parts cannot carry half weight")
            if not u <= k or 2 * (k - u) > e:
                raise ValueError("pair count out of range for the marks")

    @property
    def partition(self):
        return self.marked.partition

    def block_structure(self) -> Tuple[BlockPairing, ...]:
        out = []
        for (v, marks), k in zip(self.marked.block_marks(), self.pair_counts):
            u = sum(1 for d in marks if 2 * d > v)
            w = k - u
            t = len(marks) - 2 * k
            out.append(BlockPairing(v, len(marks), marks, k, u, w, t))
        return tuple(out)

    def sort_key(self):
        return (self.partition.parts, self.marked.marks, self.pair_counts)

    def __str__(self):
        return "%s k=%s" % (self.marked, list(self.pair_counts))


@dataclass(frozen=True)
class SignedGenerator:
    """A swap-fixed label with the sign the swap acts by."""

    label: GeneratorLabel
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def in_kernel(self) -> bool:
        return self.sign == -1


def sigma_dual_label(label: GeneratorLabel) -> GeneratorLabel:
    """Dualize every cycle and restore the canonical block order."""
    parts = label.partition.parts
    cycles = []
    pos = 0
    for _, m in label.partition.blocks:
        block = [dual_cycle(c) for c in label.cycles[pos:pos + m]]
        block.sort(key=cycle_block_key)
        cycles.extend(block)
        pos += m
    try:
        return GeneratorLabel(label.partition, tuple(cycles))
    except ValueError as exc:
        raise InternalConsistencyError(
            "dualized label %s is not canonical: %s" % (label, exc)
        ) from exc


@lru_cache(maxsize=None)
def _block_pairings(v: int, m: int):
    """All (marks, k) a block of m parts of value v can carry."""
    out = []
    high_vals = range(v, v // 2, -1)
    for u in range(m // 2 + 1):
        rem = m - 2 * u
        if rem and v % 2:
            continue
        for highs in itertools.combinations_with_replacement(high_vals, u):
            base = list(highs) + [v // 2] * rem + [v - h for h in highs]
            marks = tuple(sorted(base, reverse=True))
            for w in range(rem // 2 + 1):
                out.append((marks, u + w))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_E(n: int) -> Tuple[PairedMarkedPartition, ...]:
    """All pairing structures over partitions of an even n."""
    if n < 2 or n % 2:
        raise ValueError("need an even n >= 2")
    out = []
    for lam in all_partitions(n):
        per_block = [_block_pairings(v, m) for v, m in lam.blocks]
        for combo in itertools.product(*per_block):
            marks = tuple(d for block_marks, _ in combo for d in block_marks)
            ks = tuple(k for _, k in combo)
            out.append(PairedMarkedPartition(MarkedPartition(lam, marks), ks))
    return tuple(sorted(out, key=PairedMarkedPartition.sort_key))


@lru_cache(maxsize=None)
def _selfdual_split(v: int):
    """Split the half-weight words on an even v into (self-dual, orbit pairs)."""
    if v % 2:
        raise ValueError("half weight needs an even part")
    fixed = []
    orbit_pairs = []
    for chi in enumerate_Pi(v, v // 2):
        mate = dual_cycle(chi)
        if mate == chi:
            fixed.append(chi)
        elif cycle_block_key(chi) < cycle_block_key(mate):
            orbit_pairs.append((chi, mate))
    return tuple(fixed), tuple(orbit_pairs)


def _block_labelings(bp: BlockPairing):
    """All canonical cycle tuples realizing one block's pairing structure."""
    v = bp.value
    class_choices = []
    for h, c in sorted(Counter(d for d in bp.marks if 2 * d > v).items()):
        pool = enumerate_Pi(v, h)
        if v % 2 == 0:
            picks = itertools.combinations(pool, c)
        else:
            picks = itertools.combinations_with_replacement(pool, c)
        class_choices.append(
            [sum(((chi, dual_cycle(chi)) for chi in pick), ()) for pick in picks]
        )
    if v % 2 == 0:
        fixed, orbit_pairs = _selfdual_split(v)
        class_choices.append(
            [sum(pick, ()) for pick in itertools.combinations(orbit_pairs, bp.w)]
        )
        class_choices.append(
            list(itertools.combinations(fixed, bp.t))
        )
    for combo in itertools.product(*class_choices):
        cycles = [chi for group in combo for chi in group]
        cycles.sort(key=cycle_block_key)
        yield tuple(cycles)


@lru_cache(maxsize=None)
def _ep_members(n: int):
    """All (structure, label) pairs of swap-fixed generators."""
    out = []
    for pmp in enumerate_E(n):
        per_block = [list(_block_labelings(bp)) for bp in pmp.block_structure()]
        for combo in itertools.product(*per_block):
            cycles = tuple(chi for block in combo for chi in block)
            out.append((pmp, GeneratorLabel(pmp.partition, cycles)))
    out.sort(key=lambda pair: pair[1].sort_key())
    return tuple(out)


def enumerate_EP(n: int) -> Tuple[GeneratorLabel, ...]:
    """All swap-fixed generator labels of the half-weight catalog."""
    return tuple(label for _, label in _ep_members(n))


def epsilon_sign(pmp: PairedMarkedPartition) -> int:
    """Sign the swap acts by on any label with this pairing structure."""
    exponent = 0
    for bp in pmp.block_structure():
        v, m, k = bp.value, bp.mult, bp.k
        exponent += m * (v - 1) * (v - 2) // 2 + (v - 1) ** 2 * k * (2 * k - 1)
    return -1 if exponent % 2 else 1


def kernel_parity_conditions(pmp: PairedMarkedPartition) -> bool:
    """Explicit residue test for a structure landing in the kernel.

    A block contributes when its (value, multiplicity, pair count) residues
    mod 4 match one of four patterns; the structure is in the kernel when an
    odd number of blocks contribute.  Kept as a cross-check against the sign
    computation, which is authoritative.
    """
    hits = 0
    for bp in pmp.block_structure():
        v, m, k = bp.value % 4, bp.mult % 4, bp.k % 2
        if k == 0:
            if v in (0, 3) and m in (1, 3):
                hits += 1
        else:
            if v == 2:
                hits += 1
            elif v == 0 and m in (0, 2):
                hits += 1
            elif v == 3 and m in (1, 3):
                hits += 1
    return hits % 2 == 1


def enumerate_KP(n: int) -> Tuple[GeneratorLabel, ...]:
    """The swap-fixed labels on which the swap acts by -1."""
    return tuple(
        label for pmp, label in _ep_members(n) if epsilon_sign(pmp) == -1
    )


def signed_generators(n: int) -> Tuple[SignedGenerator, ...]:
    return tuple(
        SignedGenerator(label, epsilon_sign(pmp)) for pmp, label in _ep_members(n)
    )


def pairing_of_label(label: GeneratorLabel) -> PairedMarkedPartition:
    """Recover the pairing structure of a swap-fixed label."""
    ks = []
    pos = 0
    for v, m in label.partition.blocks:
        block = label.cycles[pos:pos + m]
        u = sum(1 for chi in block if 2 * chi.weight > v)
        moved = sum(
            1
            for chi in block
            if 2 * chi.weight == v and dual_cycle(chi) != chi
        )
        if moved % 2:
            raise ValueError("label is not swap-fixed")
        ks.append(u + moved // 2)
        pos += m
    return PairedMarkedPartition(label.marked(), tuple(ks))


def _structure_factor(pmp: PairedMarkedPartition) -> int:
    """Number of labels realizing a pairing structure, as binomial factors."""
    factor = 1
    for bp in pmp.block_structure():
        v = bp.value
        for h, c in sorted(Counter(d for d in bp.marks if 2 * d > v).items()):
            size = len(enumerate_Pi(v, h))
            if v % 2 == 0:
                factor *= binomial(size, c)
            else:
                factor *= sum(
                    compositions_count(c, b) * binomial(size, b)
                    for b in range(1, c + 1)
                )
        if v % 2 == 0:
            fixed, orbit_pairs = _selfdual_split(v)
            total = len(enumerate_Pi(v, v // 2))
            if (total - len(fixed)) % 2:
                raise InternalConsistencyError(
                    "half-weight duality orbits of %d are unbalanced" % v
                )
            factor *= binomial(len(orbit_pairs), bp.w)
            factor *= binomial(len(fixed), bp.t)
    return factor


@lru_cache(maxsize=None)
def _closed_counts_by_degree(n: int):
    ep = Counter()
    kp = Counter()
    for pmp in enumerate_E(n):
        factor = _structure_factor(pmp)
        if not factor:
            continue
        degree = pmp.partition.degree
        ep[degree] += factor
        if epsilon_sign(pmp) == -1:
            kp[degree] += factor
    return ep, kp


def count_EP_closed_form(n: int) -> int:
    ep, _ = _closed_counts_by_degree(n)
    return sum(ep.values())


def count_KP_closed_form(n: int) -> int:
    _, kp = _closed_counts_by_degree(n)
    return sum(kp.values())


def ext_dimension(n: int, method: str = "formula"):
    """Total and graded dimension of the extension invariants.

    Half the sum of the product-invariant dimension and the swap-fixed
    count, minus the kernel count, applied degree by degree.  Both halves
    can come from closed-form counting (method "formula") or from explicit
    label enumeration (method "catalog").
    """
    if n < 2 or n % 2:
        raise ValueError("need an even n >= 2")
    if method not in ("formula", "catalog"):
        raise ValueError("method must be 'formula' or 'catalog'")
    prod = product_dimension(n, n // 2, method=method)
    if method == "formula":
        ep, kp = _closed_counts_by_degree(n)
    else:
        ep = Counter(label.degree for label in enumerate_EP(n))
        kp = Counter(label.degree for label in enumerate_KP(n))
    graded = {}
    for degree in set(prod.as_dict()) | set(ep) | set(kp):
        p, e, k = prod[degree], ep[degree], kp[degree]
        if (p + e) % 2:
            raise InternalConsistencyError(
                "odd orbit count %d + %d in degree %d" % (p, e, degree)
            )
        value = (p + e) // 2 - k
        if value < 0:
            raise InternalConsistencyError(
                "negative dimension in degree %d" % degree
            )
        graded[degree] = value
    table = PoincareTable.from_dict(graded)
    return table.total, table
