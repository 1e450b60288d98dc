"""Binary markings on cycles and their rotation-invariant gap words.

A marking of [n] restricts to each consecutive cycle interval of a partition;
what survives conjugation by the centralizer is the cyclic word of zero-gaps
between marked positions.  This module builds those gap words, the complement
duality, the admissibility predicate, the sets Pi(lam, d) of admissible
weight-d words, and the self-dual words at half weight together with their
closed-form count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .core_combinatorics import (
    Partition,
    Word,
    min_rotation,
    odd_prime_factors,
)
from .errors import InternalConsistencyError


@dataclass(frozen=True)
class DeltaMap:
    """A 0/1 marking of the points 1..n."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)


@dataclass(frozen=True)
class InvariantCycle:
    """A canonical cyclic gap word on a cycle of a given length.

    gaps is None for the empty marking.  A non-empty word with d entries
    records the zeros strictly between consecutive marked positions read
    cyclically, so its entries sum to length - d.  Stored in minimal
    rotation form.
    """

    length: int
    gaps: Optional[Word]

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("cycle length must be positive")
        if self.gaps is None:
            return
        gaps = tuple(self.gaps)
        object.__setattr__(self, "gaps", gaps)
        d = len(gaps)
        if not 1 <= d <= self.length:
            raise ValueError("gap word length out of range")
        if any(g < 0 for g in gaps):
            raise ValueError("gaps must be non-negative")
        if sum(gaps) != self.length - d:
            raise ValueError("gap word must sum to length - weight")
        if gaps != min_rotation(gaps)[0]:
            raise ValueError("gap word must be in minimal rotation form")

    @classmethod
    def empty(cls, length: int) -> "InvariantCycle":
        return cls(length, None)

    @classmethod
    def from_gaps(cls, length: int, gaps: Sequence[int]) -> "InvariantCycle":
        return cls(length, min_rotation(gaps)[0])

    @property
    def weight(self) -> int:
        return 0 if self.gaps is None else len(self.gaps)

    def rotation_multiplicity(self) -> int:
        return 1 if self.gaps is None else min_rotation(self.gaps)[1]

    def __str__(self):
        if self.gaps is None:
            return "()"
        return "(" + ",".join(str(g) for g in self.gaps) + ")"


def cycle_sort_key(chi: InvariantCycle):
    """Listing order: by weight, the empty word below everything."""
    return (chi.weight, chi.gaps or ())


def cycle_block_key(chi: InvariantCycle):
    """Canonical order inside a block: weight descending, then word."""
    return (-chi.weight, chi.gaps or ())


def _gap_word(positions: Sequence[int], lam: int, printed_last=False) -> Word:
    """Raw gap word of marked positions (1-based, ascending) on a lam-cycle.

    The last coordinate closes the cycle: zeros from the last marked position
    back around to the first.  printed_last=True drops the -1 from that
    coordinate; it exists only so a diagnostic test can show that reading
    breaks the sum rule and the complement duality.
    """
    d = len(positions)
    gaps = [positions[t + 1] - positions[t] - 1 for t in range(d - 1)]
    last = lam - positions[-1] + positions[0]
    if not printed_last:
        last -= 1
    gaps.append(last)
    return tuple(gaps)


def cycle_from_bits(lam: int, bits: Sequence[int]) -> InvariantCycle:
    """Gap word of a 0/1 sequence of length lam read cyclically."""
    if len(bits) != lam:
        raise ValueError("bit word length must equal the cycle length")
    positions = [t + 1 for t, b in enumerate(bits) if b]
    if not positions:
        return InvariantCycle.empty(lam)
    return InvariantCycle.from_gaps(lam, _gap_word(positions, lam))


def _bits_of(chi: InvariantCycle) -> Tuple[int, ...]:
    """One representative bit word of the necklace (marked at position 1)."""
    if chi.gaps is None:
        return (0,) * chi.length
    bits = []
    for g in chi.gaps:
        bits.append(1)
        bits.extend([0] * g)
    return tuple(bits)


def delta_from_permutation(s, q: int) -> DeltaMap:
    """Marking with bit i set iff s sends i into the top q values.

    s may be a permutation object with 1-based images or a plain image tuple.
    """
    images = tuple(getattr(s, "images", s))
    n = len(images)
    if not 0 <= q <= n:
        raise ValueError("need 0 <= q <= n")
    return DeltaMap(tuple(0 if im <= n - q else 1 for im in images))


def block_support(delta: DeltaMap, lam: Partition, i: int) -> Tuple[int, ...]:
    """Marked positions inside the i-th part interval, ascending, 1-based."""
    if delta.n != lam.n:
        raise ValueError("marking length must match the partition total")
    start = lam.block_start(i)
    lam_i = lam.parts[i - 1]
    return tuple(
        p for p in range(start + 1, start + lam_i + 1) if delta.bits[p - 1]
    )


def invariant_cycle(delta: DeltaMap, lam: Partition, i: int) -> InvariantCycle:
    """Canonical gap word of the marking restricted to the i-th cycle."""
    support = block_support(delta, lam, i)
    lam_i = lam.parts[i - 1]
    if not support:
        return InvariantCycle.empty(lam_i)
    start = lam.block_start(i)
    relative = [p - start for p in support]
    return InvariantCycle.from_gaps(lam_i, _gap_word(relative, lam_i))


def dual_cycle(chi: InvariantCycle) -> InvariantCycle:
    """Gap word of the complemented marking on the same cycle.

    An involution exchanging weight d and weight length - d.
    """
    bits = _bits_of(chi)
    return cycle_from_bits(chi.length, tuple(1 - b for b in bits))


def cycle_admissible(chi: InvariantCycle) -> bool:
    """Whether the cycle can carry a nonzero invariant.

    Parts of length 1 and 2 are unconstrained.  For length >= 3 the weight
    must be strictly between 0 and the length, and the rotation multiplicity
    of the gap word is forced: exactly 1 unless the length is 2 mod 4, in
    which case up to 2.
    """
    lam = chi.length
    if lam <= 2:
        return True
    d = chi.weight
    if not 1 <= d <= lam - 1:
        return False
    mult = chi.rotation_multiplicity()
    if lam % 4 == 2:
        return mult <= 2
    return mult == 1


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_Pi(lam_i: int, d: int) -> Tuple[InvariantCycle, ...]:
    """All admissible weight-d words on a cycle of length lam_i, ascending."""
    if lam_i < 1:
        raise ValueError("cycle length must be positive")
    if not 0 <= d <= lam_i:
        raise ValueError("need 0 <= d <= lam_i")
    if d == 0:
        empty = InvariantCycle.empty(lam_i)
        return (empty,) if cycle_admissible(empty) else ()
    seen = set()
    for comp in _weak_compositions(lam_i - d, d):
        chi = InvariantCycle.from_gaps(lam_i, comp)
        if chi not in seen and cycle_admissible(chi):
            seen.add(chi)
    return tuple(sorted(seen, key=cycle_sort_key))


@lru_cache(maxsize=None)
def enumerate_selfdual(d: int) -> Tuple[InvariantCycle, ...]:
    """Complement-self-dual weight-d words on a cycle of length 2d.

    Enumerates the bit words of length 2d whose second half complements the
    first, discards those whose complement already appears at a rotation by
    a proper divisor of d, and canonicalizes the survivors.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    n2 = 2 * d
    mask = (1 << n2) - 1
    half = (1 << d) - 1
    shifts = [s for s in range(1, d) if d % s == 0]

    def rot(x, r):
        return ((x << r) | (x >> (n2 - r))) & mask

    canon = set()
    for seed in range(1 << d):
        x = seed | ((~seed & half) << d)
        comp = ~x & mask
        if any(rot(x, s) == comp for s in shifts):
            continue
        canon.add(min(rot(x, r) for r in range(n2)))
    out = {
        cycle_from_bits(n2, tuple((x >> t) & 1 for t in range(n2)))
        for x in canon
    }
    if len(out) != len(canon):
        raise InternalConsistencyError("bit and gap canonical forms disagree")
    return tuple(sorted(out, key=cycle_sort_key))


def selfdual_count_closed_form(d: int) -> int:
    """Count of complement-self-dual weight-d words on a 2d-cycle.

    Inclusion-exclusion over the odd prime divisors of d, divided by the 2d
    rotations; the division must be exact.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    primes = sorted(odd_prime_factors(d))
    total = 2 ** d
    for r in range(1, len(primes) + 1):
        for sub in itertools.combinations(primes, r):
            prod = 1
            for p in sub:
                prod *= p
            total += (-1) ** r * 2 ** (d // prod)
    if total % (2 * d) != 0:
        raise InternalConsistencyError(
            "self-dual count %d not divisible by %d" % (total, 2 * d)
        )
    return total // (2 * d)
