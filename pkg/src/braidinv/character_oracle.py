"""Brute-force verification path, independent of the catalog formulas.

Builds the centralizer of the canonical cycle product of a partition, its
distinguished 1-dimensional character, the double cosets against a chosen
subgroup, and the Mackey inner products with the trivial character, using
exact cyclotomic integer arithmetic throughout.  Nothing here consults the
admissibility predicate or the counting formulas, so agreement between the
two paths is a real check.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .core_combinatorics import Partition, all_partitions
from .cycle_invariants import delta_from_permutation
from .errors import CapabilityError, InternalConsistencyError
from .product_catalog import PoincareTable

log = logging.getLogger(__name__)

GENERIC_COSET_LIMIT = 10
ORACLE_LIMIT = 8
ORACLE_LONG_LIMIT = 10


def _comp(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Images of the composition a after b, both 1-based image tuples."""
    return tuple(a[x - 1] for x in b)


def _inv(a: Tuple[int, ...]) -> Tuple[int, ...]:
    out = [0] * len(a)
    for i, im in enumerate(a):
        out[im - 1] = i + 1
    return tuple(out)


def _tuple_sign(images: Tuple[int, ...]) -> int:
    seen = [False] * len(images)
    sign = 1
    for i in range(len(images)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _cycle_count(images: Tuple[int, ...]) -> int:
    seen = [False] * len(images)
    count = 0
    for i in range(len(images)):
        if seen[i]:
            continue
        count += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
    return count


@dataclass(frozen=True)
class Perm:
    """A permutation of 1..n stored as its tuple of images."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("images must be a bijection of 1..n")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Perm":
        out = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)((cycle[0],))):
                out[a - 1] = b
        return cls(tuple(out))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(_comp(self.images, other.images))

    def inverse(self) -> "Perm":
        return Perm(_inv(self.images))

    def sign(self) -> int:
        return _tuple_sign(self.images)

    def __str__(self):
        return "[" + " ".join(str(x) for x in self.images) + "]"


@dataclass(frozen=True)
class GroupSpec:
    """One of the subgroups the oracle can invariantize against."""

    variant: str
    n: int
    q: int

    def __post_init__(self):
        if self.variant not in ("product", "extension", "full"):
            raise ValueError("unknown group variant")
        if self.n < 1:
            raise ValueError("need n >= 1")
        if self.variant == "product" and not 0 <= self.q <= self.n:
            raise ValueError("need 0 <= q <= n")
        if self.variant == "extension" and self.n != 2 * self.q:
            raise ValueError("the extension needs n = 2q")
        if self.variant == "full" and self.q != 0:
            raise ValueError("the full group takes q = 0")

    @classmethod
    def product(cls, n: int, q: int) -> "GroupSpec":
        return cls("product", n, q)

    @classmethod
    def extension(cls, q: int) -> "GroupSpec":
        return cls("extension", 2 * q, q)

    @classmethod
    def full(cls, n: int) -> "GroupSpec":
        return cls("full", n, 0)

    @property
    def order(self) -> int:
        if self.variant == "full":
            return math.factorial(self.n)
        base = math.factorial(self.n - self.q) * math.factorial(self.q)
        return 2 * base if self.variant == "extension" else base

    def sigma(self) -> Tuple[int, ...]:
        """The block-swapping reversal i -> n + 1 - i."""
        return tuple(range(self.n, 0, -1))

    def contains(self, images: Tuple[int, ...]) -> bool:
        if self.variant == "full":
            return True
        split = self.n - self.q
        if all(images[i] <= split for i in range(split)):
            return True
        if self.variant == "extension":
            flipped = tuple(self.n + 1 - x for x in images)
            return all(flipped[i] <= split for i in range(split))
        return False

    def members(self) -> Iterator[Tuple[int, ...]]:
        """All image tuples, lazily, in a deterministic order."""
        if self.variant == "full":
            for a in itertools.permutations(range(1, self.n + 1)):
                yield a
            return
        split = self.n - self.q
        lower = itertools.permutations(range(1, split + 1))
        for a in lower:
            for b in itertools.permutations(range(split + 1, self.n + 1)):
                yield a + b
        if self.variant == "extension":
            for a in itertools.permutations(range(1, split + 1)):
                for b in itertools.permutations(range(split + 1, self.n + 1)):
                    yield tuple(self.n + 1 - x for x in a + b)

    def generators(self) -> Tuple[Tuple[int, ...], ...]:
        """Adjacent transpositions of each factor, plus the reversal."""
        out = []
        split = self.n if self.variant == "full" else self.n - self.q
        for i in range(1, self.n):
            if i == split:
                continue
            images = list(range(1, self.n + 1))
            images[i - 1], images[i] = images[i], images[i - 1]
            out.append(tuple(images))
        if self.variant == "extension":
            out.append(self.sigma())
        return tuple(out)

    def describe(self) -> str:
        if self.variant == "full":
            return "full(%d)" % self.n
        if self.variant == "extension":
            return "extension(q=%d)" % self.q
        return "product(%d,%d)" % (self.n - self.q, self.q)


@dataclass(frozen=True)
class CentralizerPresentation:
    """Generators and bookkeeping for the centralizer of a cycle product."""

    lam: Partition
    cycle_generators: Tuple[Perm, ...]
    nu_generators: Tuple[Perm, ...]

    @property
    def order(self) -> int:
        out = 1
        for v, m in self.lam.blocks:
            out *= math.factorial(m) * v ** m
        return out

    def elements(self) -> Iterator[Perm]:
        for images, _ in _elements_with_exponents(self.lam):
            yield Perm(images)


@lru_cache(maxsize=None)
def build_centralizer(lam: Partition) -> CentralizerPresentation:
    """Consecutive cycles and adjacent rigid block swaps generating it."""
    n = lam.n
    cycles = []
    for i in range(1, lam.part_count + 1):
        start = lam.block_start(i)
        cycles.append(
            Perm.from_cycles(n, tuple(range(start + 1, start + lam.parts[i - 1] + 1)))
        )
    nus = []
    for i in range(1, lam.part_count):
        if lam.parts[i - 1] != lam.parts[i]:
            continue
        v = lam.parts[i - 1]
        start = lam.block_start(i)
        swaps = [(start + t + 1, start + v + t + 1) for t in range(v)]
        nus.append(Perm.from_cycles(n, *swaps))
    return CentralizerPresentation(lam, tuple(cycles), tuple(nus))


def canonical_cycle_product(lam: Partition) -> Perm:
    pres = build_centralizer(lam)
    images = Perm.identity(lam.n)
    for c in pres.cycle_generators:
        images = images * c
    return images


def _value_runs(lam: Partition):
    """Per distinct part value: the 0-based run of part indices carrying it."""
    runs = []
    pos = 0
    for v, m in lam.blocks:
        runs.append((v, tuple(range(pos, pos + m))))
        pos += m
    return runs


def _assemble(lam: Partition, block_map, exponents) -> Tuple[int, ...]:
    """Images of the element sending part i rigidly onto part block_map[i]
    after rotating part i by its exponent."""
    starts = [lam.block_start(i + 1) for i in range(lam.part_count)]
    out = [0] * lam.n
    for i in range(lam.part_count):
        v = lam.parts[i]
        target = starts[block_map[i]]
        e = exponents[i]
        for t in range(v):
            out[starts[i] + t] = target + (t + e) % v + 1
    return tuple(out)


@lru_cache(maxsize=8)
def _elements_with_exponents(lam: Partition):
    """Every centralizer element with its character data, materialized.

    Each entry is (images, (block_map, exponents)); the pair is the unique
    factorization into a rigid block permutation and in-cycle rotations.
    """
    runs = _value_runs(lam)
    out = []
    perms_per_run = [
        list(itertools.permutations(indices)) for _, indices in runs
    ]
    for arrangement in itertools.product(*perms_per_run):
        block_map = [0] * lam.part_count
        for (_, indices), placed in zip(runs, arrangement):
            for src, dst in zip(indices, placed):
                block_map[src] = dst
        for exponents in itertools.product(*[range(p) for p in lam.parts]):
            out.append(
                (_assemble(lam, block_map, exponents), (tuple(block_map), exponents))
            )
    return tuple(out)


def root_order(lam: Partition) -> int:
    """Exponent lattice: the lcm of the parts, doubled when odd."""
    L = 1
    for p in lam.parts:
        L = L * p // math.gcd(L, p)
    return L if L % 2 == 0 else 2 * L


def _decompose(lam: Partition, images: Tuple[int, ...]):
    """Unique (block_map, exponents) of a centralizer element, else None."""
    starts = [lam.block_start(i + 1) for i in range(lam.part_count)]
    block_of = {}
    for i in range(lam.part_count):
        for t in range(lam.parts[i]):
            block_of[starts[i] + t + 1] = i
    block_map = [0] * lam.part_count
    exponents = [0] * lam.part_count
    for i in range(lam.part_count):
        target = block_of[images[starts[i]]]
        if lam.parts[target] != lam.parts[i]:
            return None
        block_map[i] = target
        exponents[i] = (images[starts[i]] - starts[target] - 1) % lam.parts[i]
    if _assemble(lam, block_map, exponents) != images:
        return None
    return tuple(block_map), tuple(exponents)


def _character_exponent(lam: Partition, block_map, exponents, L: int) -> int:
    """Exponent of the character value on the element with this data.

    Rotation by e on a part of size p contributes e times the primitive
    p-th root, and e(p-1) to the sign; the block permutation contributes
    its sign on each even part value.  Signs embed at exponent L/2.
    """
    root = 0
    sign_parity = 0
    for p, e in zip(lam.parts, exponents):
        root += e * (L // p)
        sign_parity += e * (p - 1)
    for v, indices in _value_runs(lam):
        if v % 2:
            continue
        placed = tuple(block_map[i] for i in indices)
        rank = {b: t for t, b in enumerate(sorted(placed))}
        if _tuple_sign(tuple(rank[b] + 1 for b in placed)) == -1:
            sign_parity += 1
    return (root + (sign_parity % 2) * (L // 2)) % L


@lru_cache(maxsize=None)
def _cyclotomic(L: int) -> Tuple[int, ...]:
    """Coefficients of the L-th cyclotomic polynomial, ascending degree."""
    if L == 1:
        return (-1, 1)
    num = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d:
            continue
        num = _polydiv(num, list(_cyclotomic(d)))
    return tuple(num)


def _polydiv(num, den):
    """Exact polynomial quotient over the integers."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        if c % lead:
            raise InternalConsistencyError("inexact polynomial division")
        c //= lead
        out[shift] = c
        if c:
            for k, dk in enumerate(den):
                num[shift + k] -= c * dk
    if any(num):
        raise InternalConsistencyError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def _reduced(order: int, coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
    phi = _cyclotomic(order)
    deg = len(phi) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, deg - 1, -1):
        c = r[i]
        if not c:
            continue
        shift = i - deg
        for k, pk in enumerate(phi):
            r[shift + k] -= c * pk
    r = r[:deg]
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


@dataclass(frozen=True)
class CyclotomicSum:
    """An integer combination of L-th roots of unity, compared canonically."""

    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError("need one coefficient per exponent 0..L-1")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order: int) -> "CyclotomicSum":
        return cls(order, (0,) * order)

    @classmethod
    def monomial(cls, order: int, exponent: int, coefficient: int = 1):
        coeffs = [0] * order
        coeffs[exponent % order] = coefficient
        return cls(order, tuple(coeffs))

    def reduced(self) -> Tuple[int, ...]:
        return _reduced(self.order, self.coeffs)

    def __add__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        if self.order != other.order:
            raise ValueError("mismatched orders")
        return CyclotomicSum(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        if self.order != other.order:
            raise ValueError("mismatched orders")
        out = [0] * self.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % self.order] += a * b
        return CyclotomicSum(self.order, tuple(out))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicSum):
            return NotImplemented
        if self.order != other.order:
            return False
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash((self.order, self.reduced()))

    def integer_value(self) -> Optional[int]:
        """The sum as a plain integer, or None if it is not one."""
        r = self.reduced()
        if len(r) > 1:
            return None
        return r[0] if r else 0


def zeta_value(lam: Partition, z: Perm) -> CyclotomicSum:
    """The distinguished character of the centralizer, evaluated exactly."""
    if z.n != lam.n:
        raise ValueError("permutation degree must match the partition total")
    data = _decompose(lam, z.images)
    if data is None:
        raise ValueError("%s does not centralize the cycle product" % z)
    L = root_order(lam)
    block_map, exponents = data
    return CyclotomicSum.monomial(L, _character_exponent(lam, block_map, exponents, L))


def _coset_words(group: GroupSpec, lam: Partition):
    """Orbits of weight-q bit words under the centralizer position action,
    with the complement thrown in for the extension.  One lex-least word
    per orbit, sorted."""
    n, q = group.n, group.q
    if group.variant == "full":
        # a single coset; the all-late word reconstructs the identity
        return [tuple([0] * n)]
    pres = build_centralizer(lam)
    z_gens = [p.images for p in pres.cycle_generators + pres.nu_generators]
    words = set(itertools.permutations([0] * (n - q) + [1] * q))
    reps = []
    while words:
        seed = min(words)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            w = frontier.pop()
            nexts = [tuple(w[g[i] - 1] for i in range(n)) for g in z_gens]
            if group.variant == "extension":
                nexts.append(tuple(1 - b for b in w))
            for w2 in nexts:
                if w2 not in orbit:
                    orbit.add(w2)
                    frontier.append(w2)
        reps.append(min(orbit))
        words -= orbit
    return sorted(reps)


def _perm_of_word(word: Tuple[int, ...]) -> Perm:
    """A permutation whose marking is the given word: unmarked positions
    take the low values in order, marked positions the high ones."""
    n = len(word)
    q = sum(word)
    low = iter(range(1, n - q + 1))
    high = iter(range(n - q + 1, n + 1))
    return Perm(tuple(next(high) if b else next(low) for b in word))


def double_cosets(
    group: GroupSpec, lam: Partition, mode: str = "auto"
) -> Tuple[Perm, ...]:
    """One representative per (group, centralizer) double coset.

    mode "generic" partitions all of the symmetric group by a two-sided
    orbit search and is the ground truth; mode "delta" enumerates orbits
    of marking words, which the generic mode confirms at small n.  "auto"
    switches to words above n = 6.
    """
    if lam.n != group.n:
        raise ValueError("partition total must match the group degree")
    if mode == "auto":
        mode = "generic" if group.n <= 6 else "delta"
    if mode == "delta":
        return tuple(_perm_of_word(w) for w in _coset_words(group, lam))
    if mode != "generic":
        raise ValueError("mode must be 'auto', 'generic' or 'delta'")
    n = group.n
    if n > GENERIC_COSET_LIMIT:
        raise CapabilityError(
            "generic double cosets stop at n = %d; use the word mode"
            % GENERIC_COSET_LIMIT
        )
    pres = build_centralizer(lam)
    right = [p.images for p in pres.cycle_generators + pres.nu_generators]
    left = list(group.generators())
    todo = set(itertools.permutations(range(1, n + 1)))
    reps = []
    while todo:
        seed = min(todo)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            s = frontier.pop()
            for g in left:
                s2 = _comp(g, s)
                if s2 not in orbit:
                    orbit.add(s2)
                    frontier.append(s2)
            for z in right:
                s2 = _comp(s, z)
                if s2 not in orbit:
                    orbit.add(s2)
                    frontier.append(s2)
        reps.append(min(orbit))
        todo -= orbit
    return tuple(Perm(r) for r in sorted(reps))


def _isotropy_sum(s: Perm, lam: Partition, group: GroupSpec):
    """Coefficient counts of the character sum over the twisted isotropy.

    Iterates whichever of the group and the centralizer is smaller.
    Returns (counts per exponent, isotropy order)."""
    L = root_order(lam)
    counts = [0] * L
    total = 0
    pres = build_centralizer(lam)
    if group.order <= pres.order:
        s_inv = _inv(s.images)
        for g in group.members():
            z = _comp(s_inv, _comp(g, s.images))
            data = _decompose(lam, z)
            if data is None:
                continue
            counts[_character_exponent(lam, data[0], data[1], L)] += 1
            total += 1
    else:
        s_inv = _inv(s.images)
        for images, (block_map, exponents) in _elements_with_exponents(lam):
            if group.contains(_comp(s.images, _comp(images, s_inv))):
                counts[_character_exponent(lam, block_map, exponents, L)] += 1
                total += 1
    return counts, total


def isotropy_order(s: Perm, lam: Partition, group: GroupSpec) -> int:
    _, total = _isotropy_sum(s, lam, group)
    return total


def isotropy_inner_product(s: Perm, lam: Partition, group: GroupSpec) -> int:
    """Multiplicity of the trivial character in the twisted restriction.

    The reduced character sum must equal 0 or the isotropy order; anything
    else would violate the character axioms and raises.
    """
    counts, total = _isotropy_sum(s, lam, group)
    value = CyclotomicSum(root_order(lam), tuple(counts)).integer_value()
    if value == 0:
        return 0
    if value == total:
        return 1
    raise InternalConsistencyError(
        "character sum for %s on %s reduced to %r, expected 0 or %d"
        % (lam, s, value, total)
    )


def _check_oracle_scale(n: int, long_running: bool):
    if n <= ORACLE_LIMIT:
        return
    if long_running and n <= ORACLE_LONG_LIMIT:
        return
    raise CapabilityError(
        "oracle runs stop at n = %d (n = %d with long runs enabled)"
        % (ORACLE_LIMIT, ORACLE_LONG_LIMIT)
    )


def _lambda_contribution(args):
    group, parts, mode = args
    lam = Partition(parts)
    hits = 0
    for s in double_cosets(group, lam, mode=mode):
        hits += isotropy_inner_product(s, lam, group)
    return lam.degree, hits


def oracle_dimension(
    n: int,
    group: GroupSpec,
    long_running: bool = False,
    workers: int = 1,
    mode: str = "auto",
) -> PoincareTable:
    """Graded invariant dimension summed over cosets, degree by degree."""
    if group.n != n:
        raise ValueError("group degree must equal n")
    _check_oracle_scale(n, long_running)
    jobs = [(group, lam.parts, mode) for lam in all_partitions(n)]
    counts = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_lambda_contribution, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_lambda_contribution(job))
            log.debug("oracle %s: partition %s done", group.describe(), job[1])
    for degree, hits in sorted(results):
        if hits:
            counts[degree] += hits
    return PoincareTable.from_dict(counts)


def _stirling_degrees(n: int) -> Counter:
    """Degree table of the full cohomology: permutations counted by
    n minus their cycle count."""
    counts = Counter()
    for images in itertools.permutations(range(1, n + 1)):
        counts[n - _cycle_count(images)] += 1
    return counts


def total_rank_check(n: int, long_running: bool = False) -> bool:
    """Indices of the isotropy subgroups must recover the full cohomology.

    For every product split and the extension, the sum over partitions and
    cosets of the group order divided by the isotropy order is compared
    per degree with the permutation cycle counts.
    """
    _check_oracle_scale(n, long_running)
    expected = _stirling_degrees(n)
    groups = [GroupSpec.product(n, q) for q in range(n // 2 + 1)]
    if n % 2 == 0:
        groups.append(GroupSpec.extension(n // 2))
    ok = True
    for group in groups:
        got = Counter()
        for lam in all_partitions(n):
            for s in double_cosets(group, lam):
                h = isotropy_order(s, lam, group)
                if group.order % h:
                    raise InternalConsistencyError(
                        "isotropy order %d does not divide the group order" % h
                    )
                got[lam.degree] += group.order // h
        if got != expected:
            ok = False
            log.warning(
                "rank mismatch for %s: got %s expected %s",
                group.describe(),
                dict(sorted(got.items())),
                dict(sorted(expected.items())),
            )
    return ok
