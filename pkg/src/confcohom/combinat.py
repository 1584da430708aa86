"""Partitions, cycle types, set partitions, Stirling numbers, permutations.

Conventions
-----------
* Integer partitions are decreasing tuples of positive parts.
* A :class:`CycleType` stores the multiplicity vector (x_1, ..., x_m) where
  x_d counts cycles of length d; it doubles as a conjugacy-class label of
  the symmetric group on m letters and as a Young diagram.
* Permutations act on {0, ..., m-1}; set-partition blocks use the same
  ground set and are canonically ordered by least element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CostCapExceeded
from . import limits


# ---------------------------------------------------------------------------
# integer partitions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(m: int, length: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of m as decreasing tuples, in descending lex order.

    With ``length`` given, only partitions with exactly that many parts are
    returned.  partitions(0) yields the single empty partition.
    """
    if m < 0:
        raise ValueError("partitions of a negative integer")
    result = []

    def extend(remaining: int, max_part: int, prefix: tuple[int, ...]):
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(m, m if m else 1, ())
    if length is not None:
        result = [p for p in result if len(p) == length]
    return tuple(result)


# ---------------------------------------------------------------------------
# cycle types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation of m letters, as multiplicities.

    ``mult[d-1]`` is the number of cycles of length d; the weighted sum
    over d of d * mult[d-1] equals m.
    """

    m: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.mult) != self.m:
            raise ValueError("multiplicity vector must have length m")
        if sum(d * x for d, x in enumerate(self.mult, start=1)) != self.m:
            raise ValueError(f"multiplicities {self.mult} do not sum to {self.m}")

    @staticmethod
    def from_parts(parts: tuple[int, ...] | list[int], m: int | None = None) -> "CycleType":
        total = sum(parts)
        if m is None:
            m = total
        elif m != total:
            raise ValueError(f"parts sum to {total}, expected {m}")
        mult = [0] * m
        for p in parts:
            if p < 1:
                raise ValueError("parts must be positive")
            mult[p - 1] += 1
        return CycleType(m, tuple(mult))

    @staticmethod
    def identity(m: int) -> "CycleType":
        return CycleType(m, (m,) + (0,) * (m - 1)) if m else CycleType(0, ())

    @property
    def parts(self) -> tuple[int, ...]:
        out = []
        for d in range(self.m, 0, -1):
            out.extend([d] * self.mult[d - 1])
        return tuple(out)

    @property
    def num_cycles(self) -> int:
        return sum(self.mult)

    @property
    def fixed_points(self) -> int:
        return self.mult[0] if self.m else 0

    def x(self, d: int) -> int:
        """Number of cycles of length d (zero outside 1..m)."""
        if 1 <= d <= self.m:
            return self.mult[d - 1]
        return 0

    def class_size(self) -> int:
        """Number of permutations with this cycle type: m!/prod(x_d! d^x_d)."""
        denom = 1
        for d in range(1, self.m + 1):
            x = self.mult[d - 1]
            denom *= math.factorial(x) * d**x
        return math.factorial(self.m) // denom

    def sign(self) -> int:
        """Signature: (-1)^(m - number of cycles)."""
        return -1 if (self.m - self.num_cycles) % 2 else 1

    def __str__(self) -> str:
        if self.m == 0:
            return "()"
        terms = [f"{d}^{x}" for d, x in enumerate(self.mult, start=1) if x]
        return ",".join(terms)


@lru_cache(maxsize=None)
def all_cycle_types(m: int) -> tuple[CycleType, ...]:
    """Cycle types of the symmetric group on m letters, canonical order."""
    return tuple(CycleType.from_parts(p, m) for p in partitions(m))


# ---------------------------------------------------------------------------
# Stirling numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling_second(i: int, j: int) -> int:
    """Number of partitions of an i-set into j nonempty blocks.

    Computed by the additive recurrence and cross-checked against the
    inclusion-exclusion surjection count; both routes must agree exactly.
    """
    if i < 0 or j < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if i == 0 and j == 0:
        value = 1
    elif i == 0 or j == 0:
        value = 0
    elif j > i:
        value = 0
    else:
        value = stirling_second(i - 1, j - 1) + j * stirling_second(i - 1, j)
    explicit = _stirling_second_explicit(i, j)
    if value != explicit:
        raise AssertionError(
            f"Stirling recurrence {value} != explicit formula {explicit} at ({i},{j})"
        )
    return value


def _stirling_second_explicit(i: int, j: int) -> int:
    # (1/j!) sum_k (-1)^(j-k) C(j,k) k^i, with 0^0 = 1.
    total = sum((-1) ** (j - k) * math.comb(j, k) * k**i for k in range(j + 1))
    q, r = divmod(total, math.factorial(j))
    assert r == 0
    return q


@lru_cache(maxsize=None)
def stirling_first_signed(i: int, j: int) -> int:
    """Coefficients of the falling factorial: X(X-1)..(X-i+1) = sum s(i,j) X^j."""
    if i < 0 or j < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if i == 0 and j == 0:
        return 1
    if i == 0 or j == 0:
        return 0
    if j > i:
        return 0
    return stirling_first_signed(i - 1, j - 1) - (i - 1) * stirling_first_signed(i - 1, j)


def stirling_first_unsigned(i: int, j: int) -> int:
    """Number of permutations of an i-set that are products of j cycles."""
    value = stirling_first_signed(i, j)
    return -value if (i - j) % 2 else value


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError("factorization requires n >= 1")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            factors.append((d, k))
        d += 1
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def mobius(n: int) -> int:
    """Möbius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    factors = _factorize(n)
    if any(k > 1 for _, k in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler totient."""
    value = n
    for p, _ in _factorize(n):
        value = value // p * (p - 1)
    return value


def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of n."""
    _factorize(n)  # validates n >= 1
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Permutation of {0, ..., m-1} stored by its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @property
    def m(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(m: int) -> "Permutation":
        return Permutation(tuple(range(m)))

    @staticmethod
    def from_cycles(m: int, cycles: list[list[int]], one_based: bool = False) -> "Permutation":
        """Build from disjoint cycles; ``one_based`` shifts labels down by 1."""
        images = list(range(m))
        seen: set[int] = set()
        for cycle in cycles:
            pts = [c - 1 for c in cycle] if one_based else list(cycle)
            for p in pts:
                if not 0 <= p < m:
                    raise ValueError(f"cycle entry {p} out of range for m={m}")
                if p in seen:
                    raise ValueError(f"cycles are not disjoint at {p}")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return Permutation(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.m != other.m:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[other.images[i]] for i in range(self.m)))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[list[int]]:
        seen = [False] * self.m
        out = []
        for start in range(self.m):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(cycle)
        return out

    def cycle_type(self) -> CycleType:
        mult = [0] * self.m
        for cycle in self.cycles():
            mult[len(cycle) - 1] += 1
        return CycleType(self.m, tuple(mult))

    def sign(self) -> int:
        return self.cycle_type().sign()


def representative(ctype: CycleType) -> Permutation:
    """Canonical permutation of the given type: cycles laid out consecutively."""
    images = list(range(ctype.m))
    pos = 0
    for part in ctype.parts:
        block = list(range(pos, pos + part))
        for a, b in zip(block, block[1:] + block[:1]):
            images[a] = b
        pos += part
    return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SetPartition:
    """Partition of {0, ..., m-1} into disjoint nonempty blocks.

    Blocks are sorted tuples, listed in increasing order of least element;
    that order is the canonical block numbering used everywhere below.
    """

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(x for b in self.blocks for x in b)
        if flat != list(range(self.m)):
            raise ValueError("blocks must partition the ground set")
        if list(self.blocks) != sorted((tuple(sorted(b)) for b in self.blocks), key=min):
            raise ValueError("blocks must be sorted canonically")

    @staticmethod
    def from_blocks(m: int, blocks) -> "SetPartition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=min))
        return SetPartition(m, canon)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_index(self) -> dict[int, int]:
        idx = {}
        for k, block in enumerate(self.blocks):
            for x in block:
                idx[x] = k
        return idx

    def apply(self, alpha: Permutation) -> "SetPartition":
        return SetPartition.from_blocks(
            self.m, [[alpha(x) for x in block] for block in self.blocks]
        )

    def block_sizes(self) -> CycleType:
        """The block-size profile as a Young diagram on m boxes."""
        return CycleType.from_parts(sorted((len(b) for b in self.blocks), reverse=True), self.m)

    def __str__(self) -> str:
        return "|".join("".join(str(x + 1) for x in block) for block in self.blocks)


@lru_cache(maxsize=None)
def set_partitions(m: int, blocks: int) -> tuple[SetPartition, ...]:
    """All partitions of {0,...,m-1} into exactly ``blocks`` nonempty blocks.

    Enumerated through restricted-growth strings, so the list is
    deterministic and each partition arrives in canonical block order.
    The count is the Stirling number of the second kind.
    """
    if m < 1 or blocks < 1:
        raise ValueError("set_partitions requires m >= 1 and blocks >= 1")
    if m > limits.set_partition_hard_cap():
        raise CostCapExceeded(f"set partitions of {m} elements exceed the hard cap")
    if blocks > m:
        return ()
    out = []
    labels = [0] * m

    def grow(i: int, used: int):
        if i == m:
            if used == blocks:
                grouped: list[list[int]] = [[] for _ in range(used)]
                for x, lab in enumerate(labels):
                    grouped[lab].append(x)
                out.append(SetPartition.from_blocks(m, grouped))
            return
        # prune: remaining slots must still allow reaching `blocks` labels
        if used + (m - i) < blocks:
            return
        limit = min(used, blocks - 1)
        for lab in range(limit + 1):
            labels[i] = lab
            grow(i + 1, used + (1 if lab == used else 0))

    grow(0, 0)
    return tuple(out)


def stable_partitions(
    alpha: Permutation, blocks: int
) -> list[tuple[SetPartition, Permutation]]:
    """Set partitions into ``blocks`` blocks preserved by ``alpha``.

    Each stable partition p comes with the permutation induced on its
    blocks, expressed through the canonical least-element block order.
    The induced block permutation is only canonical up to that ordering
    choice; all consumers are class functions, so any consistent order
    yields the same traces.
    """
    m = alpha.m
    if blocks == m:
        # Only the partition into singletons; the block action is alpha itself.
        singletons = SetPartition.from_blocks(m, [[i] for i in range(m)])
        return [(singletons, alpha)]
    found = []
    for p in set_partitions(m, blocks):
        if p.apply(alpha) == p:
            idx = p.block_index()
            beta = Permutation(tuple(idx[alpha(block[0])] for block in p.blocks))
            found.append((p, beta))
    return found


# ---------------------------------------------------------------------------
# subgroup closure
# ---------------------------------------------------------------------------


def group_closure(
    generators: list[Permutation] | tuple[Permutation, ...],
    m: int,
    cap: int = limits.DEFAULT_CLOSURE_CAP,
) -> tuple[int, dict[CycleType, int]]:
    """Close a generator set under composition; count elements per cycle type.

    Returns (order, counts).  The empty generator set yields the trivial
    group.  Breadth-first multiplication; aborts past ``cap`` elements.
    """
    gens = tuple(g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in generators)
    for g in gens:
        if g.m != m:
            raise ValueError(f"generator acts on {g.m} letters, expected {m}")
    identity = Permutation.identity(m)
    seen = {identity.images}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = g * h
                if prod.images not in seen:
                    if len(seen) >= cap:
                        raise CostCapExceeded(
                            f"subgroup closure exceeded the cap of {cap} elements"
                        )
                    seen.add(prod.images)
                    nxt.append(prod)
        frontier = nxt
    counts: dict[CycleType, int] = {}
    for images in seen:
        ct = Permutation(images).cycle_type()
        counts[ct] = counts.get(ct, 0) + 1
    return len(seen), counts
