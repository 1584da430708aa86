"""Graded trace series of symmetric-group actions on configuration spaces.

A :class:`TraceSeries` assigns to every cycle type of the symmetric group
on m letters the alternating-sign graded trace

    sum_i (-1)^i tr(alpha : H_c^i) T^i

of a permutation alpha of that type.  Under this convention the entry at
the identity is the compact-support Poincaré polynomial evaluated at -T.

Denominator clearing
--------------------
The closed trace formula for configuration spaces is a product over cycle
lengths d of falling factorials of divisor sums that individually carry
1/(d T^d) factors.  Multiplying each falling factorial through by d^x T^(dx)
turns it into  prod_{i<x} (B_d - i*d*T^d)  with

    B_d(T) = sum_{e | d} mu(d/e) * T^(d-e) * N(T^e),      N(T) = pc(-T),

which lives entirely in Z[T]: the two forms are equal because
c^x * (A)(A-1)...(A-x+1) = (cA)(cA-c)...(cA-(x-1)c).  All arithmetic here
stays in the cleared form; rational numbers never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from math import factorial, gcd
from typing import Mapping

from . import limits
from .combinat import (
    CycleType,
    Permutation,
    all_cycle_types,
    divisors,
    euler_phi,
    mobius,
    representative,
    stable_partitions,
)
from .confspace import SpaceSpec, require
from .errors import ConsistencyError, CostCapExceeded
from .polyarith import LaurentPoly, falling_product


@dataclass(frozen=True, eq=False)
class TraceSeries:
    """A graded character presented as one Laurent polynomial per cycle type."""

    m: int
    values: Mapping[CycleType, LaurentPoly]

    def __post_init__(self):
        expected = all_cycle_types(self.m)
        if set(self.values) != set(expected):
            raise ValueError("series must be defined on every cycle type")

    def __getitem__(self, ctype: CycleType) -> LaurentPoly:
        return self.values[ctype]

    def identity_entry(self) -> LaurentPoly:
        return self.values[CycleType.identity(self.m)]

    def map_values(self, fn) -> "TraceSeries":
        return TraceSeries(self.m, {ct: fn(ct, v) for ct, v in self.values.items()})

    def scale(self, factor: LaurentPoly | int) -> "TraceSeries":
        return self.map_values(lambda _ct, v: v * factor)

    def __add__(self, other: "TraceSeries") -> "TraceSeries":
        if self.m != other.m:
            raise ValueError("cannot add series over different symmetric groups")
        return TraceSeries(
            self.m, {ct: v + other.values[ct] for ct, v in self.values.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TraceSeries):
            return NotImplemented
        return self.m == other.m and dict(self.values) == dict(other.values)


def _check_cycle_cap(m: int) -> None:
    cap = limits.cycle_type_max_m()
    if m > cap:
        raise CostCapExceeded(f"cycle-type computations are capped at m = {cap}")


def _check_enumeration_cap(m: int, blocks: int) -> None:
    # Full block enumeration grows like Bell numbers; the blocks == m case
    # needs no enumeration and is allowed up to the cycle-type cap.
    if blocks == m:
        _check_cycle_cap(m)
        return
    cap = limits.set_partition_max_m()
    if m > cap:
        raise CostCapExceeded(f"set-partition trace sums are capped at m = {cap}")


# ---------------------------------------------------------------------------
# cartesian powers
# ---------------------------------------------------------------------------


def power_trace(space: SpaceSpec, ctype: CycleType) -> LaurentPoly:
    """Graded trace of a type-``ctype`` permutation on H_c of the cartesian power.

    The trace of a single d-cycle is N(T^d) with N(T) = pc(-T); disjoint
    cycles multiply.  Valid for any finite-type space, no acyclicity
    needed.  The independent check is :func:`tensor_trace_oracle`.
    """
    _check_cycle_cap(ctype.m)
    n = space.pc.negate_var()
    result = LaurentPoly.one()
    for d in range(1, ctype.m + 1):
        x = ctype.x(d)
        if x:
            result = result * n.substitute(d) ** x
    return result


def power_series(space: SpaceSpec, m: int) -> TraceSeries:
    return TraceSeries(m, {ct: power_trace(space, ct) for ct in all_cycle_types(m)})


def tensor_trace_oracle(dims: tuple[int, ...], ctype: CycleType) -> LaurentPoly:
    """Brute-force graded trace on the m-fold tensor power.

    ``dims[k]`` is the dimension in degree k.  A permutation acts on basis
    tensors by permuting factors with the Koszul sign; only tensors
    constant on cycles contribute to the trace.  Cost guard: total
    dimension <= 4 and m <= 6.
    """
    if sum(dims) > 4 or ctype.m > 6:
        raise CostCapExceeded("tensor trace oracle is limited to dim <= 4, m <= 6")
    degrees = [k for k, n in enumerate(dims) for _ in range(n)]
    alpha = representative(ctype)
    cycles = alpha.cycles()
    m = ctype.m
    total = LaurentPoly.zero()
    for assignment in iter_product(range(len(degrees)), repeat=len(cycles)):
        tup = [0] * m
        for cyc, basis_idx in zip(cycles, assignment):
            for pos in cyc:
                tup[pos] = basis_idx
        degs = [degrees[b] for b in tup]
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if alpha(i) > alpha(j) and degs[i] % 2 and degs[j] % 2:
                    sign = -sign
        d_total = sum(degs)
        coeff = sign if d_total % 2 == 0 else -sign
        total = total + LaurentPoly.term(coeff, d_total)
    return total


# ---------------------------------------------------------------------------
# ordered configuration spaces
# ---------------------------------------------------------------------------


def _divisor_kernel(space: SpaceSpec, d: int) -> LaurentPoly:
    """B_d(T) = sum over e | d of mu(d/e) T^(d-e) N(T^e), the cleared d-cycle trace."""
    n = space.pc.negate_var()
    total = LaurentPoly.zero()
    for e in divisors(d):
        mu = mobius(d // e)
        if mu:
            total = total + mu * n.substitute(e) * LaurentPoly.term(1, d - e)
    return total


def config_trace(space: SpaceSpec, ctype: CycleType) -> LaurentPoly:
    """Graded trace of a type-``ctype`` permutation on H_c of the configuration space.

    Denominator-cleared closed formula:

        prod_d prod_{i < x_d} ( B_d(T) - i * d * T^d ).
    """
    require(space, "i_acyclic")
    _check_cycle_cap(ctype.m)
    result = LaurentPoly.one()
    for d in range(1, ctype.m + 1):
        x = ctype.x(d)
        if x:
            result = result * falling_product(
                _divisor_kernel(space, d), LaurentPoly.term(d, d), x
            )
    return result


def config_series(space: SpaceSpec, m: int) -> TraceSeries:
    return TraceSeries(m, {ct: config_trace(space, ct) for ct in all_cycle_types(m)})


# ---------------------------------------------------------------------------
# multiplicity strata, by direct trace concentration
# ---------------------------------------------------------------------------


def exactly_trace(
    space: SpaceSpec, distinct: int, m: int, alpha: Permutation
) -> LaurentPoly:
    """Trace of ``alpha`` on the stratum of tuples with exactly ``distinct`` values.

    The stratum splits into configuration-space copies indexed by set
    partitions; the trace concentrates on the alpha-stable ones, each
    contributing the configuration trace of the induced block permutation.
    """
    require(space, "i_acyclic")
    if alpha.m != m:
        raise ValueError("permutation size must match m")
    if distinct < 1 or distinct > m:
        raise ValueError("need 1 <= distinct <= m")
    _check_enumeration_cap(m, distinct)
    total = LaurentPoly.zero()
    for _p, beta in stable_partitions(alpha, distinct):
        total = total + config_trace(space, beta.cycle_type())
    return total


def at_most_trace(
    space: SpaceSpec, distinct: int, m: int, alpha: Permutation
) -> LaurentPoly:
    """Trace of ``alpha`` on tuples with at most ``distinct`` values.

    Telescopes over the exact strata with one degree shift per step:
    sum_a T^a * exactly_trace(distinct - a).  The step-a stratum enters
    through an a-fold shifted exact sequence, which in the alternating
    trace convention contributes a plain T^a factor.
    """
    require(space, "i_acyclic")
    if distinct < 1 or distinct > m:
        raise ValueError("need 1 <= distinct <= m")
    total = LaurentPoly.zero()
    for a in range(distinct):
        total = total + LaurentPoly.term(1, a) * exactly_trace(
            space, distinct - a, m, alpha
        )
    return total


def exactly_series(space: SpaceSpec, distinct: int, m: int) -> TraceSeries:
    """The full character series of the exact stratum, one entry per cycle type."""
    return induce_blocks(config_series(space, distinct), m)


# ---------------------------------------------------------------------------
# induction operators on class functions
# ---------------------------------------------------------------------------


def induce_blocks(series: TraceSeries, m: int) -> TraceSeries:
    """Induce a class function from ``series.m`` block labels up to m letters.

    For each cycle type, sums the series over the block permutations
    induced on alpha-stable set partitions into ``series.m`` blocks.  This
    geometric form of induction is equivalent to the group-theoretic
    induced-character formula for the block stabilizers, and much cheaper.
    Acting with ``series.m == m`` is the identity.
    """
    blocks = series.m
    if blocks > m:
        raise ValueError("cannot induce downward")
    if blocks < 1:
        raise ValueError("induction needs at least one block")
    _check_enumeration_cap(m, blocks)
    values = {}
    for ct in all_cycle_types(m):
        alpha = representative(ct)
        total = LaurentPoly.zero()
        for _p, beta in stable_partitions(alpha, blocks):
            total = total + series.values[beta.cycle_type()]
        values[ct] = total
    return TraceSeries(m, values)


def _descending_chains(m: int, low: int) -> list[list[int]]:
    """All strictly decreasing integer chains m = c_0 > ... > c_t = low."""
    if low > m:
        return []
    if low == m:
        return [[m]]
    chains = []
    middles = list(range(low + 1, m))
    for mask in range(1 << len(middles)):
        mid = [middles[i] for i in range(len(middles)) if mask >> i & 1]
        chains.append([m] + sorted(mid, reverse=True) + [low])
    return chains


def induce_alternating(series: TraceSeries, m: int) -> TraceSeries:
    """Signed sum of iterated inductions over all descending chains to m.

    A chain with t steps carries the sign (-1)^(m - series.m) * (-1)^t, so
    the operator is the identity when series.m == m and inverts
    :func:`induce_blocks` inside alternating-sum identities.  The result
    is a virtual character: integer combinations, possibly negative.
    """
    low = series.m
    if low > m:
        raise ValueError("cannot induce downward")
    if m - low > limits.chain_span_max():
        raise CostCapExceeded(
            f"chain enumeration spans at most {limits.chain_span_max()} levels"
        )
    zero = {ct: LaurentPoly.zero() for ct in all_cycle_types(m)}
    total = TraceSeries(m, zero)
    base_sign = -1 if (m - low) % 2 else 1
    for chain in _descending_chains(m, low):
        t = len(chain) - 1
        current = series
        for target in reversed(chain[:-1]):
            current = induce_blocks(current, target)
        sign = base_sign * (-1 if t % 2 else 1)
        total = total + current.scale(sign)
    return total


def reconstruct_config_series(space: SpaceSpec, m: int) -> TraceSeries:
    """Rebuild the configuration-space character from cartesian-power data.

    sum over a < m of (-T)^a applied to the alternating induction of the
    power series on m-a letters; the (-T)^a factor transcribes the a-step
    degree shift into the alternating trace convention.  Must agree with
    :func:`config_series` on every cycle type; that equality is the
    central cross-validation of the whole induction machinery.
    """
    require(space, "i_acyclic")
    _check_cycle_cap(m)
    if m == 0:
        # the empty configuration space is a point; the telescoped sum
        # below starts at m = 1
        return TraceSeries(0, {CycleType.identity(0): LaurentPoly.one()})
    zero = {ct: LaurentPoly.zero() for ct in all_cycle_types(m)}
    total = TraceSeries(m, zero)
    for a in range(m):
        shifted = induce_alternating(power_series(space, m - a), m)
        factor = LaurentPoly.term((-1) ** a, a)
        total = total + shifted.scale(factor)
    return total


# ---------------------------------------------------------------------------
# quotient Poincaré polynomials
# ---------------------------------------------------------------------------


def quotient_poincare(
    series: TraceSeries, counts: Mapping[CycleType, int], order: int
) -> LaurentPoly:
    """Poincaré polynomial of the quotient by a subgroup with given class counts.

    Averages the trace series over the subgroup (grouped by cycle type),
    divides exactly by the order, and undoes the -T convention.  Exact
    divisibility and nonnegative output coefficients are both asserted:
    a failure means the series/subgroup pairing was invalid.
    """
    if order < 1:
        raise ValueError("group order must be positive")
    if sum(counts.values()) != order:
        raise ValueError("class counts must sum to the group order")
    total = LaurentPoly.zero()
    for ctype, count in counts.items():
        if ctype not in series.values:
            raise ValueError(f"class {ctype} does not act on {series.m} letters")
        total = total + count * series.values[ctype]
    averaged = total.divexact(order)
    result = averaged.negate_var()
    if not result.has_nonnegative_coeffs():
        raise ConsistencyError("quotient average produced negative Betti numbers")
    return result


def poincare_cyclic_config(space: SpaceSpec, m: int) -> LaurentPoly:
    """Poincaré polynomial of the quotient of the configuration space by the
    cyclic rotation group of order m.

    Closed divisor-sum form, computed in the cleared integer arithmetic:
    (1/m) sum over d | m of phi(d) times the configuration trace of a
    permutation with m/d cycles of length d.
    """
    require(space, "i_acyclic")
    if m < 1:
        raise ValueError("m must be positive")
    _check_cycle_cap(m)
    total = LaurentPoly.zero()
    for d in divisors(m):
        ctype = CycleType.from_parts([d] * (m // d), m)
        total = total + euler_phi(d) * config_trace(space, ctype)
    result = total.divexact(m).negate_var()
    if not result.has_nonnegative_coeffs():
        raise ConsistencyError("cyclic quotient produced negative Betti numbers")
    return result


def poincare_unordered_config(space: SpaceSpec, m: int) -> LaurentPoly:
    """Poincaré polynomial of the unordered configuration space.

    Full symmetric-group average: (1/m!) sum over cycle types of
    class_size * configuration trace, divisibility-checked and negated.
    """
    require(space, "i_acyclic")
    if m < 1:
        raise ValueError("m must be positive")
    _check_cycle_cap(m)
    total = LaurentPoly.zero()
    for ctype in all_cycle_types(m):
        total = total + ctype.class_size() * config_trace(space, ctype)
    result = total.divexact(factorial(m)).negate_var()
    if not result.has_nonnegative_coeffs():
        raise ConsistencyError("unordered quotient produced negative Betti numbers")
    return result


# ---------------------------------------------------------------------------
# symmetric and cyclic products
# ---------------------------------------------------------------------------


def poincare_symmetric_product(space: SpaceSpec, m: int) -> LaurentPoly:
    """Poincaré polynomial of the m-th symmetric product of X.

    The cartesian-power analogue of the unordered quotient: falling
    factorials become plain powers, so no acyclicity is needed.  The
    result is recomputed independently from the classical generating
    function and the two values are asserted equal.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _check_cycle_cap(m)
    total = LaurentPoly.zero()
    for ctype in all_cycle_types(m):
        total = total + ctype.class_size() * power_trace(space, ctype)
    result = total.divexact(factorial(m)).negate_var()
    oracle = _symmetric_product_generating_function(space.pc, m)
    if result != oracle:
        raise ConsistencyError(
            "symmetric product disagrees with its generating function: "
            f"{result} vs {oracle}"
        )
    return result


def poincare_cyclic_product(space: SpaceSpec, m: int) -> LaurentPoly:
    """Poincaré polynomial of the m-th cyclic product of X.

    Divisor average of cartesian-power traces; cross-checked against the
    generic subgroup-averaging route over the rotation group.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _check_cycle_cap(m)
    total = LaurentPoly.zero()
    for d in divisors(m):
        ctype = CycleType.from_parts([d] * (m // d), m)
        total = total + euler_phi(d) * power_trace(space, ctype)
    result = total.divexact(m).negate_var()
    counts: dict[CycleType, int] = {}
    for k in range(m):
        ctype = _rotation_power_type(m, k)
        counts[ctype] = counts.get(ctype, 0) + 1
    oracle = quotient_poincare(power_series(space, m), counts, m)
    if result != oracle:
        raise ConsistencyError("cyclic product disagrees with subgroup averaging")
    return result


def _rotation_power_type(m: int, k: int) -> CycleType:
    """Cycle type of the k-th power of an m-cycle."""
    d = m // gcd(m, k) if k else 1
    return CycleType.from_parts([d] * (m // d), m)


def _symmetric_product_generating_function(pc: LaurentPoly, m: int) -> LaurentPoly:
    """Coefficient of t^m in prod over degrees k of
    (1 + x^k t)^(b_k)   [k odd]   and   (1 - x^k t)^(-b_k)   [k even],

    where b_k are the coefficients of ``pc``; the result is a polynomial
    in x graded like the Poincaré polynomial of the symmetric product.
    """
    from math import comb

    series: list[LaurentPoly] = [LaurentPoly.one()] + [
        LaurentPoly.zero() for _ in range(m)
    ]
    for k, b in pc.items():
        if b == 0:
            continue
        if k < 0:
            raise ValueError("generating function needs nonnegative exponents")
        factor = []
        for j in range(m + 1):
            if k % 2 == 1:
                if j > b:
                    break
                factor.append(LaurentPoly.term(comb(b, j), k * j))
            else:
                factor.append(LaurentPoly.term(comb(b + j - 1, j), k * j))
        new = [LaurentPoly.zero() for _ in range(m + 1)]
        for i in range(m + 1):
            if series[i].is_zero():
                continue
            for j, f in enumerate(factor):
                if i + j > m:
                    break
                new[i + j] = new[i + j] + series[i] * f
        series = new
    return series[m]
