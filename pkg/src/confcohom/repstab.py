"""Irreducible decompositions and empirical representation-stability checks.

The decomposition pipeline converts a compact-support trace series to its
Borel-Moore counterpart, extracts one cohomological degree, and expands it
into irreducible symmetric-group characters computed by the border-strip
recursion.  Stability is then *observed* on a finite window of m, never
proven: verdicts state that the data is consistent with the expected
monotonicity/constancy bounds on the inspected range.

Bookkeeping convention: an irreducible of the symmetric group on m letters
whose diagram has first row m - |core| is recorded under its ``core``, the
partition formed by the rows below the first.  A family of irreducibles
with a fixed core is comparable across different m, which is what makes
multiplicity tables meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from . import limits
from .charseries import TraceSeries, config_series, exactly_series
from .combinat import CycleType, all_cycle_types, partitions
from .confspace import SpaceSpec, require
from .errors import ConsistencyError, CostCapExceeded, HypothesisViolation
from .polyarith import LaurentPoly


# ---------------------------------------------------------------------------
# irreducible characters of symmetric groups
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def symmetric_group_character(shape: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Irreducible character indexed by ``shape`` at the class with parts ``mu``.

    Border-strip recursion over beta-numbers.  ``shape`` must be a
    decreasing partition and ``mu`` a list of cycle lengths of the same
    total size.
    """
    total = sum(shape)
    if total != sum(mu):
        raise ValueError(f"size mismatch: {shape} vs {mu}")
    if total > limits.cycle_type_max_m():
        raise CostCapExceeded("character recursion capped")
    if not shape:
        return 1
    t = mu[0]
    rest = mu[1:]
    k = len(shape)
    beta = [shape[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(beta)
    value = 0
    for i, b in enumerate(beta):
        if b < t or (b - t) in beta_set:
            continue
        height = sum(1 for c in beta if b - t < c < b)
        new_beta = sorted(beta[:i] + [b - t] + beta[i + 1 :], reverse=True)
        new_shape = tuple(
            new_beta[j] - (k - 1 - j) for j in range(k) if new_beta[j] - (k - 1 - j) > 0
        )
        sign = -1 if height % 2 else 1
        value += sign * symmetric_group_character(new_shape, rest)
    return value


@lru_cache(maxsize=None)
def irrep_dimension(shape: tuple[int, ...]) -> int:
    """Dimension of the irreducible with the given diagram, by hook lengths."""
    m = sum(shape)
    if not shape:
        return 1
    conjugate = [sum(1 for part in shape if part > j) for j in range(shape[0])]
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            hooks *= (part - j) + (conjugate[j] - i) - 1
    dim, rem = divmod(factorial(m), hooks)
    assert rem == 0
    return dim


# ---------------------------------------------------------------------------
# padded partitions
# ---------------------------------------------------------------------------


def pad_core(core: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Prepend the long first row: core (c_1 >= c_2 >= ...) becomes
    (m - |core|, c_1, ..., c_k), valid when m >= |core| + c_1."""
    size = sum(core)
    first = m - size
    if core and first < core[0]:
        raise ValueError(f"core {core} does not fit inside m = {m}")
    if first < 0:
        raise ValueError(f"core {core} too large for m = {m}")
    return (first,) + tuple(core) if first > 0 else tuple(core)


def unpad_shape(shape: tuple[int, ...]) -> tuple[int, ...]:
    """Drop the first row; the unique inverse of :func:`pad_core`."""
    return tuple(shape[1:])


# ---------------------------------------------------------------------------
# decomposition and Borel-Moore conversion
# ---------------------------------------------------------------------------


def decompose_series(series: TraceSeries, degree: int) -> dict[tuple[int, ...], int]:
    """Multiplicities of the irreducibles in one cohomological degree.

    Extracts the degree-``degree`` character from the alternating-sign
    series, then pairs it with every irreducible character.  Multiplicities
    must come out as nonnegative integers; anything else means the series
    was not the character of an actual module and raises.
    Keys of the result are cores (rows below the first); zero rows are
    omitted.
    """
    m = series.m
    sign = -1 if degree % 2 else 1
    chi = {ct: sign * series.values[ct].coeff(degree) for ct in all_cycle_types(m)}
    out: dict[tuple[int, ...], int] = {}
    for shape in partitions(m):
        total = 0
        for ct in all_cycle_types(m):
            total += ct.class_size() * chi[ct] * symmetric_group_character(shape, ct.parts)
        mult, rem = divmod(total, factorial(m))
        if rem:
            raise ConsistencyError(
                f"non-integer multiplicity for {shape} in degree {degree}"
            )
        if mult < 0:
            raise ConsistencyError(
                f"negative multiplicity {mult} for {shape} in degree {degree}"
            )
        if mult:
            out[unpad_shape(shape)] = mult
    return out


def borel_moore_series(
    series: TraceSeries, space_dim: int, dual_dim: int | None = None
) -> TraceSeries:
    """Convert a compact-support trace series to the Borel-Moore one.

    Each entry is multiplied by sgn^space_dim * (-T)^dual_dim and T is
    inverted; ``dual_dim`` defaults to m * space_dim, the dimension of the
    m-fold product, and must be overridden for strata of lower dimension.
    The permutation and its inverse share a cycle type, so inverting the
    group element is invisible here.  Applying the conversion twice with
    the same parameters is the identity: orientable duality is involutive.
    """
    m = series.m
    n = m * space_dim if dual_dim is None else dual_dim
    sign_total = -1 if n % 2 else 1

    def convert(ct: CycleType, v: LaurentPoly) -> LaurentPoly:
        s = sign_total * (ct.sign() if space_dim % 2 else 1)
        return LaurentPoly.term(s, n) * v.invert_var()

    return series.map_values(convert)


# ---------------------------------------------------------------------------
# stability diagnostics
# ---------------------------------------------------------------------------


@dataclass
class MultiplicityTable:
    """Multiplicities c(core)_m of one cohomological degree across a range of m."""

    degree: int
    m_values: tuple[int, ...]
    rows: dict[tuple[int, ...], dict[int, int]] = field(default_factory=dict)

    def value(self, core: tuple[int, ...], m: int) -> int:
        return self.rows.get(core, {}).get(m, 0)

    def cores(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.rows, key=lambda c: (sum(c), c)))


@dataclass
class StabilityReport:
    space: str
    degree: int
    defect: int
    table: MultiplicityTable
    betti: dict[int, int]
    monotone_from: int
    stable_from: int
    monotone_ok: bool
    constant_ok: bool
    poly_degree: int | None
    poly_window_ok: bool

    def verdicts(self) -> list[tuple[str, bool]]:
        named = [
            (f"monotone-from-{self.monotone_from}", self.monotone_ok),
            (f"constant-from-{self.stable_from}", self.constant_ok),
        ]
        if self.poly_window_ok:
            named.append(("betti-eventually-polynomial", self.poly_degree is not None))
        return named


def _finite_differences(seq: list[int]) -> list[list[int]]:
    rows = [list(seq)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


def _polynomial_degree(seq: list[int]) -> int | None:
    """Smallest k with vanishing (k+1)-st differences, or None."""
    for order, row in enumerate(_finite_differences(seq)):
        if all(v == 0 for v in row):
            return order - 1  # -1 encodes the identically-zero sequence
    return None


def stability_report(
    space: SpaceSpec,
    degree: int,
    defect: int,
    m_range: tuple[int, int],
    diff_window: int = 4,
) -> StabilityReport:
    """Observe multiplicity stability of one Borel-Moore degree across m.

    For each m in the range, assembles the character series of the
    stratum of tuples with m - ``defect`` distinct values, converts it to
    Borel-Moore grading (dual dimension (m - defect) * dim), decomposes
    degree ``degree``, and records multiplicities per core.  Verdicts:

    * monotone from degree + defect,
    * constant from 4*(degree+defect) in dimension 2, from
      2*degree + 4*defect in dimension >= 3,
    * the Betti sequence has vanishing finite differences past the stable
      bound, when at least ``diff_window`` points are available there.
    """
    require(space, "i_acyclic")
    require(space, "orientable")
    require(space, "connected")
    if space.dim < 2:
        raise HypothesisViolation("dim>=2", f"space {space.name!r} has dim {space.dim}")
    if degree < 0 or defect < 0:
        raise ValueError("degree and defect must be nonnegative")
    lo, hi = m_range
    if lo > hi:
        raise ValueError("empty range")
    ms = [m for m in range(max(lo, defect + 1, 1), hi + 1)]
    if not ms:
        raise ValueError("range contains no admissible m")

    table = MultiplicityTable(degree=degree, m_values=tuple(ms))
    betti: dict[int, int] = {}
    for m in ms:
        distinct = m - defect
        series = exactly_series(space, distinct, m)
        bm = borel_moore_series(series, space.dim, dual_dim=distinct * space.dim)
        mults = decompose_series(bm, degree)
        sign = -1 if degree % 2 else 1
        betti_m = sign * bm.identity_entry().coeff(degree)
        bookkeeping = sum(
            mult * irrep_dimension(pad_core(core, m)) for core, mult in mults.items()
        )
        if bookkeeping != betti_m:
            raise ConsistencyError(
                f"dimension bookkeeping failed at m={m}: {bookkeeping} != {betti_m}"
            )
        betti[m] = betti_m
        for core, mult in mults.items():
            table.rows.setdefault(core, {})[m] = mult

    monotone_from = degree + defect
    stable_from = (
        4 * (degree + defect) if space.dim == 2 else 2 * degree + 4 * defect
    )

    def window(bound: int) -> list[int]:
        return [m for m in ms if m >= bound]

    monotone_ok = all(
        table.value(core, a) <= table.value(core, b)
        for core in table.rows
        for a, b in zip(window(monotone_from), window(monotone_from)[1:])
    )
    stable_ms = window(stable_from)
    constant_ok = all(
        table.value(core, m) == table.value(core, stable_ms[0])
        for core in table.rows
        for m in stable_ms
    ) if stable_ms else False

    poly_window_ok = len(stable_ms) >= diff_window
    poly_degree = (
        _polynomial_degree([betti[m] for m in stable_ms]) if poly_window_ok else None
    )

    return StabilityReport(
        space=space.name,
        degree=degree,
        defect=defect,
        table=table,
        betti=betti,
        monotone_from=monotone_from,
        stable_from=stable_from,
        monotone_ok=monotone_ok,
        constant_ok=constant_ok,
        poly_degree=poly_degree,
        poly_window_ok=poly_window_ok,
    )


# ---------------------------------------------------------------------------
# constancy of unordered Betti numbers
# ---------------------------------------------------------------------------


@dataclass
class ConstancyReport:
    space: str
    degree: int
    values: dict[int, int]
    constant_from: int
    constant_ok: bool
    constant_value: int | None
    expect_zero: bool
    observed_from: int | None = None

    def verdicts(self) -> list[tuple[str, bool]]:
        name = f"constant-from-{self.constant_from}"
        if self.expect_zero:
            name = f"zero-beyond-{self.constant_from - 1}"
        return [(name, self.constant_ok)]


def unordered_betti_constancy(
    space: SpaceSpec, degree: int, m_range: tuple[int, int]
) -> ConstancyReport:
    """Track one Borel-Moore Betti number of the unordered configuration space.

    The value at each m is the multiplicity of the trivial representation
    in the Borel-Moore conversion of the configuration trace series;
    equivalently a signed average over the symmetric group, divided
    exactly by m!.  The expected plateau starts at m = degree; when the
    top compact Betti number vanishes the plateau starts earlier
    (dimension >= 3) or the values must vanish outright (dimension 2).
    The hypothesis requires the top compact Betti number to be at most 1.
    """
    from .charseries import quotient_poincare

    require(space, "i_acyclic")
    if space.top_betti() > 1:
        raise HypothesisViolation(
            "top_compact_betti<=1",
            f"space {space.name!r} has top Betti {space.top_betti()}",
        )
    lo, hi = m_range
    ms = list(range(max(lo, 1), hi + 1))
    if not ms:
        raise ValueError("empty range")
    values: dict[int, int] = {}
    for m in ms:
        bm = borel_moore_series(config_series(space, m), space.dim)
        counts = {ct: ct.class_size() for ct in all_cycle_types(m)}
        poincare_bm = quotient_poincare(bm, counts, factorial(m))
        values[m] = poincare_bm.coeff(degree)

    top = space.top_betti()
    expect_zero = False
    if space.dim == 1:
        constant_from = 1
    elif top == 0 and space.dim == 2:
        constant_from = degree + 1
        expect_zero = True
    elif top == 0 and space.dim >= 3:
        constant_from = -(-degree // (space.dim - 1))  # ceil
    elif space.dim == 2:
        # Surface case: the plateau starts one step later than in higher
        # dimension (the degree-1 value at m = 1 misses the class created
        # by the first collision winding), so check from degree + 1.
        constant_from = degree + 1 if degree >= 1 else 1
    else:
        constant_from = degree
    constant_from = max(constant_from, 1)

    plateau = [values[m] for m in ms if m >= constant_from]
    if not plateau:
        constant_ok = False
        constant_value = None
    elif expect_zero:
        constant_ok = all(v == 0 for v in plateau)
        constant_value = 0
    else:
        constant_ok = all(v == plateau[0] for v in plateau)
        constant_value = plateau[0] if constant_ok else None

    # Observed onset: first m from which the data stays constant to the end
    # of the window; reported alongside the claimed bound for transparency.
    observed_from = None
    for m in ms:
        tail = [values[k] for k in ms if k >= m]
        if all(v == tail[0] for v in tail):
            observed_from = m
            break

    return ConstancyReport(
        space=space.name,
        degree=degree,
        values=values,
        constant_from=constant_from,
        constant_ok=constant_ok,
        constant_value=constant_value,
        expect_zero=expect_zero,
        observed_from=observed_from,
    )
