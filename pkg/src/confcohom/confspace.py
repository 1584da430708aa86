"""Poincaré polynomials and Euler characteristics of configuration spaces.

All formulas below compute compactly-supported invariants of the spaces of
m-tuples in a space X with a prescribed number of distinct entries:

* ``poincare_config``     -- m pairwise-distinct points (the classical
  ordered configuration space),
* ``poincare_exactly``    -- exactly ``distinct`` values among m entries,
* ``poincare_at_most``    -- at most ``distinct`` values among m entries.

They are valid only under the interior-acyclicity hypothesis carried by
:class:`SpaceSpec` as a caller-asserted flag: the flag cannot be decided
from the input polynomial alone, and every gated operation refuses to run
without it rather than silently emitting invalid numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import stirling_second
from .errors import ConsistencyError, HypothesisViolation, InputParseError
from .polyarith import BiPoly, LaurentPoly, T, falling_product


@dataclass(frozen=True)
class SpaceSpec:
    """User-supplied description of a space X.

    ``pc`` is the compactly-supported Poincaré polynomial of X; ``dim`` its
    cohomological dimension.  The three flags assert topological facts the
    library cannot verify: interior acyclicity, orientability (X a
    topological manifold where relevant), connectedness.
    """

    name: str
    pc: LaurentPoly
    dim: int
    i_acyclic: bool
    orientable: bool = True
    connected: bool = True

    def __post_init__(self):
        if self.dim < 0:
            raise InputParseError("dimension must be nonnegative")
        if not self.pc.has_nonnegative_coeffs():
            raise InputParseError("Betti numbers must be nonnegative")
        if not self.pc.is_zero():
            if self.pc.min_exp < 0 or self.pc.max_exp > self.dim:
                raise InputParseError(
                    f"exponents of {self.pc} must lie in [0, {self.dim}]"
                )
        if self.i_acyclic and self.pc.coeff(0) != 0:
            raise InputParseError(
                "an interior-acyclic space has no degree-0 compact cohomology"
            )

    def euler_char(self) -> int:
        """Compactly-supported Euler characteristic: pc evaluated at -1."""
        return self.pc.eval_at_int(-1)

    def top_betti(self) -> int:
        return self.pc.coeff(self.dim)


def require(space: SpaceSpec, flag: str) -> None:
    if not getattr(space, flag):
        raise HypothesisViolation(flag, f"space {space.name!r}")


# ---------------------------------------------------------------------------
# Euler characteristics
# ---------------------------------------------------------------------------


def euler_char_config(space: SpaceSpec, m: int) -> int:
    """Euler characteristic of the ordered configuration space of m points.

    Equals the falling factorial chi(chi-1)...(chi-m+1) of the Euler
    characteristic of X.  Holds with no acyclicity hypothesis, and feeds
    the exponential generating series (1+t)^chi.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    chi = space.euler_char()
    value = 1
    for i in range(m):
        value *= chi - i
    return value


# ---------------------------------------------------------------------------
# Poincaré polynomials
# ---------------------------------------------------------------------------


def poincare_config(space: SpaceSpec, m: int) -> LaurentPoly:
    """Compact-support Poincaré polynomial of the configuration space of m points.

    The closed product formula prod_{i<m} (pc + i*T); m = 0 gives the
    one-point space.
    """
    require(space, "i_acyclic")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return falling_product(space.pc, -T, m)


def poincare_exactly(space: SpaceSpec, distinct: int, m: int) -> LaurentPoly:
    """Tuples in X^m taking exactly ``distinct`` values.

    The space splits into one configuration-space copy per set partition,
    so this is a Stirling multiple of ``poincare_config``.
    """
    require(space, "i_acyclic")
    _check_strata(distinct, m)
    if distinct == 0:
        return LaurentPoly.one() if m == 0 else LaurentPoly.zero()
    return stirling_second(m, distinct) * poincare_config(space, distinct)


def poincare_at_most(space: SpaceSpec, distinct: int, m: int) -> LaurentPoly:
    """Tuples in X^m taking at most ``distinct`` values.

    Alternating sum over the exact strata with a degree shift per step;
    the result must have nonnegative coefficients (they are Betti
    numbers), which is asserted before returning.
    """
    require(space, "i_acyclic")
    _check_strata(distinct, m)
    if distinct == 0:
        return LaurentPoly.one() if m == 0 else LaurentPoly.zero()
    total = LaurentPoly.zero()
    for a in range(distinct):
        term = stirling_second(m, distinct - a) * poincare_config(space, distinct - a)
        term = term * LaurentPoly.term((-1) ** a, a)
        total = total + term
    if not total.has_nonnegative_coeffs():
        raise ConsistencyError(
            f"alternating stratum sum for {space.name!r} produced negative "
            "coefficients; the input polynomial cannot come from an "
            "interior-acyclic space"
        )
    return total


def _check_strata(distinct: int, m: int) -> None:
    if distinct < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    if distinct > m:
        raise ValueError(f"cannot take {distinct} distinct values among {m} entries")


def universal_poly(distinct: int, m: int, closed: bool) -> BiPoly:
    """Universal two-variable polynomial for the multiplicity strata.

    Substituting P := pc recovers ``poincare_exactly`` (open case) or
    ``poincare_at_most`` (closed case) for every space at once.  The
    result is homogeneous of total degree ``distinct``.
    """
    _check_strata(distinct, m)
    if distinct < 1 or m < 1:
        raise ValueError("universal polynomials require 1 <= distinct <= m")
    P = BiPoly.term(1, 1, 0)
    T2 = BiPoly.term(1, 0, 1)

    def rising(length: int) -> BiPoly:
        prod = BiPoly.one()
        for i in range(length):
            prod = prod * (P + i * T2)
        return prod

    if not closed:
        result = stirling_second(m, distinct) * rising(distinct)
    else:
        result = BiPoly.zero()
        for a in range(distinct):
            sign = -1 if a % 2 else 1
            result = result + sign * stirling_second(m, distinct - a) * (
                rising(distinct - a) * BiPoly.term(1, 0, a)
            )
    assert result.is_homogeneous(distinct)
    return result


def poincare_config_ordinary(space: SpaceSpec, m: int) -> LaurentPoly:
    """Ordinary-cohomology Poincaré polynomial of the configuration space.

    Obtained from the compact-support polynomial by duality in dimension
    m*dim.  Valid when X is an orientable topological manifold, which the
    caller asserts through the ``orientable`` flag; the library cannot
    check manifoldness.
    """
    require(space, "i_acyclic")
    require(space, "orientable")
    if m < 1:
        raise ValueError("m must be positive")
    return poincare_config(space, m).dual(m * space.dim)


def borel_moore_betti_config(space: SpaceSpec, m: int, degree: int) -> int:
    """Borel-Moore Betti number of the configuration space in one degree.

    Reads the coefficient of T^(m*dim - degree) in the compact-support
    polynomial, which is the dual grading.
    """
    require(space, "orientable")
    if m < 1 or degree < 0:
        raise ValueError("m must be positive and degree nonnegative")
    require(space, "i_acyclic")
    return poincare_config(space, m).coeff(m * space.dim - degree)


# ---------------------------------------------------------------------------
# built-in spaces
# ---------------------------------------------------------------------------


def _make_builtins() -> dict[str, SpaceSpec]:
    spaces = {}
    for d in range(1, 5):
        spaces[f"r{d}"] = SpaceSpec(
            name=f"r{d}", pc=LaurentPoly.term(1, d), dim=d, i_acyclic=True
        )
    spaces["c"] = SpaceSpec(name="c", pc=LaurentPoly.term(1, 2), dim=2, i_acyclic=True)
    for a in range(1, 4):
        spaces[f"c_minus_{a}"] = SpaceSpec(
            name=f"c_minus_{a}",
            pc=LaurentPoly({1: a, 2: 1}),
            dim=2,
            i_acyclic=True,
        )
    spaces["cstar"] = SpaceSpec(
        name="cstar", pc=LaurentPoly({1: 1, 2: 1}), dim=2, i_acyclic=True
    )
    # Once-punctured Klein bottle: cup-acyclic but not interior-acyclic.
    # Shipped to exercise the refusal paths of every gated operation.
    spaces["klein_pointed"] = SpaceSpec(
        name="klein_pointed",
        pc=LaurentPoly.term(1, 1),
        dim=2,
        i_acyclic=False,
        orientable=False,
    )
    return spaces


BUILTIN_SPACES = _make_builtins()
