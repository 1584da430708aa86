"""Exact integer Laurent-polynomial arithmetic.

A :class:`LaurentPoly` is a polynomial in one variable T with arbitrary-
precision integer coefficients and integer (possibly negative) exponents,
stored sparsely as ``{exponent: coefficient}`` with no zero entries.  Two
values are equal iff their canonical maps are equal.  :class:`BiPoly` is the
bivariate analogue in (P, T), used for the universal polynomials in which P
stands for an unspecified compactly-supported Poincaré polynomial.

Everything here is exact: there are no floats and no divisions except
:meth:`LaurentPoly.divexact`, which checks divisibility coefficient by
coefficient and refuses to round.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import ConsistencyError


class LaurentPoly:
    """Integer Laurent polynomial in T, immutable and hashable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def const(value: int) -> "LaurentPoly":
        return LaurentPoly({0: value})

    @staticmethod
    def term(coeff: int, exp: int) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> "LaurentPoly":
        """Build from a dense list where index = exponent of T."""
        return LaurentPoly({e: v for e, v in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def has_nonnegative_coeffs(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def to_exp_map(self) -> dict[str, int]:
        """JSON-friendly form: exponent (as string) -> coefficient."""
        return {str(e): v for e, v in sorted(self._c.items())}

    @staticmethod
    def from_exp_map(data: Mapping[str, int]) -> "LaurentPoly":
        return LaurentPoly({int(e): int(v) for e, v in data.items()})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) - v
        return LaurentPoly(c)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return _coerce(other) - self

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions ------------------------------------------------

    def substitute(self, e: int, negate: bool = False) -> "LaurentPoly":
        """Return f(s * T^e) with s = -1 if ``negate`` else +1.

        Exponent k maps to e*k; the coefficient picks up s^k.  Requires
        e >= 1 so that the result stays a genuine substitution.
        """
        if e < 1:
            raise ValueError(f"substitution exponent must be >= 1, got {e}")
        if not negate:
            return LaurentPoly({k * e: v for k, v in self._c.items()})
        return LaurentPoly({k * e: (v if k % 2 == 0 else -v) for k, v in self._c.items()})

    def negate_var(self) -> "LaurentPoly":
        """Return f(-T)."""
        return self.substitute(1, negate=True)

    def invert_var(self) -> "LaurentPoly":
        """Return f(1/T)."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def dual(self, d: int) -> "LaurentPoly":
        """Return T^d * f(1/T): exponent k maps to d - k."""
        return LaurentPoly({d - e: v for e, v in self._c.items()})

    def eval_at_int(self, x: int) -> int:
        """Evaluate at an integer (exponents must be nonnegative)."""
        total = 0
        for e, v in self._c.items():
            if e < 0:
                raise ValueError("cannot evaluate negative exponent at an integer")
            total += v * x**e
        return total

    def divexact(self, divisor: int) -> "LaurentPoly":
        """Divide every coefficient by ``divisor``, demanding exactness."""
        if divisor == 0:
            raise ZeroDivisionError("divexact by zero")
        c = {}
        for e, v in self._c.items():
            q, r = divmod(v, divisor)
            if r:
                raise ConsistencyError(
                    f"coefficient {v} of T^{e} is not divisible by {divisor}"
                )
            c[e] = q
        return LaurentPoly(c)

    # -- value semantics ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                body = str(abs(v))
            else:
                coeff = "" if abs(v) == 1 else str(abs(v))
                body = f"{coeff}T" if e == 1 else f"{coeff}T^{e}"
            sign = "-" if v < 0 else ("+" if parts else "")
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


def _coerce(value: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.const(value)


#: The variable T itself, convenient for building test values.
T = LaurentPoly.term(1, 1)
ONE = LaurentPoly.one()


def falling_product(f: LaurentPoly, g: LaurentPoly, n: int) -> LaurentPoly:
    """Return the product (f)(f - g)(f - 2g)...(f - (n-1)g).

    This one primitive realizes every factorial-like product in the
    package: with g = 1 it is the classical falling factorial of f, with
    g = -T it is the rising product that builds configuration-space
    Poincaré polynomials, and with g = d*T^d it clears the denominators of
    the cyclic trace formulas.  n = 0 gives the empty product 1.
    """
    if n < 0:
        raise ValueError("falling product length must be nonnegative")
    result = LaurentPoly.one()
    for i in range(n):
        result = result * (f - g * i)
    return result


class BiPoly:
    """Integer polynomial in two variables (P, T), canonical sparse form.

    Keys are (P-exponent, T-exponent) pairs; P-exponents are nonnegative.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                if v:
                    c[(int(i), int(j))] = int(v)
        self._c = c

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def one() -> "BiPoly":
        return BiPoly({(0, 0): 1})

    @staticmethod
    def term(coeff: int, p_exp: int, t_exp: int) -> "BiPoly":
        return BiPoly({(p_exp, t_exp): coeff})

    def coeff(self, p_exp: int, t_exp: int) -> int:
        return self._c.get((p_exp, t_exp), 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def is_homogeneous(self, degree: int) -> bool:
        return all(i + j == degree for (i, j) in self._c)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) - v
        return BiPoly(c)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self._c.items()})

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self._c.items()})
        c: dict[tuple[int, int], int] = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiPoly(c)

    __rmul__ = __mul__

    def eval_P(self, p: LaurentPoly) -> LaurentPoly:
        """Substitute P := p and multiply through by the T-monomials."""
        total = LaurentPoly.zero()
        for (i, j), v in self._c.items():
            total = total + (p**i) * LaurentPoly.term(v, j)
        return total

    def to_exp_map(self) -> dict[str, int]:
        """JSON-friendly form: "P-exp,T-exp" -> coefficient."""
        return {f"{i},{j}": v for (i, j), v in sorted(self._c.items())}

    @staticmethod
    def from_exp_map(data: Mapping[str, int]) -> "BiPoly":
        c = {}
        for key, v in data.items():
            i, j = key.split(",")
            c[(int(i), int(j))] = int(v)
        return BiPoly(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        if not self._c:
            return "BiPoly(0)"
        parts = []
        for (i, j), v in sorted(self._c.items()):
            factors = [f"P^{i}" if i > 1 else "P" if i == 1 else ""]
            factors.append(f"T^{j}" if j > 1 else "T" if j == 1 else "")
            body = " ".join(f for f in factors if f)
            if v == 1 and body:
                parts.append(body)
            elif body:
                parts.append(f"{v} {body}")
            else:
                parts.append(str(v))
        return "BiPoly(" + " + ".join(parts) + ")"


#: The variable P (an unevaluated Poincaré polynomial) and T inside BiPoly.
P_VAR = BiPoly.term(1, 1, 0)
T_VAR = BiPoly.term(1, 0, 1)
