"""Poincaré polynomials of configuration spaces, from one input polynomial.

Everything the library computes starts from a single piece of data: the
compactly-supported Betti numbers of a space X, entered as an integer
polynomial in T.  This script walks through the basic outputs for the
plane (pc = T^2) and a punctured plane (pc = T + T^2).
"""

from confcohom import (
    BUILTIN_SPACES,
    euler_char_config,
    poincare_at_most,
    poincare_config,
    poincare_config_ordinary,
    poincare_exactly,
)

plane = BUILTIN_SPACES["c"]
punctured = BUILTIN_SPACES["cstar"]

# --- ordered configuration spaces -----------------------------------------
# The compact-support Poincaré polynomial of m distinct points is a product
# of m linear shifts of pc; no other topological input is needed.

print("Configuration spaces of the plane:")
for m in range(1, 6):
    print(f"  {m} points: {poincare_config(plane, m)}")

# In ordinary cohomology (duality in dimension 2m) the same polynomials
# factor as (1+T)(1+2T)...: the classical pattern for the pure braid groups.
print("\nOrdinary cohomology:")
for m in range(1, 6):
    print(f"  {m} points: {poincare_config_ordinary(plane, m)}")

# --- multiplicity strata ----------------------------------------------------
# Tuples with a prescribed number of distinct values interpolate between the
# configuration space (all distinct) and the full cartesian power.

print("\n4-tuples in the punctured plane, by number of distinct values:")
for distinct in range(1, 5):
    exact = poincare_exactly(punctured, distinct, 4)
    cumulative = poincare_at_most(punctured, distinct, 4)
    print(f"  exactly {distinct}: {exact}")
    print(f"  at most {distinct}: {cumulative}")

print("\nSanity: at most 4 of 4 equals the 4th power of the input:")
print(f"  {poincare_at_most(punctured, 4, 4)} == {punctured.pc**4}")

# --- Euler characteristics ---------------------------------------------------
# The Euler characteristic of the m-point configuration space is a falling
# factorial, so it eventually hits zero whenever chi(X) is a small integer.

print("\nEuler characteristics for the plane (chi = 1):")
print(" ", [euler_char_config(plane, m) for m in range(7)])
print("Euler characteristics for pc = 3T^2 (chi = 3):")
from confcohom import LaurentPoly, SpaceSpec

triple = SpaceSpec("triple", LaurentPoly({2: 3}), 2, i_acyclic=True)
print(" ", [euler_char_config(triple, m) for m in range(7)])
