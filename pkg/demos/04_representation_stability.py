"""Watching representation stability happen.

As the number of points grows, the cohomology of configuration spaces in a
fixed Borel-Moore degree settles into a fixed list of irreducible
constituents.  The bookkeeping trick: an irreducible of the symmetric group
on m letters is recorded by its rows below the first (the "core"), which
makes multiplicities comparable across m.  This script decomposes degree 1
and degree 2 for the plane and prints the multiplicity tables.
"""

from confcohom import BUILTIN_SPACES, stability_report, unordered_betti_constancy

plane = BUILTIN_SPACES["c"]

for degree in (1, 2):
    report = stability_report(plane, degree, 0, (1, 10))
    print(f"Degree {degree} multiplicities for the plane, m = 1..10:")
    header = "  core      " + "".join(f"{m:4d}" for m in report.table.m_values)
    print(header)
    for core in report.table.cores():
        row = report.table.rows[core]
        cells = "".join(f"{row.get(m, 0):4d}" for m in report.table.m_values)
        print(f"  {str(core):10s}{cells}")
    print(f"  monotone from m={report.monotone_from}: {report.monotone_ok}")
    print(f"  constant from m={report.stable_from}: {report.constant_ok}")
    print(f"  Betti numbers: {[report.betti[m] for m in report.table.m_values]}")
    if report.poly_window_ok:
        print(f"  eventual polynomial degree in m: {report.poly_degree}")
    print()

# The invariant part of the story: Betti numbers of the unordered spaces
# plateau almost immediately.
print("Unordered Borel-Moore Betti numbers of the plane:")
for degree in (0, 1, 2):
    report = unordered_betti_constancy(plane, degree, (1, 10))
    values = [report.values[m] for m in sorted(report.values)]
    print(f"  degree {degree}: {values} (constant: {report.constant_ok})")

# Puncturing the plane changes the plateau height, not the phenomenon:
print("\nSame, for the plane minus two points:")
for degree in (0, 1, 2):
    report = unordered_betti_constancy(BUILTIN_SPACES["c_minus_2"], degree, (1, 10))
    values = [report.values[m] for m in sorted(report.values)]
    print(f"  degree {degree}: {values} (constant: {report.constant_ok})")
