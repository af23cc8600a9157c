"""Occurrence distributions: exhaustive enumeration versus closed forms.

For each length n the distribution row is the polynomial sum of u^k over the
class, where k counts pattern occurrences.  The oracle computes rows by brute
force; the series builders expand exact closed-form generating functions.
The two must agree coefficient by coefficient.
"""

from kingmesh import (
    catalog_pattern,
    distribution_series,
    distribution_table,
    king_series,
)

IDENT = "63"
N_MAX = 8

table = distribution_table(catalog_pattern(IDENT), N_MAX)
series = distribution_series(IDENT, N_MAX)

print(f"Pattern {IDENT}: exhaustive rows vs series coefficients")
print(" n  exhaustive            closed form")
for n in range(N_MAX + 1):
    left, right = str(table.row(n)), str(series.coeff(n))
    marker = "ok" if left == right else "MISMATCH"
    print(f"{n:>2}  {left:<20}  {right:<20}  {marker}")

print("\nSetting u = 1 recovers the plain counts:")
counts = king_series(N_MAX)
for n in range(N_MAX + 1):
    assert table.row(n).evaluate(1) == counts.coeff(n).evaluate(0)
print("  verified for n <=", N_MAX)

print("\nAn open pattern only has the exhaustive route:")
open_table = distribution_table(catalog_pattern("8"), 7)
for n in range(8):
    print(f"{n:>2}  {open_table.row(n)}")
