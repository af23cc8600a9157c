"""Counting king permutations four independent ways.

A king permutation never places consecutive values next to each other:
2413 qualifies, 1234 does not.  This script lists the small cases and then
cross-checks a recurrence, an inclusion-exclusion sum, a generating-function
expansion, and plain enumeration against each other.
"""

from kingmesh import KingClass, count_class, count_kings, enumerate_kings

print("All king permutations of length 4 and 5:")
for n in (4, 5):
    print(f"  n={n}:", " ".join("".join(map(str, p)) for p in enumerate_kings(n)))

print("\nCounts by four methods (they must agree):")
print(" n  recurrence     explicit           gf    enumerate")
for n in range(11):
    row = [count_kings(n, m) for m in ("recurrence", "explicit", "gf", "enumerate")]
    assert len(set(row)) == 1
    print(f"{n:>2}  {row[0]:>10}  {row[1]:>11}  {row[2]:>11}  {row[3]:>11}")

print("\nRestricted classes at n = 5:")
for kc in KingClass:
    members = list(enumerate_kings(5, kc))
    assert len(members) == count_class(5, kc)
    print(f"  {kc.value:>3}: {len(members):>3} members")
