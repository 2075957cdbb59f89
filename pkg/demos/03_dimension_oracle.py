"""The exact graded-dimension oracle, cross-checked against formulas.

Run as: python3 demos/03_dimension_oracle.py
"""

from math import comb

from nlie import graded_dimension, witt
from nlie.basis import EnumerationMode, count_by_enumeration
from nlie.oracle import graded_monomials, relation_rows

print("== n = 2 reduces to the free Lie algebra ==")
for d in (2, 3):
    dims = [graded_dimension(2, d, w) for w in range(1, 6)]
    print(f"  d={d}: oracle {dims}   witt {[witt(d, w) for w in range(1, 6)]}")

print()
print("== weight 2 is pure combinatorics: C(d, n) ==")
for n in (2, 3, 4):
    print(f"  n={n}: {[graded_dimension(n, d, 2) for d in range(2, 7)]}"
          f"   binomials {[comb(d, n) for d in range(2, 7)]}")

print()
print("== inside one graded slice (n=3, d=3, w=4) ==")
basis = graded_monomials(3, 3, 4)
rm = relation_rows(3, 3, 4)
dim = graded_dimension(3, 3, 4)
print(f"  {len(basis.monomials)} canonical monomials")
print(f"  {len(rm.rows)} generalized-Jacobi relation rows")
print(f"  graded dimension: {dim}")

print()
print("== oracle vs both basic-commutator readings (n=3, d=3) ==")
print("  w   oracle  full-rule3  left-normed")
for w in range(1, 6):
    o = graded_dimension(3, 3, w)
    f = count_by_enumeration(3, 3, w, EnumerationMode.FULL_RULE3)
    l = count_by_enumeration(3, 3, w, EnumerationMode.LEFT_NORMED)
    print(f"  {w}   {o:6d}  {f:10d}  {l:11d}")
print("  (disagreements are real and surfaced by `nlie compare`, not patched)")
