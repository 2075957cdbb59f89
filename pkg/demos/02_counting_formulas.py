"""Tour of the counting formulas and where they disagree.

Run as: python3 demos/02_counting_formulas.py
"""

from nlie import ladder, ladder_recursive, lie_expansion, necklace_bound, witt
from nlie.basis import EnumerationMode, count_by_enumeration
from nlie.counting import weight3_closed_form

print("== free Lie dimensions (n = 2) via the Witt formula ==")
for d in (2, 3):
    print(f"  d={d}: {[witt(d, w) for w in range(1, 9)]}")

print()
print("== the n = d ladder: closed form vs recursion ==")
for n in (3, 4, 5):
    closed = [ladder(n, w) for w in range(1, 8)]
    rec = [ladder_recursive(n, w) for w in range(1, 8)]
    assert closed == rec
    print(f"  n={n}: {closed}")

print()
print("== enumeration agrees with the ladder for left-normed bases ==")
for n in (3, 4):
    counts = [
        count_by_enumeration(n, n, w, EnumerationMode.LEFT_NORMED)
        for w in range(1, 7)
    ]
    print(f"  n={n}: {counts}  (ladder: {[ladder(n, w) for w in range(1, 7)]})")

print()
print("== and where formulas disagree, nothing is hidden ==")
print(f"  weight-3 double sum at n=d=4: {weight3_closed_form(4, 4)}")
print(f"  ladder at n=d=4, w=3:        {ladder(4, 3)}")
print("  (the comparison report flags exactly this: EQ14=11 vs LADDER=4)")

print()
print("== necklace-style upper bound ==")
for n, d, w in [(2, 3, 4), (3, 3, 4), (3, 4, 4)]:
    print(f"  n={n} d={d} w={w}: bound {necklace_bound(n, d, w)}")

print()
print("== expanding C(d, n) over free-Lie dimensions ==")
exp = lie_expansion(5)
print("  C(d,5) =", " + ".join(f"({c})*l_d({s})" for s, c in sorted(exp.coefficients.items()) if c))
