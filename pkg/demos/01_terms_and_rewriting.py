"""Walk through the term layer and the collecting process.

Run as: python3 demos/01_terms_and_rewriting.py
"""

from nlie import canonicalize, collect, format_term, lc_format, parse, weight
from nlie.basis import EnumerationMode, is_basic

N = 3  # ternary brackets throughout

print("== parsing and canonical form ==")
for text in ["[x1,x2,x3]", "[x3,x2,x1]", "[x2,x1,x1]", "[[x1,x2,x3],x2,x1]"]:
    t = parse(text, N)
    s, ct = canonicalize(t, N)
    shown = "0" if s == 0 else f"{'+' if s > 0 else '-'}{format_term(ct)}"
    print(f"  {text:24s} -> {shown}   (weight {weight(t, N)})")

print()
print("== the collecting process ==")
# a canonical term that is *not* basic: the inner bracket's last component
# (x2) exceeds the outer bracket's last child (x1)
t = parse("[[[x3,x2,x1],x3,x2],x2,x1]", N)
print(f"  input: {format_term(t)}")
print(f"  basic? {is_basic(t, N, EnumerationMode.FULL_RULE3)}")
lc, trace = collect(t, N)
print(f"  collected ({len(trace.steps)} steps, capped={trace.capped}):")
print(f"    {lc_format(lc, N)}")
for u in lc:
    assert is_basic(u, N, EnumerationMode.FULL_RULE3)
print("  every output term is basic.")
