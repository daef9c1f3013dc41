"""Counting simple and invertible substitutions, and indecomposability."""
from invsubst import decompose, enumerate_invertible, enumerate_simple, parse_substitution
from invsubst.oracle import is_decomposable_bruteforce

print(" L  simple  invertible")
for n in range(3, 9):
    print(f"{n:2d}  {len(enumerate_simple(n)):6d}  {len(enumerate_invertible(n)):10d}")

# the conjugator never exceeds the shortest image
subs = enumerate_invertible(8)
worst = max(len(decompose(s).conjugator) - s.min_length for s in subs)
print("max |W| - min image length over L <= 8:", worst)

for lit in ["ab,acb,acc", "abbc,abc,acc", "acbc,acc,abc"]:
    found, pair = is_decomposable_bruteforce(parse_substitution(lit))
    print(lit, "->", f"{pair[0]} o {pair[1]}" if found else "indecomposable")
