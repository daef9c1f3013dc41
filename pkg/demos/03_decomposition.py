"""Conjugator plus simple factors for an invertible substitution."""
from invsubst import Word, conjugate, decompose, is_simple, parse_substitution

sigma = parse_substitution("ab,acb,acc")
d = decompose(sigma)
print("sigma =", sigma)
print("conjugator W =", d.conjugator.text or "(empty)")
for f in d.factors:
    print("   ", f, "=", f.substitution)
print("simple part:", d.simple_part(), " simple:", is_simple(d.simple_part()))
print("recomposes:", d.recompose() == sigma)
print("as JSON:", d.to_json())
print("in generators:", d.to_expanded_dict()["factors"])

# here the conjugator is negative; rotating the other way gives a non-simple map
sigma = parse_substitution("acbab,acbaccab,accaccab")
d = decompose(sigma)
print()
print("sigma =", sigma, " W =", d.conjugator)
other = conjugate(Word("A"), sigma).as_substitution()
print("conjugate by a^-1:", other, " simple:", is_simple(other))
