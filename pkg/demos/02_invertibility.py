"""Deciding invertibility by Nielsen cancellation and inverting."""
from invsubst import check_witness, compose, find_witness, invert, is_invertible, is_mixed, parse_endomorphism

for lit in ["ab,acb,acc", "ab,ba,c", "aa,bb,cc", "aB,b,c"]:
    s = parse_endomorphism(lit)
    print(f"{lit:12s} invertible={is_invertible(s)}  mixed={s.is_substitution and is_mixed(s)}")

sigma = parse_endomorphism("ab,acb,acc")
w = find_witness(sigma)
print("witness:", " ".join(w.names()))
# every step keeps the total length from growing
print("lengths along the witness:", [len(t) for t in w.replay(sigma)])
print("witness checks out:", check_witness(sigma, w))

inv = invert(sigma)
print("inverse:", inv)
print("sigma o inverse:", compose(sigma, inv))
