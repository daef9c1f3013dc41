"""Words, substitutions and their matrices."""
from invsubst import PHI_R, Word, compose, conjugate, inner, matrix, parse_substitution

# lowercase letters are generators, uppercase their inverses
w = Word("aBba")           # reduces on construction
print("aBba reduces to", w)
print("inverse of ab:", Word("ab").inverse())

# a substitution is given by the images of a, b, c
sigma = parse_substitution("ab,acb,acc")
print("sigma =", sigma, " length", len(sigma))
print("sigma(ab^-1) =", sigma(Word("aB")))

# composition applies the right-hand map first
tau = compose(sigma, PHI_R)
print("sigma o phi_r =", tau)
print("matrix(sigma o phi_r) == matrix(sigma) @ matrix(phi_r):",
      (matrix(tau) == matrix(sigma) @ matrix(PHI_R)).all())

# an inner automorphism rotates a common prefix to the back
print("conjugate by a^-1:", conjugate(Word("A"), sigma))
print("inner(a) o that:", compose(inner(Word("a")), conjugate(Word("A"), sigma)))
print(matrix(sigma))
