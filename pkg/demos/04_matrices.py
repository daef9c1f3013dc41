"""Factoring substitution matrices into non-negative elementary matrices."""
import numpy as np

from invsubst import det, factor_elementary, matrix, parse_substitution
from invsubst.matrices import product, serialize_factors, witness_substitution

sigma = parse_substitution("ab,acb,acc")
m = matrix(sigma)
fs = factor_elementary(m)
print(m)
print("factors:", serialize_factors(fs))
print("product matches:", (product(fs) == m).all())
print("a substitution with this matrix:", witness_substitution(m))

# determinant 1 is not enough
m = np.array([[3, 0, 1], [0, 2, 1], [1, 1, 1]])
print()
print(m)
print("det =", det(m), " factorization:", factor_elementary(m))
