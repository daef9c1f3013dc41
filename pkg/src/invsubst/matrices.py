"""Factor non-negative 3x3 integer matrices into non-negative elementary ones.

The non-negative elementary matrices are the permutation matrices and the
transvections ``T(i, j) = I + E_ij`` (1-based, ``i != j``); they are exactly
the matrices of permutations and Fibonacci substitutions.  A non-negative
matrix is the matrix of an invertible substitution iff it is such a product.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .endo import (
    Endomorphism,
    Fib,
    Perm,
    Side,
    compose_all,
    det,
    permutations,
)
from .errors import NegativeEntryError, ParseError, ResourceError
from .words import LETTERS

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class Transvection:
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i <= 3 and 1 <= self.j <= 3) or self.i == self.j:
            raise ValueError(f"bad transvection indices ({self.i}, {self.j})")

    @property
    def matrix(self) -> np.ndarray:
        m = np.eye(3, dtype=np.int64)
        m[self.i - 1, self.j - 1] = 1
        return m

    def substitution(self, side: Side = Side.RIGHT) -> Endomorphism:
        # column j gains a unit in row i: letter j picks up one extra letter i
        return Fib(LETTERS[self.j - 1], LETTERS[self.i - 1], side).substitution

    def __str__(self) -> str:
        return f"T({self.i},{self.j})"


@dataclass(frozen=True)
class PermutationMatrix:
    perm: Perm

    @property
    def matrix(self) -> np.ndarray:
        m = np.zeros((3, 3), dtype=np.int64)
        for j, y in enumerate(self.perm.images):
            m[LETTERS.index(y), j] = 1
        return m

    def substitution(self) -> Endomorphism:
        return self.perm.substitution

    def __str__(self) -> str:
        return f"P({self.perm.images})"


ElementaryFactor = Union[Transvection, PermutationMatrix]


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    return a


def parse_matrix(tokens: Sequence[str] | str) -> np.ndarray:
    """Nine integers, row-major, e.g. ``"3 0 1 0 2 1 1 1 1"``."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    if len(tokens) != 9:
        raise ParseError(f"expected nine integers, got {len(tokens)}")
    try:
        vals = [int(t) for t in tokens]
    except ValueError as e:
        raise ParseError(str(e)) from None
    return np.array(vals, dtype=np.int64).reshape(3, 3)


def product(factors: Sequence[ElementaryFactor]) -> np.ndarray:
    out = np.eye(3, dtype=np.int64)
    for f in factors:
        out = out @ f.matrix
    return out


def _as_perm(m: np.ndarray) -> Perm | None:
    if not ((m == 0) | (m == 1)).all() or not (m.sum(axis=0) == 1).all() or not (m.sum(axis=1) == 1).all():
        return None
    return Perm("".join(LETTERS[int(np.argmax(m[:, j]))] for j in range(3)))


def factor_elementary(m, *, budget: int = DEFAULT_BUDGET) -> list[ElementaryFactor] | None:
    """Factor ``m`` as transvections followed by at most one permutation, or None.

    Depth-first right-division by transvections (subtract column i from column
    j) while the result stays non-negative; the entry sum drops at every step.
    What remains at a leaf must be a permutation matrix ``P``, giving
    ``m = P T1 ... Tk``, which is then rewritten as ``T1' ... Tk' P`` using
    ``P T(i, j) P^-1 = T(p(i), p(j))``.
    """
    m = as_matrix(m)
    if (m < 0).any():
        raise NegativeEntryError("matrix has a negative entry")
    if (m.sum(axis=0) == 0).any() or abs(det(m)) != 1:
        return None

    failed: set[bytes] = set()
    visits = 0

    def search(cur: np.ndarray) -> tuple[Perm, list[Transvection]] | None:
        nonlocal visits
        p = _as_perm(cur)
        if p is not None:
            return p, []
        key = cur.tobytes()
        if key in failed:
            return None
        visits += 1
        if visits > budget:
            raise ResourceError(f"matrix factorization exceeded its budget of {budget} nodes")
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                col = cur[:, j] - cur[:, i]
                if (col < 0).any():
                    continue
                nxt = cur.copy()
                nxt[:, j] = col
                found = search(nxt)
                if found is not None:
                    perm, ts = found
                    return perm, ts + [Transvection(i + 1, j + 1)]
        failed.add(key)
        return None

    found = search(m)
    if found is None:
        return None
    perm, ts = found
    # m = P T1 ... Tk = (P T1 P^-1) ... (P Tk P^-1) P
    moved: list[ElementaryFactor] = []
    for t in ts:
        pi = LETTERS.index(perm.images[t.i - 1]) + 1
        pj = LETTERS.index(perm.images[t.j - 1]) + 1
        moved.append(Transvection(pi, pj))
    if not perm.is_identity:
        moved.append(PermutationMatrix(perm))
    return moved


def is_substitution_matrix_of_invertible(m, *, budget: int = DEFAULT_BUDGET) -> bool:
    return factor_elementary(m, budget=budget) is not None


def witness_substitution(m, *, budget: int = DEFAULT_BUDGET) -> Endomorphism | None:
    """An invertible substitution whose matrix is ``m``, built from its factorization."""
    factors = factor_elementary(m, budget=budget)
    if factors is None:
        return None
    return compose_all([f.substitution() for f in factors])


def serialize_factors(factors: Sequence[ElementaryFactor]) -> list[str]:
    return [str(f) for f in factors]


def all_permutation_matrices() -> list[PermutationMatrix]:
    return [PermutationMatrix(p) for p in permutations()]
