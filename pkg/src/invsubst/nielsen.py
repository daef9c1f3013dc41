"""Invertibility by Nielsen cancellation.

An endomorphism is an automorphism exactly when it can be carried to the
identity by right-composition with pi1, pi2, phi_l, phi_r, iota1 without ever
increasing the total length.  Total length never grows along such a path, so
the set of reachable triples is finite and a breadth-first search over it is
a complete decision procedure.

Permutations and iota1 only reorder and invert entries, so the search runs
over triples modulo those moves (at most 48 triples per class) and the
generator-level witness is rebuilt afterwards class by class.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .endo import (
    IDENTITY,
    Endomorphism,
    Gen,
    compose,
    det,
    is_mixed,
    matrix,
)
from .errors import NotInvertibleError, ResourceError
from .words import inv_str, mul_str

DEFAULT_BUDGET = 1_000_000

_IDENT = ("a", "b", "c")
_GENS = (Gen.PI1, Gen.PI2, Gen.PHI_L, Gen.PHI_R, Gen.IOTA1)


@dataclass(frozen=True)
class NielsenWitness:
    steps: tuple[Gen, ...]

    def replay(self, sigma: Endomorphism) -> list[Endomorphism]:
        chain = [sigma]
        for g in self.steps:
            chain.append(compose(chain[-1], g.endomorphism))
        return chain

    def __len__(self) -> int:
        return len(self.steps)

    def names(self) -> list[str]:
        return [g.value for g in self.steps]


def _step(t: tuple[str, str, str], g: Gen) -> tuple[str, str, str]:
    a, b, c = t
    if g is Gen.PI1:
        return (b, a, c)
    if g is Gen.PI2:
        return (c, b, a)
    if g is Gen.PHI_L:
        return (mul_str(b, a), b, c)
    if g is Gen.PHI_R:
        return (mul_str(a, b), b, c)
    return (inv_str(a), b, c)


def _canon(t: tuple[str, str, str]) -> tuple[str, ...]:
    # class of t under right-composition with signed permutations
    return tuple(sorted(min(w, inv_str(w)) for w in t))


def _class_moves(r: tuple[str, ...]):
    """Replace one entry by its product with another entry or its inverse."""
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for e in (r[j], inv_str(r[j])):
                for new in (mul_str(r[i], e), mul_str(e, r[i])):
                    out = list(r)
                    out[i] = new
                    yield tuple(out)


_IDENT_CLASS = _canon(_IDENT)


def _class_path(start: tuple[str, str, str], budget: int) -> list[tuple[str, ...]] | None:
    """Breadth-first search over classes; returns the class sequence to the identity."""
    root = _canon(start)
    parent: dict[tuple, tuple | None] = {root: None}
    queue = deque([root])
    found = root == _IDENT_CLASS
    while queue and not found:
        r = queue.popleft()
        size = sum(map(len, r))
        for t in _class_moves(r):
            if sum(map(len, t)) > size:
                continue
            c = _canon(t)
            if c in parent:
                continue
            parent[c] = r
            if c == _IDENT_CLASS:
                found = True
                break
            if len(parent) > budget:
                raise ResourceError(f"Nielsen search exceeded its budget of {budget} states")
            queue.append(c)
    if not found:
        return None
    path = [_IDENT_CLASS]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def _bridge(t: tuple[str, str, str], goal) -> tuple[tuple[str, str, str], list[Gen]]:
    """Generator steps from t to a triple satisfying goal, never growing the length."""
    here = _canon(t)
    parent: dict[tuple, tuple | None] = {t: None}
    queue = deque([t])
    while queue:
        s = queue.popleft()
        size = sum(map(len, s))
        for g in _GENS:
            u = _step(s, g)
            if sum(map(len, u)) > size or u in parent:
                continue
            parent[u] = (s, g)
            if goal(u):
                steps = []
                node = u
                while parent[node] is not None:
                    node, gen = parent[node]
                    steps.append(gen)
                return u, steps[::-1]
            if _canon(u) == here:
                queue.append(u)
    raise AssertionError("no generator bridge between adjacent classes")


def _search(start: tuple[str, str, str], budget: int) -> tuple[Gen, ...] | None:
    if start == _IDENT:
        return ()
    path = _class_path(start, budget)
    if path is None:
        return None
    steps: list[Gen] = []
    cur = start
    for nxt in path[1:]:
        cur, more = _bridge(cur, lambda u, nxt=nxt: _canon(u) == nxt)
        steps += more
    if cur != _IDENT:
        cur, more = _bridge(cur, lambda u: u == _IDENT)
        steps += more
    return tuple(steps)


def _rejected_by_prefilter(sigma: Endomorphism) -> bool:
    if abs(det(matrix(sigma))) != 1:
        return True
    if sigma.is_substitution and is_mixed(sigma):
        return True
    return False


def find_witness(
    sigma: Endomorphism, *, budget: int = DEFAULT_BUDGET, prefilters: bool = True
) -> NielsenWitness | None:
    """Shortest Nielsen cancellation path from ``sigma`` to the identity, or None.

    With ``prefilters`` the determinant and mixedness tests run first; turning
    them off leaves the search alone to decide.
    """
    if prefilters and _rejected_by_prefilter(sigma):
        return None
    steps = _search(sigma.strs, budget)
    return None if steps is None else NielsenWitness(steps)


def is_invertible(
    sigma: Endomorphism, *, budget: int = DEFAULT_BUDGET, prefilters: bool = True
) -> bool:
    return find_witness(sigma, budget=budget, prefilters=prefilters) is not None


def invert(sigma: Endomorphism, *, budget: int = DEFAULT_BUDGET) -> Endomorphism:
    w = find_witness(sigma, budget=budget)
    if w is None:
        raise NotInvertibleError(f"{sigma} is not an automorphism")
    # sigma o t1 o ... o tk = id, so the tail product is the inverse
    out = IDENTITY
    for g in w.steps:
        out = compose(out, g.endomorphism)
    return out


def check_witness(sigma: Endomorphism, witness: NielsenWitness) -> bool:
    cur = sigma
    for g in witness.steps:
        nxt = compose(cur, g.endomorphism)
        if len(nxt) > len(cur):
            return False
        cur = nxt
    return cur.is_identity
