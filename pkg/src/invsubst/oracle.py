"""Ground-truth enumeration of simple and invertible substitutions.

These generators build their output from the definitions alone (products of
generators, then cyclic conjugation), independent of the decomposition code.
"""
from __future__ import annotations

from collections import deque
from typing import Iterator

from .endo import (
    Endomorphism,
    Substitution,
    matrix,
)
from .errors import ResourceError
from .words import common_prefix_str, common_suffix_str, inv_str, reduce_str

DEFAULT_CAP = 14


def _check_bound(max_len: int, cap: int) -> None:
    if max_len < 3:
        raise ValueError("a substitution on three letters has length at least 3")
    if max_len > cap:
        raise ResourceError(f"bound {max_len} exceeds the enumeration cap {cap}")


def _right_moves(t: tuple[str, str, str]):
    a, b, c = t
    yield (b, a, c)  # o pi1
    yield (c, b, a)  # o pi2
    yield (b + a, b, c)  # o phi_l
    yield (a + b, b, c)  # o phi_r


def iter_simple(max_len: int, *, cap: int = DEFAULT_CAP) -> Iterator[Substitution]:
    """Stream the simple substitutions of length at most ``max_len``.

    Right-composing with a permutation keeps the length and with a Fibonacci
    generator increases it, so pruning at ``max_len`` loses nothing.
    """
    _check_bound(max_len, cap)
    start = ("a", "b", "c")
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        yield Endomorphism._from_strs(t)  # type: ignore[misc]
        for nxt in _right_moves(t):
            if nxt in seen or sum(map(len, nxt)) > max_len:
                continue
            seen.add(nxt)
            queue.append(nxt)


def enumerate_simple(max_len: int, *, cap: int = DEFAULT_CAP) -> set[Substitution]:
    return set(iter_simple(max_len, cap=cap))


def _rotations(t: tuple[str, str, str]) -> Iterator[tuple[str, str, str]]:
    # conjugate(w, s) with w a positive word of length <= min image length is a
    # substitution iff w is a common suffix of the images, and conjugate(w^-1, s)
    # iff w is a common prefix; so these rotations are all the candidates.
    suf = common_suffix_str(t)
    for k in range(1, len(suf) + 1):
        w = suf[len(suf) - k:]
        yield tuple(w + s[: len(s) - k] for s in t)  # type: ignore[misc]
    pre = common_prefix_str(t)
    for k in range(1, len(pre) + 1):
        w = pre[:k]
        yield tuple(s[k:] + w for s in t)  # type: ignore[misc]


def iter_invertible(max_len: int, *, cap: int = DEFAULT_CAP) -> Iterator[Substitution]:
    """Stream every invertible substitution of length at most ``max_len``, each once."""
    seen: set[tuple[str, str, str]] = set()
    for s in iter_simple(max_len, cap=cap):
        t = s.strs
        for u in (t, *_rotations(t)):
            if u not in seen:
                seen.add(u)
                yield Endomorphism._from_strs(u)  # type: ignore[misc]


def enumerate_invertible(max_len: int, *, cap: int = DEFAULT_CAP) -> set[Substitution]:
    return set(iter_invertible(max_len, cap=cap))


def _apply(imgs, w: str) -> str:
    return reduce_str("".join(imgs["abc".index(ch.lower())] if ch.islower()
                              else inv_str(imgs["abc".index(ch.lower())]) for ch in w))


def _with_inverses(max_len: int, cap: int) -> dict[tuple, tuple]:
    """Invertible substitutions of length <= max_len mapped to their inverses.

    Inverses are carried along the construction: (s o g)^-1 = g^-1 o s^-1 and
    (inner(w) o s)^-1 = s^-1 o inner(w^-1).
    """
    _check_bound(max_len, cap)
    # inverses of pi1, pi2, phi_l, phi_r, in the order of _right_moves
    ginv = (("b", "a", "c"), ("c", "b", "a"), ("Ba", "b", "c"), ("aB", "b", "c"))
    start = ("a", "b", "c")
    inv = {start: start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        ti = inv[t]
        for g, nxt in enumerate(_right_moves(t)):
            if nxt in inv or sum(map(len, nxt)) > max_len:
                continue
            inv[nxt] = tuple(_apply(ginv[g], x) for x in ti)
            queue.append(nxt)
    out = dict(inv)
    for t, ti in inv.items():
        suf = common_suffix_str(t)
        for k in range(1, len(suf) + 1):
            w = suf[len(suf) - k:]
            u = tuple(w + s[: len(s) - k] for s in t)
            # u = inner(w) o t, so u^-1 = t^-1 o inner(w^-1)
            wi = inv_str(w)
            out.setdefault(u, tuple(_apply(ti, reduce_str(wi + x + w)) for x in "abc"))
        pre = common_prefix_str(t)
        for k in range(1, len(pre) + 1):
            w = pre[:k]
            u = tuple(s[k:] + w for s in t)
            # u = inner(w^-1) o t
            wi = inv_str(w)
            out.setdefault(u, tuple(_apply(ti, reduce_str(w + x + wi)) for x in "abc"))
    return out


def is_decomposable_bruteforce(
    sigma: Substitution, *, cap: int = DEFAULT_CAP
) -> tuple[bool, tuple[Substitution, Substitution] | None]:
    """Search for non-trivial invertible ``s1, s2`` with ``sigma == s1 o s2``.

    Any such ``s2`` has ``|s2(x)| <= |sigma(x)|`` letterwise, so it lies among
    the invertible substitutions of length at most ``|sigma|``.  Returns the
    answer and, when decomposable, the witness pair whose right factor has the
    smallest literal.
    """
    sigma = sigma.as_substitution()
    target = sigma.strs
    lens = [len(s) for s in target]
    m_sigma = matrix(sigma)
    best = None
    for t, ti in _with_inverses(len(sigma), cap).items():
        if sorted(t) == ["a", "b", "c"] or any(len(x) > n for x, n in zip(t, lens)):
            continue
        # cheap necessary test: matrix(s1) = matrix(sigma) matrix(t)^-1 >= 0
        m_ti = matrix(Endomorphism._from_strs(ti))
        if (m_sigma @ m_ti < 0).any():
            continue
        left = tuple(_apply(target, x) for x in ti)
        if not all(left) or not all(x.islower() for x in left):
            continue
        if sorted(left) == ["a", "b", "c"]:
            continue
        key = ",".join(t)
        if best is None or key < best[0]:
            best = (key, left, t)
    if best is None:
        return False, None
    _, left, t = best
    return True, (Endomorphism._from_strs(left), Endomorphism._from_strs(t))  # type: ignore[return-value]


def is_indecomposable(sigma: Substitution, *, cap: int = DEFAULT_CAP) -> bool:
    return not is_decomposable_bruteforce(sigma, cap=cap)[0]
