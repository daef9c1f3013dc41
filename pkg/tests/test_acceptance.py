"""Acceptance criteria 1-9, each checked at its stated runtime limit."""
import itertools
import random
import time
from contextlib import contextmanager

import numpy as np

from conftest import ACCEPTANCE
from invsubst.decompose import decompose, is_simple
from invsubst.endo import (
    Endomorphism,
    Fib,
    Side,
    compose,
    compose_all,
    conjugate,
    det,
    is_mixed,
    matrix,
    parse_substitution,
)
from invsubst.matrices import factor_elementary, is_substitution_matrix_of_invertible, product
from invsubst.nielsen import check_witness, find_witness, invert, is_invertible
from invsubst.oracle import enumerate_invertible, is_decomposable_bruteforce
from invsubst.words import Sign, Word, positive_words

S = parse_substitution


@contextmanager
def criterion(n: int, label: str, limit: float | None = None):
    start = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            note = f" (over the {limit:g} s limit)"
            raise AssertionError(f"criterion {n} took {elapsed:.2f} s, limit {limit:g} s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[n] = f"[{status}] criterion {n}: {label} ({elapsed:.2f} s){note}"


def test_c1_decompose_ab_acb_acc():
    with criterion(1, "decompose (ab,acb,acc) gives W = a and the known simple part", 1.0):
        sigma = S("ab,acb,acc")
        d = decompose(sigma)
        assert d.conjugator == Word("a")
        fl = Fib("c", "b", Side.LEFT).substitution
        expected = compose_all([S("b,c,a"), S("ac,b,c"), fl, fl, S("a,ba,c")])
        assert expected == S("ba,cba,cca")
        assert d.simple_part() == expected
        assert d.recompose() == sigma


def test_c2_negative_conjugator():
    with criterion(2, "decompose (acbab,acbaccab,accaccab) gives W = b^-1", 1.0):
        sigma = S("acbab,acbaccab,accaccab")
        d = decompose(sigma)
        assert d.conjugator == Word("B")
        assert is_simple(conjugate(Word("b"), sigma).as_substitution())
        shifted = conjugate(Word("A"), sigma)
        assert shifted.is_substitution
        assert not is_simple(shifted.as_substitution())


def test_c3_listed_indecomposables():
    cases = ["ab,acb,acc", "ab,acb,accc", "abbc,abc,acc", "abbbc,abbc,acc", "acbc,acc,abc"]
    with criterion(3, "listed substitutions are invertible and indecomposable", 300.0):
        failures = []
        for lit in cases:
            sigma = S(lit)
            found, pair = is_decomposable_bruteforce(sigma)
            if not is_invertible(sigma) or found:
                failures.append((lit, pair and tuple(map(str, pair))))
        assert not failures, f"decomposable or non-invertible: {failures}"


def test_c4_counterexample_matrix():
    with criterion(4, "[[3,0,1],[0,2,1],[1,1,1]] has det 1 but no elementary factorization", 10.0):
        m = np.array([[3, 0, 1], [0, 2, 1], [1, 1, 1]])
        assert det(m) == 1
        assert factor_elementary(m) is None
        assert not is_substitution_matrix_of_invertible(m)


def _signed_common_affix(w: Word, imgs) -> bool:
    body = w.text if w.sign is not Sign.NEGATIVE else w.inverse().text
    return all(s.startswith(body) for s in imgs) or all(s.endswith(body) for s in imgs)


def test_c5_exhaustive_decomposition():
    with criterion(5, "decompose every invertible substitution of length <= 9", 300.0):
        subs = enumerate_invertible(9)
        bad = []
        for sigma in subs:
            d = decompose(sigma)
            w = d.conjugator
            if (
                d.recompose() != sigma
                or w.sign is Sign.MIXED
                or len(w) > sigma.min_length
                or not _signed_common_affix(w, sigma.strs)
            ):
                bad.append(str(sigma))
        assert len(subs) > 80_000
        assert not bad, bad[:10]


def test_c6_inversion_round_trip():
    with criterion(6, "invert every invertible substitution of length <= 8, witnesses replay"):
        bad = []
        for sigma in enumerate_invertible(8):
            w = find_witness(sigma)
            if w is None or not check_witness(sigma, w) or not compose(sigma, invert(sigma)).is_identity:
                bad.append(str(sigma))
        assert not bad, bad[:10]


def test_c7_matrix_round_trip():
    with criterion(7, "matrices of length <= 8 factor exactly; 1000 random |det| != 1 rejected"):
        for sigma in enumerate_invertible(8):
            m = matrix(sigma)
            fs = factor_elementary(m)
            assert fs is not None and (product(fs) == m).all(), str(sigma)
        rng = np.random.default_rng(20260)
        seen = 0
        while seen < 1000:
            m = rng.integers(0, 6, size=(3, 3))
            if abs(det(m)) == 1:
                continue
            seen += 1
            assert factor_elementary(m) is None, m.tolist()


def _blocked_ux_uv_yv(u, v, x, y):
    return (u[0] != y[0] and x[-1] != v[-1] and not v.startswith(x) and not x.startswith(v)
            and not u.endswith(y) and not y.endswith(u))


def _blocked_uxv_uv_y(u, v, x, y):
    return u[0] != y[0] and v[-1] != y[-1] and not (x + v).startswith(v) and not (u + x).endswith(u)


def test_c8_negative_families():
    with criterion(8, "mixed substitutions and blocked patterns are non-invertible"):
        ws = [w.text for w in positive_words(3)]
        mixed = 0
        for t in itertools.product(ws, repeat=3):
            sigma = Endomorphism(*t)
            if is_mixed(sigma):
                mixed += 1
                assert not is_invertible(sigma, prefilters=False), t
        assert mixed > 0
        short = [w.text for w in positive_words(2)]
        families = 0
        for u, v, x, y in itertools.product(short, repeat=4):
            if _blocked_ux_uv_yv(u, v, x, y):
                families += 1
                assert not is_invertible(Endomorphism(u + x, u + v, y + v), prefilters=False)
            if _blocked_uxv_uv_y(u, v, x, y):
                families += 1
                assert not is_invertible(Endomorphism(u + x + v, u + v, y), prefilters=False)
        assert families > 0


_TWO_LETTER = [("b", "a"), ("ab", "b"), ("ba", "b")]  # alpha, beta, gamma


def _random_two_letter(rng: random.Random, max_len: int) -> tuple[str, str]:
    cur = ("a", "b")
    for _ in range(rng.randint(1, 12)):
        g = rng.choice(_TWO_LETTER)
        nxt = tuple("".join(g["ab".index(ch)] for ch in w) for w in cur)
        if len(nxt[0]) + len(nxt[1]) > max_len:
            break
        cur = nxt
    return cur


def test_c9_two_letter_embedding():
    with criterion(9, "200 random two-letter invertible substitutions embed with W = empty"):
        rng = random.Random(1201)
        for _ in range(200):
            w1, w2 = _random_two_letter(rng, 12)
            d = decompose(S(f"{w1},{w2},c"))
            assert d.conjugator == Word(""), (w1, w2, str(d.conjugator))
