import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import simple_subs
from invsubst.endo import IDENTITY, PHI_R, PI1, Gen, compose, conjugate, parse_endomorphism
from invsubst.errors import NotInvertibleError, ResourceError
from invsubst.nielsen import NielsenWitness, check_witness, find_witness, invert, is_invertible
from invsubst.words import Word, positive_words

E = parse_endomorphism


@pytest.mark.parametrize(
    "s, expected",
    [("ab,b,c", True), ("ab,ba,c", False), ("ab,acb,acc", True), ("A,b,c", True), ("aa,b,c", False)],
)
def test_is_invertible(s, expected):
    assert is_invertible(E(s)) is expected
    assert is_invertible(E(s), prefilters=False) is expected


def test_invert_examples():
    assert invert(PHI_R) == E("aB,b,c")
    assert invert(PI1) == PI1
    s = E("ab,acb,acc")
    assert compose(s, invert(s)) == IDENTITY
    assert compose(invert(s), s) == IDENTITY
    with pytest.raises(NotInvertibleError):
        invert(E("ab,ba,c"))


def test_check_witness():
    assert check_witness(IDENTITY, NielsenWitness(()))
    w = find_witness(PHI_R)
    assert check_witness(PHI_R, w)
    assert not check_witness(PHI_R, NielsenWitness((Gen.PI1,)))
    assert w.replay(PHI_R)[-1] == IDENTITY


def test_budget_is_enforced():
    with pytest.raises(ResourceError):
        find_witness(E("acbab,acbaccab,accaccab"), budget=5)


def test_non_positive_endomorphisms():
    s = E("aBc,b,cA")
    w = find_witness(s)
    assert (w is not None) == is_invertible(s, prefilters=False)


# the search is exhaustive, so inputs stay short here
short_words = st.text(alphabet="abcABC", max_size=3).map(Word)


@given(simple_subs, short_words)
def test_simple_and_conjugated_maps_invert(s, z):
    t = conjugate(z, s)
    w = find_witness(t)
    assert w is not None and check_witness(t, w)
    assert compose(t, invert(t)) == IDENTITY


def _blocked_triples(max_len):
    ws = [w.text for w in positive_words(max_len)]
    for u, v, x, y in itertools.product(ws, repeat=4):
        if (u[0] != y[0] and x[-1] != v[-1] and not v.startswith(x) and not x.startswith(v)
                and not u.endswith(y) and not y.endswith(u)):
            yield u + x, u + v, y + v


def test_blocked_patterns_stay_non_invertible_under_padding():
    for z in ("a", "b", "c", "ab", "ca"):
        for t in itertools.islice(_blocked_triples(2), 0, None, 7):
            assert not is_invertible(E(",".join(z + w for w in t)))
            assert not is_invertible(E(",".join(w + z for w in t)))
