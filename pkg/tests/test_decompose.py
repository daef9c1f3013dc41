import json

import pytest
from hypothesis import given

from conftest import simple_subs, substitutions
from invsubst.decompose import (
    Decomposition,
    PatternSplit,
    decompose,
    extract_pattern,
    is_simple,
    peel_once,
    strip_once,
)
from invsubst.endo import Fib, Perm, Side, compose, from_generator_names, parse_substitution
from invsubst.errors import NoPatternError, NotInvertibleError, ParseError
from invsubst.nielsen import is_invertible
from invsubst.words import Sign, Word

S = parse_substitution


def test_peel_once():
    rest, fib = peel_once(S("ba,cba,cca"))
    assert rest == S("ba,c,cca") and fib == Fib("b", "a", Side.RIGHT)
    assert compose(rest, fib.substitution) == S("ba,cba,cca")
    assert peel_once(S("b,c,a")) is None
    assert peel_once(S("ab,acb,acc")) is None


def test_strip_once():
    rest, delta = strip_once(S("ab,acb,acc"))
    assert rest == S("ba,cba,cca") and delta == Word("a")
    rest, delta = strip_once(S("acbab,acbaccab,accaccab"))
    assert delta == Word("BA")  # suffix first
    assert strip_once(S("ba,b,c")) is None


def test_extract_pattern():
    p = extract_pattern(S("ab,acb,acc"))
    assert p.kind == PatternSplit.UX_UV_YV
    assert compose(S("ab,acb,acc"), p.permutation.substitution).strs == p.triple()
    q = extract_pattern(S("abc,ac,b"))
    assert (q.kind, q.permutation, q.u, q.x, q.v, q.y) == (PatternSplit.UXV_UV_Y, Perm("abc"), "a", "b", "c", "b")
    with pytest.raises(NoPatternError) as err:
        extract_pattern(S("aa,bb,cc"))
    assert err.value.reason == "mixed"
    with pytest.raises(ValueError):
        extract_pattern(S("ab,b,c"))


def test_is_simple():
    assert is_simple(S("ba,cba,cca"))
    assert not is_simple(S("ab,acb,acc"))
    assert is_simple(S("c,a,b"))


def test_decompose_golden():
    d = decompose(S("ab,acb,acc"))
    assert d.conjugator == Word("a")
    assert d.factors == (
        Perm("bca"),
        Fib("a", "c", Side.RIGHT),
        Fib("c", "b", Side.LEFT),
        Fib("c", "b", Side.LEFT),
        Fib("b", "a", Side.RIGHT),
    )
    assert d.recompose() == S("ab,acb,acc")
    assert decompose(S("acbab,acbaccab,accaccab")).conjugator == Word("B")


def test_decompose_rejects():
    with pytest.raises(NotInvertibleError):
        decompose(S("ab,ba,c"))
    with pytest.raises(NotInvertibleError):
        decompose(S("aa,bb,cc"))
    with pytest.raises(ParseError):
        S("a,b,c,d")


def test_json_round_trip():
    d = decompose(S("ab,acb,acc"))
    assert Decomposition.from_dict(json.loads(d.to_json())) == d
    expanded = json.loads(d.to_json(expanded=True))
    simple = from_generator_names([g for names in expanded["factors"] for g in names])
    assert simple == d.simple_part()


def _check_shape(s, d):
    # one permutation at most, and only in front; each peel shortens by at least 1
    perms = [i for i, f in enumerate(d.factors) if isinstance(f, Perm)]
    assert perms in ([], [0])
    assert len(d.factors) - len(perms) <= len(s) - 3


@given(simple_subs)
def test_simple_inputs_have_empty_conjugator(s):
    if s.is_substitution:
        d = decompose(s)
        assert d.conjugator == Word("")
        assert d.recompose() == s
        assert is_simple(s)
        _check_shape(s, d)


@given(substitutions)
def test_decompose_agrees_with_nielsen(s):
    try:
        d = decompose(s)
    except NotInvertibleError:
        assert not is_invertible(s)
        return
    assert d.recompose() == s
    assert d.conjugator.sign is not Sign.MIXED
    assert len(d.conjugator) <= s.min_length
    _check_shape(s, d)


@pytest.mark.slow
def test_recomposition_up_to_length_12():
    from invsubst.oracle import iter_invertible

    for s in iter_invertible(12):
        d = decompose(s)
        assert d.recompose() == s
