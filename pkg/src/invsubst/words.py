"""Reduced words in the free group on {a, b, c}.

Words use a one-character-per-letter text syntax: lowercase ``a b c`` are
the generators, uppercase ``A B C`` their inverses and the empty string is
the identity.  A :class:`Word` always holds its freely reduced form, so
equality is plain string equality.
"""
from __future__ import annotations

import enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import EmptyWordError, ParseError

LETTERS = "abc"
SYMBOLS = frozenset("abcABC")


class SignedLetter(NamedTuple):
    letter: str
    sign: int

    @property
    def symbol(self) -> str:
        return self.letter if self.sign > 0 else self.letter.upper()

    @classmethod
    def from_symbol(cls, ch: str) -> "SignedLetter":
        if ch not in SYMBOLS:
            raise ParseError(f"not a letter of the alphabet: {ch!r}")
        return cls(ch.lower(), 1 if ch.islower() else -1)

    def __str__(self) -> str:
        return self.letter if self.sign > 0 else f"{self.letter}^-1"


class Sign(enum.Enum):
    EMPTY = "empty"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    MIXED = "mixed"


# -- string kernels -------------------------------------------------------
# The search code in the other modules works on these raw strings directly.

def reduce_str(s: str) -> str:
    out: list[str] = []
    for ch in s:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def inv_str(s: str) -> str:
    return s[::-1].swapcase()


def mul_str(u: str, v: str) -> str:
    """Product of two already-reduced strings; cancellation only at the seam."""
    n = min(len(u), len(v))
    k = 0
    while k < n and u[-1 - k] == v[k].swapcase():
        k += 1
    return u[: len(u) - k] + v[k:]


def sign_str(s: str) -> Sign:
    if not s:
        return Sign.EMPTY
    if s.islower():
        return Sign.POSITIVE
    if s.isupper():
        return Sign.NEGATIVE
    return Sign.MIXED


def sign_runs(s: str) -> str:
    """Collapse a reduced word to its run pattern, e.g. ``abCa`` -> ``+-+``."""
    runs = []
    for ch in s:
        mark = "+" if ch.islower() else "-"
        if not runs or runs[-1] != mark:
            runs.append(mark)
    return "".join(runs)


def common_prefix_str(ws: Iterable[str]) -> str:
    ws = list(ws)
    if not ws:
        return ""
    first = ws[0]
    n = min(len(w) for w in ws)
    k = 0
    while k < n and all(w[k] == first[k] for w in ws):
        k += 1
    return first[:k]


def common_suffix_str(ws: Iterable[str]) -> str:
    return common_prefix_str(w[::-1] for w in ws)[::-1]


# -- Word -----------------------------------------------------------------

class Word:
    """An element of the free group, stored in reduced form."""

    __slots__ = ("_s",)

    def __init__(self, text: str = ""):
        bad = set(text) - SYMBOLS
        if bad:
            raise ParseError(f"invalid letters {sorted(bad)} in word {text!r}")
        self._s = reduce_str(text)

    @classmethod
    def _wrap(cls, s: str) -> "Word":
        # s must already be reduced
        w = object.__new__(cls)
        w._s = s
        return w

    @property
    def text(self) -> str:
        return self._s

    def __str__(self) -> str:
        return self._s

    def __repr__(self) -> str:
        return f"Word({self._s!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self._s == other._s
        return NotImplemented

    def __lt__(self, other: "Word") -> bool:
        return (len(self._s), self._s) < (len(other._s), other._s)

    def __hash__(self) -> int:
        return hash(self._s)

    def __len__(self) -> int:
        return len(self._s)

    def __bool__(self) -> bool:
        return bool(self._s)

    def __iter__(self) -> Iterator[SignedLetter]:
        return (SignedLetter.from_symbol(ch) for ch in self._s)

    def __mul__(self, other: "Word") -> "Word":
        return Word._wrap(mul_str(self._s, other._s))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word._wrap(reduce_str(self._s * n))

    def inverse(self) -> "Word":
        return Word._wrap(inv_str(self._s))

    def count(self, letter: str) -> int:
        return self._s.count(letter) - self._s.count(letter.upper())

    @property
    def sign(self) -> Sign:
        return sign_str(self._s)

    @property
    def is_positive(self) -> bool:
        return self.sign is Sign.POSITIVE


EMPTY = Word()


def parse_word(text: str) -> Word:
    return Word("".join(text.split()))


def reduce(raw: Sequence[SignedLetter] | Iterable[SignedLetter]) -> Word:
    return Word("".join(SignedLetter(*x).symbol for x in raw))


def concat(u: Word, v: Word) -> Word:
    return u * v


def inverse(w: Word) -> Word:
    return w.inverse()


def letter_count(w: Word, x: str) -> int:
    """Algebraic number of occurrences of ``x`` in ``w``."""
    return w.count(x)


def sign_of(w: Word) -> Sign:
    return w.sign


def first_letter(w: Word) -> SignedLetter:
    if not w:
        raise EmptyWordError("the empty word has no first letter")
    return SignedLetter.from_symbol(w.text[0])


def last_letter(w: Word) -> SignedLetter:
    if not w:
        raise EmptyWordError("the empty word has no last letter")
    return SignedLetter.from_symbol(w.text[-1])


def is_prefix(p: Word, w: Word) -> bool:
    # w = p r with |w| = |p| + |r| iff p's letters literally start w's reduced form
    return w.text.startswith(p.text)


def is_suffix(s: Word, w: Word) -> bool:
    return w.text.endswith(s.text)


def is_proper_prefix(p: Word, w: Word) -> bool:
    return len(p) < len(w) and is_prefix(p, w)


def is_proper_suffix(s: Word, w: Word) -> bool:
    return len(s) < len(w) and is_suffix(s, w)


def common_prefix(ws: Sequence[Word]) -> Word:
    return Word._wrap(common_prefix_str(w.text for w in ws))


def common_suffix(ws: Sequence[Word]) -> Word:
    return Word._wrap(common_suffix_str(w.text for w in ws))


def positive_words(max_len: int, min_len: int = 1) -> Iterator[Word]:
    """All positive words with ``min_len <= |w| <= max_len``, shortlex order."""
    from itertools import product

    for n in range(min_len, max_len + 1):
        for letters in product(LETTERS, repeat=n):
            yield Word._wrap("".join(letters))
