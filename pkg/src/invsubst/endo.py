"""Endomorphisms of the free group on {a, b, c} and their matrices.

An endomorphism is stored as the triple of reduced images of ``a, b, c``.
Composition follows ``(s * t)(x) == s(t(x))`` so that
``matrix(s * t) == matrix(s) @ matrix(t)``.
"""
from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from .errors import ParseError
from .words import (
    LETTERS,
    Word,
    inv_str,
    reduce_str,
    sign_runs,
)

WordLike = Union[Word, str]


def _as_str(w: WordLike) -> str:
    return w.text if isinstance(w, Word) else Word(w).text


class Endomorphism:
    __slots__ = ("_imgs",)

    def __init__(self, a: WordLike, b: WordLike, c: WordLike):
        self._imgs = (_as_str(a), _as_str(b), _as_str(c))

    @classmethod
    def _from_strs(cls, imgs: Sequence[str]) -> "Endomorphism":
        # images must already be reduced
        if all(imgs) and all(s.islower() for s in imgs):
            obj = object.__new__(Substitution)
        else:
            obj = object.__new__(Endomorphism)
        obj._imgs = tuple(imgs)
        return obj

    @property
    def images(self) -> tuple[Word, Word, Word]:
        return tuple(Word._wrap(s) for s in self._imgs)  # type: ignore[return-value]

    @property
    def strs(self) -> tuple[str, str, str]:
        return self._imgs

    def image(self, letter: str) -> Word:
        return Word._wrap(self._imgs[LETTERS.index(letter)])

    def __call__(self, w: WordLike) -> Word:
        return apply(self, w if isinstance(w, Word) else Word(w))

    def __mul__(self, other: "Endomorphism") -> "Endomorphism":
        return compose(self, other)

    def __pow__(self, n: int) -> "Endomorphism":
        if n < 0:
            raise ValueError("negative powers need invert()")
        out = IDENTITY
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Endomorphism):
            return self._imgs == other._imgs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._imgs)

    def __lt__(self, other: "Endomorphism") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (len(self), self._imgs)

    def __len__(self) -> int:
        return sum(map(len, self._imgs))

    @property
    def min_length(self) -> int:
        return min(map(len, self._imgs))

    @property
    def is_substitution(self) -> bool:
        return all(self._imgs) and all(s.islower() for s in self._imgs)

    @property
    def is_permutation(self) -> bool:
        return sorted(self._imgs) == ["a", "b", "c"]

    @property
    def is_identity(self) -> bool:
        return self._imgs == ("a", "b", "c")

    def __str__(self) -> str:
        return ",".join(self._imgs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def as_substitution(self) -> "Substitution":
        if isinstance(self, Substitution):
            return self
        return Substitution(*self._imgs)


class Substitution(Endomorphism):
    """An endomorphism whose three images are non-empty positive words."""

    __slots__ = ()

    def __init__(self, a: WordLike, b: WordLike, c: WordLike):
        super().__init__(a, b, c)
        if not self.is_substitution:
            raise ValueError(f"not a substitution: images must be non-empty and positive, got {self}")


IDENTITY = Endomorphism._from_strs(("a", "b", "c"))


def parse_endomorphism(text: str) -> Endomorphism:
    """Parse a literal such as ``ab,acb,acc``; whitespace is ignored."""
    parts = "".join(text.split()).split(",")
    if len(parts) != 3:
        raise ParseError(
            f"expected exactly three images (rank 3 alphabet a, b, c), got {len(parts)} in {text!r}"
        )
    words = [Word(p) for p in parts]
    return Endomorphism._from_strs([w.text for w in words])


def parse_substitution(text: str) -> Substitution:
    e = parse_endomorphism(text)
    if not isinstance(e, Substitution):
        raise ParseError(f"not a substitution (images must be non-empty positive words): {text!r}")
    return e


def as_endomorphism(x: Endomorphism | str) -> Endomorphism:
    return x if isinstance(x, Endomorphism) else parse_endomorphism(x)


# -- operations -----------------------------------------------------------

def _apply_str(imgs: Sequence[str], w: str) -> str:
    pieces = []
    for ch in w:
        img = imgs[LETTERS.index(ch.lower())]
        pieces.append(img if ch.islower() else inv_str(img))
    return reduce_str("".join(pieces))


def apply(sigma: Endomorphism, w: Word) -> Word:
    return Word._wrap(_apply_str(sigma._imgs, w.text))


def compose(sigma: Endomorphism, tau: Endomorphism) -> Endomorphism:
    """``sigma o tau``: apply ``tau`` first."""
    return Endomorphism._from_strs([_apply_str(sigma._imgs, t) for t in tau._imgs])


def compose_all(maps: Sequence[Endomorphism]) -> Endomorphism:
    out = IDENTITY
    for m in maps:
        out = compose(out, m)
    return out


def inner(z: Word) -> Endomorphism:
    """The inner automorphism ``w -> z w z^-1``."""
    zi = inv_str(z.text)
    return Endomorphism._from_strs([reduce_str(z.text + x + zi) for x in LETTERS])


def conjugate(z: Word, sigma: Endomorphism) -> Endomorphism:
    """``inner(z) o sigma``."""
    zi = inv_str(z.text)
    return Endomorphism._from_strs([reduce_str(z.text + s + zi) for s in sigma._imgs])


def matrix(sigma: Endomorphism) -> np.ndarray:
    """Column ``x`` holds the algebraic letter counts of the image of ``x``."""
    m = np.zeros((3, 3), dtype=np.int64)
    for j, s in enumerate(sigma._imgs):
        for i, x in enumerate(LETTERS):
            m[i, j] = s.count(x) - s.count(x.upper())
    return m


def det(m) -> int:
    """Exact integer determinant of a 3x3 matrix."""
    (a, b, c), (d, e, f), (g, h, i) = [[int(v) for v in row] for row in m]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def is_mixed(sigma: Endomorphism) -> bool:
    """True iff every ``w_i w_k^-1 w_j`` (i != k, j != k) reduces to the pattern ``+-+``.

    Permutations satisfy the pattern too but are trivial, so they are excluded.
    """
    if sigma.is_permutation:
        return False
    w = sigma._imgs
    for i, j, k in itertools.product(range(3), repeat=3):
        if i == k or j == k:
            continue
        if sign_runs(reduce_str(w[i] + inv_str(w[k]) + w[j])) != "+-+":
            return False
    return True


# -- generators -----------------------------------------------------------

class Gen(enum.Enum):
    """The five elementary maps used by Nielsen reduction."""

    PI1 = "pi1"
    PI2 = "pi2"
    PHI_L = "phi_l"
    PHI_R = "phi_r"
    IOTA1 = "iota1"

    @property
    def endomorphism(self) -> Endomorphism:
        return _GEN_IMAGES[self]


_GEN_IMAGES = {
    Gen.PI1: Endomorphism._from_strs(("b", "a", "c")),
    Gen.PI2: Endomorphism._from_strs(("c", "b", "a")),
    Gen.PHI_L: Endomorphism._from_strs(("ba", "b", "c")),
    Gen.PHI_R: Endomorphism._from_strs(("ab", "b", "c")),
    Gen.IOTA1: Endomorphism._from_strs(("A", "b", "c")),
}

PI1 = Gen.PI1.endomorphism
PI2 = Gen.PI2.endomorphism
PHI_L = Gen.PHI_L.endomorphism
PHI_R = Gen.PHI_R.endomorphism
IOTA1 = Gen.IOTA1.endomorphism


def generator(gen: Gen | str) -> Endomorphism:
    return Gen(gen).endomorphism


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Perm:
    """Letter permutation given by the images of a, b, c, e.g. ``Perm("bca")``."""

    images: str

    def __post_init__(self):
        if sorted(self.images) != list(LETTERS):
            raise ValueError(f"not a permutation of abc: {self.images!r}")

    @property
    def substitution(self) -> Substitution:
        return Endomorphism._from_strs(tuple(self.images))  # type: ignore[return-value]

    @property
    def is_identity(self) -> bool:
        return self.images == LETTERS

    def inverse(self) -> "Perm":
        out = [""] * 3
        for i, y in enumerate(self.images):
            out[LETTERS.index(y)] = LETTERS[i]
        return Perm("".join(out))

    def __str__(self) -> str:
        return f"P({self.images})"


@dataclass(frozen=True)
class Fib:
    """Fibonacci-type substitution moving only ``target``.

    ``Fib(x, y, RIGHT)`` sends ``x -> xy``, ``Fib(x, y, LEFT)`` sends ``x -> yx``.
    """

    target: str
    neighbor: str
    side: Side

    def __post_init__(self):
        if self.target not in LETTERS or self.neighbor not in LETTERS or self.target == self.neighbor:
            raise ValueError(f"bad Fibonacci factor {self.target!r}, {self.neighbor!r}")
        object.__setattr__(self, "side", Side(self.side))

    @property
    def substitution(self) -> Substitution:
        imgs = list(LETTERS)
        i = LETTERS.index(self.target)
        if self.side is Side.RIGHT:
            imgs[i] = self.target + self.neighbor
        else:
            imgs[i] = self.neighbor + self.target
        return Endomorphism._from_strs(imgs)  # type: ignore[return-value]

    def __str__(self) -> str:
        return f"Fib({self.target},{self.neighbor},{self.side.value})"


Factor = Union[Perm, Fib]


def permutations() -> list[Perm]:
    return [Perm("".join(p)) for p in itertools.permutations(LETTERS)]


def fibonacci_factors() -> list[Fib]:
    return [
        Fib(x, y, side)
        for x in LETTERS
        for y in LETTERS
        if x != y
        for side in (Side.LEFT, Side.RIGHT)
    ]


@lru_cache(maxsize=None)
def _perm_words() -> dict[str, tuple[str, ...]]:
    # shortest words in pi1, pi2 for each of the six permutations
    words = {LETTERS: ()}
    queue = deque([IDENTITY])
    while queue:
        p = queue.popleft()
        for g in (Gen.PI1, Gen.PI2):
            q = compose(p, g.endomorphism)
            key = "".join(q._imgs)
            if key not in words:
                words[key] = words["".join(p._imgs)] + (g.value,)
                queue.append(q)
    return words


def perm_word(p: Perm) -> tuple[str, ...]:
    return _perm_words()[p.images]


def expand_factor(f: Factor) -> tuple[str, ...]:
    """Spell a factor as a composition of pi1, pi2, phi_l, phi_r (left to right)."""
    if isinstance(f, Perm):
        return perm_word(f)
    # rho sends a -> target, b -> neighbor; then Fib = rho o phi o rho^-1
    rest = next(x for x in LETTERS if x not in (f.target, f.neighbor))
    rho = Perm(f.target + f.neighbor + rest)
    phi = Gen.PHI_R.value if f.side is Side.RIGHT else Gen.PHI_L.value
    return perm_word(rho) + (phi,) + perm_word(rho.inverse())


def from_generator_names(names: Sequence[str]) -> Endomorphism:
    return compose_all([Gen(n).endomorphism for n in names])

