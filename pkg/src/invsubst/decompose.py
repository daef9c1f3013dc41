"""Split an invertible substitution into a conjugator and simple factors.

Every invertible substitution ``s`` on three letters can be written as
``inner(W) o g1 o ... o gk`` where each ``gi`` is a permutation or a
Fibonacci-type substitution and ``W`` is a positive or negative word no longer
than the shortest image of ``s``.  :func:`decompose` finds such a form by
alternating two moves on a working substitution ``t``:

* peel: when one image of ``t`` is a proper suffix (prefix) of another,
  ``t = t' o Fib`` with ``t'`` strictly shorter;
* strip: otherwise rotate the maximal common suffix (prefix) of the images
  to the other end, ``t = inner(delta) o t'`` with ``|t'| == |t|``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .endo import (
    Endomorphism,
    Factor,
    Fib,
    Perm,
    Side,
    Substitution,
    compose,
    compose_all,
    det,
    expand_factor,
    inner,
    is_mixed,
    matrix,
    permutations,
)
from .errors import InternalContradiction, NoPatternError, NotInvertibleError
from .nielsen import DEFAULT_BUDGET, is_invertible
from .words import (
    LETTERS,
    Sign,
    Word,
    common_prefix_str,
    common_suffix_str,
    inv_str,
)


@dataclass(frozen=True)
class Decomposition:
    """``inner(conjugator) o factors[0] o factors[1] o ...``"""

    conjugator: Word
    factors: tuple[Factor, ...] = field(default=())

    def simple_part(self) -> Endomorphism:
        return compose_all([f.substitution for f in self.factors])

    def recompose(self) -> Endomorphism:
        return compose(inner(self.conjugator), self.simple_part())

    def to_dict(self) -> dict:
        out = []
        for f in self.factors:
            if isinstance(f, Perm):
                out.append({"perm": f.images})
            else:
                out.append({"fib": {"target": f.target, "neighbor": f.neighbor, "side": f.side.value}})
        return {"conjugator": self.conjugator.text, "factors": out}

    def to_expanded_dict(self) -> dict:
        """Same, with each factor spelled in pi1, pi2, phi_l, phi_r."""
        return {
            "conjugator": self.conjugator.text,
            "factors": [list(expand_factor(f)) for f in self.factors],
        }

    def to_json(self, expanded: bool = False) -> str:
        return json.dumps(self.to_expanded_dict() if expanded else self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Decomposition":
        factors: list[Factor] = []
        for item in d["factors"]:
            if "perm" in item:
                factors.append(Perm(item["perm"]))
            else:
                fib = item["fib"]
                factors.append(Fib(fib["target"], fib["neighbor"], Side(fib["side"])))
        return cls(Word(d["conjugator"]), tuple(factors))

    def __str__(self) -> str:
        parts = [f"I[{self.conjugator.text}]"] + [str(f) for f in self.factors]
        return " o ".join(parts)


@dataclass(frozen=True)
class PatternSplit:
    """``t o permutation`` equals ``(ux, uv, yv)`` or ``(uxv, uv, y)``."""

    permutation: Perm
    kind: str
    u: str
    v: str
    x: str
    y: str

    UX_UV_YV = "UX_UV_YV"
    UXV_UV_Y = "UXV_UV_Y"

    def triple(self) -> tuple[str, str, str]:
        u, v, x, y = self.u, self.v, self.x, self.y
        if self.kind == self.UX_UV_YV:
            return (u + x, u + v, y + v)
        return (u + x + v, u + v, y)


def _sub(imgs) -> Substitution:
    return Endomorphism._from_strs(tuple(imgs))  # type: ignore[return-value]


def _peels(imgs: Sequence[str]):
    """All available peels in precedence order: suffix before prefix, (x, y) lexicographic."""
    for side in (Side.RIGHT, Side.LEFT):
        for i, x in enumerate(LETTERS):
            for j, y in enumerate(LETTERS):
                if i == j or len(imgs[j]) >= len(imgs[i]):
                    continue
                if side is Side.RIGHT and imgs[i].endswith(imgs[j]):
                    rest = imgs[i][: len(imgs[i]) - len(imgs[j])]
                elif side is Side.LEFT and imgs[i].startswith(imgs[j]):
                    rest = imgs[i][len(imgs[j]):]
                else:
                    continue
                out = list(imgs)
                out[i] = rest
                yield tuple(out), Fib(x, y, side)


def peel_once(tau: Substitution) -> tuple[Substitution, Fib] | None:
    """Remove one Fibonacci factor from the right, ``tau == result o fib``."""
    for imgs, fib in _peels(tau.strs):
        return _sub(imgs), fib
    return None


def strip_once(tau: Substitution) -> tuple[Substitution, Word] | None:
    """Rotate the maximal common suffix (else prefix) of the images.

    Returns ``(result, delta)`` with ``tau == inner(delta) o result``.
    """
    imgs = tau.strs
    w = common_suffix_str(imgs)
    if w:
        return _sub([w + s[: len(s) - len(w)] for s in imgs]), Word._wrap(inv_str(w))
    z = common_prefix_str(imgs)
    if z:
        return _sub([s[len(z):] + z for s in imgs]), Word._wrap(z)
    return None


def _is_simple_strs(imgs: tuple[str, str, str], dead: set) -> bool:
    if sorted(imgs) == ["a", "b", "c"]:
        return True
    if imgs in dead:
        return False
    for nxt, _ in _peels(imgs):
        if _is_simple_strs(nxt, dead):
            return True
    dead.add(imgs)
    return False


def is_simple(sigma: Substitution) -> bool:
    """True iff ``sigma`` is a product of permutations and Fibonacci substitutions.

    Tries every available peel (not only the first), so the answer does not
    depend on the scan order.
    """
    return _is_simple_strs(sigma.strs, set())


def _no_image_is_prefix_or_suffix(imgs) -> bool:
    return not any(
        i != j and (imgs[j].startswith(imgs[i]) or imgs[j].endswith(imgs[i]))
        for i in range(3)
        for j in range(3)
    )


def _match_ux_uv_yv(w1: str, w2: str, w3: str):
    for k in range(1, len(w2)):
        u, v = w2[:k], w2[k:]
        if len(w1) > k and w1.startswith(u) and len(w3) > len(v) and w3.endswith(v):
            return u, v, w1[k:], w3[: len(w3) - len(v)]
    return None


def _match_uxv_uv_y(w1: str, w2: str, w3: str):
    for k in range(1, len(w2)):
        u, v = w2[:k], w2[k:]
        if len(w1) > len(w2) and w1.startswith(u) and w1.endswith(v):
            return u, v, w1[k : len(w1) - len(v)], w3
    return None


def extract_pattern(tau: Substitution, *, budget: int = DEFAULT_BUDGET) -> PatternSplit:
    """Find a permutation with ``tau o p`` of shape ``(ux, uv, yv)`` or ``(uxv, uv, y)``."""
    imgs = tau.strs
    if not _no_image_is_prefix_or_suffix(imgs):
        raise ValueError(f"an image of {tau} is a prefix or suffix of another")
    # the first shape is tried under every permutation before the second
    for kind, match in ((PatternSplit.UX_UV_YV, _match_ux_uv_yv), (PatternSplit.UXV_UV_Y, _match_uxv_uv_y)):
        for p in permutations():
            found = match(*(imgs[LETTERS.index(ch)] for ch in p.images))
            if found:
                return PatternSplit(p, kind, *found)
    if is_mixed(tau):
        raise NoPatternError(f"{tau} is mixed", reason="mixed")
    if not is_invertible(tau, budget=budget):
        raise NoPatternError(f"{tau} is not invertible", reason="non-invertible")
    raise InternalContradiction(f"invertible {tau} has no (ux,uv,yv)/(uxv,uv,y) pattern")


def _decompose_loop(sigma: Substitution) -> Decomposition:
    imgs = sigma.strs
    conj = ""
    factors: list[Factor] = []
    seen = {imgs}
    for _ in range(4 * len(sigma) + 1):
        if sorted(imgs) == ["a", "b", "c"]:
            p = Perm("".join(imgs))
            if not p.is_identity:
                factors.insert(0, p)
            break
        peel = next(_peels(imgs), None)
        if peel is not None:
            imgs, fib = peel
            factors.insert(0, fib)
        else:
            stripped = strip_once(_sub(imgs))
            if stripped is None:
                raise InternalContradiction(f"{_sub(imgs)} admits neither a peel nor a strip")
            nxt, delta = stripped
            imgs = nxt.strs
            conj = (Word._wrap(conj) * delta).text
        if imgs in seen:
            raise InternalContradiction(f"decomposition of {sigma} revisited {_sub(imgs)}")
        seen.add(imgs)
    else:
        raise InternalContradiction(f"decomposition of {sigma} exceeded its iteration cap")
    return Decomposition(Word._wrap(conj), tuple(factors))


def decompose(sigma: Substitution, *, budget: int = DEFAULT_BUDGET) -> Decomposition:
    """``sigma == inner(W) o g1 o ... o gk`` with simple factors ``gi``.

    A finished decomposition is itself a proof of invertibility, so the Nielsen
    search only runs when the loop gets stuck, to tell bad input from a bug.
    """
    sigma = sigma.as_substitution()
    if abs(det(matrix(sigma))) != 1:
        raise NotInvertibleError(f"{sigma} is not invertible (det {det(matrix(sigma))})")
    try:
        result = _decompose_loop(sigma)
    except InternalContradiction:
        if not is_invertible(sigma, budget=budget):
            raise NotInvertibleError(f"{sigma} is not invertible") from None
        raise
    if result.conjugator.sign is Sign.MIXED:
        raise InternalContradiction(f"conjugator {result.conjugator} of {sigma} is mixed")
    if result.recompose() != sigma:
        raise InternalContradiction(f"decomposition {result} does not recompose to {sigma}")
    return result
