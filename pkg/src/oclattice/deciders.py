"""Word problems of the fixed varieties COM, LZ, RZ, X, its dual, and P_k.

Each ``holds_in_*`` decides whether the identity ``u = v`` is satisfied by the
corresponding variety.  ``contains_fixed`` turns these into containment tests
``F <= var(sigma)``: a variety lies inside ``var(sigma)`` exactly when it
satisfies every defining identity of ``sigma``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .rewrite import Identity, Presentation
from .words import Word, is_balanced, reverse


@dataclass(frozen=True)
class FixedVariety:
    tag: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.tag not in ("COM", "LZ", "RZ", "X", "XDUAL", "PK"):
            raise ValueError(f"unknown fixed variety {self.tag!r}")
        if (self.tag == "PK") != (self.k is not None):
            raise ValueError("exactly the PK family carries a level k")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be non-negative")

    def __str__(self) -> str:
        return f"P_{self.k}" if self.tag == "PK" else self.tag


COM = FixedVariety("COM")
LZ = FixedVariety("LZ")
RZ = FixedVariety("RZ")
X = FixedVariety("X")
XDUAL = FixedVariety("XDUAL")


def PK(k: int) -> FixedVariety:
    return FixedVariety("PK", k)


def holds_in_com(u: Word, v: Word) -> bool:
    return is_balanced(u, v)


def holds_in_lz(u: Word, v: Word) -> bool:
    return u[0] == v[0]


def holds_in_rz(u: Word, v: Word) -> bool:
    return holds_in_lz(reverse(u), reverse(v))


def holds_in_x(u: Word, v: Word) -> bool:
    if not is_balanced(u, v):
        return False
    if u == v:
        return True
    if len(u) < 2:
        return False
    # balanced, so a letter is multiple in u iff it is multiple in v
    mult = Counter(u)
    first_same = u[0] == v[0]
    if first_same and u[1] == v[1]:
        return True
    if first_same and mult[u[1]] > 1 and mult[v[1]] > 1:
        return True
    return all(mult[x] > 1 for x in (u[0], u[1], v[0], v[1]))


def holds_in_x_dual(u: Word, v: Word) -> bool:
    return holds_in_x(reverse(u), reverse(v))


def holds_in_pk(u: Word, v: Word, k: int) -> bool:
    """P_k permits permuting the middle of a word once the first ``k`` and the
    last ``k`` letters are fixed; words of length at most ``2k+1`` are rigid."""
    if not is_balanced(u, v):
        return False
    if len(u) <= 2 * k + 1:
        return u == v
    return u[:k] == v[:k] and u[len(u) - k:] == v[len(v) - k:]


def holds_in(f: FixedVariety, u: Word, v: Word) -> bool:
    if f.tag == "PK":
        return holds_in_pk(u, v, f.k)
    return _DECIDERS[f.tag](u, v)


_DECIDERS = {
    "COM": holds_in_com,
    "LZ": holds_in_lz,
    "RZ": holds_in_rz,
    "X": holds_in_x,
    "XDUAL": holds_in_x_dual,
}


def contains_fixed(sigma: Presentation, f: FixedVariety) -> bool:
    return all(holds_in(f, i.lhs, i.rhs) for i in sigma)


def sigma_pk(k: int) -> Presentation:
    """``x1..xk y z t1..tk = x1..xk z y t1..tk`` over letters 1..2k+2."""
    lhs = tuple(range(1, 2 * k + 3))
    rhs = lhs[:k] + (lhs[k + 1], lhs[k]) + lhs[k + 2:]
    return Presentation((Identity(lhs, rhs),), name=f"P_{k}")


SIGMA_X = Presentation.of("xyzt = xytz", "xxyy = yyxx", "yyxx = xyxy", name="X")
SIGMA_LZ = Presentation.of("xy = x", name="LZ")
SIGMA_RZ = Presentation.of("xy = y", name="RZ")
SIGMA_COM = Presentation.of("xy = yx", name="COM")


def presentation_of(f: FixedVariety) -> Presentation:
    if f.tag == "PK":
        return sigma_pk(f.k)
    if f.tag == "XDUAL":
        return Presentation(SIGMA_X.reversed().identities, name="XDUAL")
    return {"COM": SIGMA_COM, "LZ": SIGMA_LZ, "RZ": SIGMA_RZ, "X": SIGMA_X}[f.tag]
