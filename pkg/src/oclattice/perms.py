"""Permutations of {1..m} as tuples of 1-based images: ``g[i-1] == g(i)``.

``compose(g, h)(i) == g(h(i))``, so renaming letters of words is a left action.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Sequence

from .errors import DegreeCapExceeded

Perm = tuple[int, ...]

MAX_DEGREE = 8


def identity_perm(m: int) -> Perm:
    return tuple(range(1, m + 1))


def compose(g: Perm, h: Perm) -> Perm:
    return tuple(g[i - 1] for i in h)


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, gi in enumerate(g, 1):
        out[gi - 1] = i
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group stored by its full element list."""

    degree: int
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...] = ()

    @cached_property
    def index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    def is_closed(self) -> bool:
        elems = set(self.elements)
        if self.identity not in elems:
            return False
        return all(inverse(g) in elems for g in elems) and all(
            compose(g, h) in elems for g in elems for h in elems)

    @classmethod
    def generated(cls, degree: int, gens: Sequence[Perm]) -> PermGroup:
        e = identity_perm(degree)
        gens = tuple(g for g in gens if g != e)
        seen = {e: None}
        queue = deque([e])
        while queue:
            h = queue.popleft()
            for g in gens:
                x = compose(g, h)
                if x not in seen:
                    seen[x] = None
                    queue.append(x)
        return cls(degree, tuple(sorted(seen)), gens)


def symmetric_group(m: int) -> PermGroup:
    if m > MAX_DEGREE:
        raise DegreeCapExceeded(f"degree {m} exceeds cap {MAX_DEGREE}")
    gens = tuple(transposition(m, i, i + 1) for i in range(1, m))
    return PermGroup(m, tuple(permutations(range(1, m + 1))), gens)


def transposition(m: int, i: int, j: int) -> Perm:
    g = list(range(1, m + 1))
    g[i - 1], g[j - 1] = j, i
    return tuple(g)
