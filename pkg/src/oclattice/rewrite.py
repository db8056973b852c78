"""Identities, presentations, and the closure of a presentation on a word class.

``phi_lambda(sigma, c)`` is the restriction of the fully invariant congruence
generated by ``sigma`` to the words of content ``c``.  For a balanced system
every elementary rewrite preserves content, so the restriction is simply the
set of connected components of the one-step rewrite graph on ``W(c)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import ParseError, PatternTooLong, UnbalancedIdentity
from .words import (
    DEFAULT_MAX_TOTAL,
    DEFAULT_MAX_WORDS,
    Content,
    Word,
    WordClass,
    check_caps,
    content_of,
    enumerate_words,
    format_word,
    is_balanced,
    parse_word,
    reverse,
)

MAX_PATTERN_LENGTH = 16


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    @classmethod
    def parse(cls, text: str) -> Identity:
        left, sep, right = text.partition("=")
        if not sep or "=" in right:
            raise ParseError(f"expected '<word> = <word>', got {text!r}")
        return cls(parse_word(left), parse_word(right))

    @property
    def balanced(self) -> bool:
        return is_balanced(self.lhs, self.rhs)

    def reversed(self) -> Identity:
        return Identity(reverse(self.lhs), reverse(self.rhs))

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


@dataclass(frozen=True)
class Presentation:
    """A finite identity system; the empty system presents all semigroups."""

    identities: tuple[Identity, ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(dict.fromkeys(self.identities)))

    @classmethod
    def of(cls, *lines: str, name: Optional[str] = None) -> Presentation:
        return cls(tuple(Identity.parse(s) for s in lines), name)

    @classmethod
    def parse(cls, text: str, name: Optional[str] = None) -> Presentation:
        ids = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                ids.append(Identity.parse(line))
            except ParseError as e:
                raise ParseError(f"line {lineno}: {e}") from None
        return cls(tuple(ids), name)

    @classmethod
    def load(cls, path) -> Presentation:
        path = Path(path)
        return cls.parse(path.read_text(encoding="utf-8"), name=path.stem)

    def __or__(self, other: Presentation) -> Presentation:
        return Presentation(self.identities + other.identities)

    def __iter__(self) -> Iterator[Identity]:
        return iter(self.identities)

    def __len__(self) -> int:
        return len(self.identities)

    @property
    def balanced(self) -> bool:
        return all(i.balanced for i in self.identities)

    def require_balanced(self) -> None:
        for i in self.identities:
            if not i.balanced:
                raise UnbalancedIdentity(f"identity {i} is not balanced")

    def reversed(self) -> Presentation:
        return Presentation(tuple(i.reversed() for i in self.identities), self.name)

    def __str__(self) -> str:
        return "\n".join(map(str, self.identities))


@dataclass(frozen=True)
class Match:
    start: int
    end: int
    substitution: dict


def _iter_matches(pattern: Word, target: Word) -> Iterator[tuple[int, int, dict]]:
    """Yield ``(start, end, subst)``; order: start index, then cut points."""
    plen, tlen = len(pattern), len(target)
    subst: dict = {}

    def extend(pi: int, pos: int):
        if pi == plen:
            yield pos
            return
        x = pattern[pi]
        bound = subst.get(x)
        if bound is not None:
            nxt = pos + len(bound)
            if target[pos:nxt] == bound:
                yield from extend(pi + 1, nxt)
            return
        # every later pattern letter consumes at least one target letter
        for end in range(pos + 1, tlen - (plen - pi - 1) + 1):
            subst[x] = target[pos:end]
            yield from extend(pi + 1, end)
        subst.pop(x, None)

    for start in range(tlen - plen + 1):
        for end in extend(0, start):
            yield start, end, dict(subst)


def match_pattern(pattern: Word, target: Word) -> list[Match]:
    if len(pattern) > MAX_PATTERN_LENGTH:
        raise PatternTooLong(f"pattern length {len(pattern)} exceeds cap {MAX_PATTERN_LENGTH}")
    if len(pattern) > len(target):
        raise PatternTooLong(f"pattern {format_word(pattern)} is longer than {format_word(target)}")
    return [Match(s, e, sub) for s, e, sub in _iter_matches(pattern, target)]


def _apply(rhs: Word, subst: dict) -> Word:
    out: tuple = ()
    for x in rhs:
        out += subst[x]
    return out


def _directed_rules(sigma: Presentation, both: bool) -> list[tuple[Word, Word]]:
    rules = []
    for ident in sigma:
        if ident.lhs == ident.rhs:
            continue
        rules.append((ident.lhs, ident.rhs))
        if both:
            rules.append((ident.rhs, ident.lhs))
    for p, _ in rules:
        if len(p) > MAX_PATTERN_LENGTH:
            raise PatternTooLong(f"pattern length {len(p)} exceeds cap {MAX_PATTERN_LENGTH}")
    return rules


def _rewrites(w: Word, rules: list[tuple[Word, Word]]) -> Iterator[Word]:
    n = len(w)
    for p, q in rules:
        plen = len(p)
        if plen > n:
            continue
        if len(set(p)) == plen:
            # linear pattern: a match is any choice of cut points
            order = [p.index(x) for x in q]
            for start in range(n - plen + 1):
                head = w[:start]
                for cuts in combinations(range(start + 1, n + 1), plen):
                    bounds = (start,) + cuts
                    out = head
                    for i in order:
                        out += w[bounds[i]:bounds[i + 1]]
                    yield out + w[cuts[-1]:]
        else:
            for start, end, subst in _iter_matches(p, w):
                yield w[:start] + _apply(q, subst) + w[end:]


def rewrite_neighbors(w: Word, sigma: Presentation) -> set[Word]:
    """Words reachable from ``w`` by one application of an identity of
    ``sigma`` in either direction, excluding ``w`` itself."""
    sigma.require_balanced()
    out = set(_rewrites(w, _directed_rules(sigma, both=True)))
    out.discard(w)
    return out


@dataclass(frozen=True)
class FiniteEquivalence:
    """Equivalence on ``range(len(class_of))``; class ids are numbered by first
    occurrence so that equal relations have equal ``class_of`` tuples."""

    class_of: tuple[int, ...]
    domain: Optional[WordClass] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_labels(cls, labels: Iterable, domain: Optional[WordClass] = None) -> FiniteEquivalence:
        ids: dict = {}
        return cls(tuple(ids.setdefault(x, len(ids)) for x in labels), domain)

    @classmethod
    def identity(cls, n: int, domain=None) -> FiniteEquivalence:
        return cls(tuple(range(n)), domain)

    @classmethod
    def total(cls, n: int, domain=None) -> FiniteEquivalence:
        return cls((0,) * n, domain)

    def __len__(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for i, c in enumerate(self.class_of):
            out[c].append(i)
        return out

    def word_classes(self) -> list[list[Word]]:
        if self.domain is None:
            raise ValueError("equivalence has no word domain")
        words = self.domain.words
        return [[words[i] for i in cls] for cls in self.classes()]

    def related(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    def refines(self, other: FiniteEquivalence) -> bool:
        image: dict = {}
        return all(image.setdefault(a, b) == b for a, b in zip(self.class_of, other.class_of))

    def meet(self, other: FiniteEquivalence) -> FiniteEquivalence:
        return FiniteEquivalence.from_labels(zip(self.class_of, other.class_of), self.domain)

    def join(self, other: FiniteEquivalence) -> FiniteEquivalence:
        uf = UnionFind(len(self))
        for rel in (self, other):
            first: dict = {}
            for i, c in enumerate(rel.class_of):
                uf.union(first.setdefault(c, i), i)
        return uf.equivalence(self.domain)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        self.count -= 1
        return True

    def equivalence(self, domain=None) -> FiniteEquivalence:
        return FiniteEquivalence.from_labels((self.find(i) for i in range(len(self.parent))), domain)


@lru_cache(maxsize=256)
def _phi(sigma: Presentation, c: Content, max_total: int, max_words: int) -> FiniteEquivalence:
    wc = enumerate_words(c, max_total, max_words)
    index = wc.index
    # the rewrite graph is symmetric and every vertex is visited, so one
    # direction per identity finds every edge
    rules = _directed_rules(sigma, both=False)
    uf = UnionFind(len(wc))
    for i, w in enumerate(wc.words):
        if uf.count == 1:
            break
        for v in _rewrites(w, rules):
            uf.union(i, index[v])
    return uf.equivalence(wc)


def phi_lambda(sigma: Presentation, c: Content, max_total: int = DEFAULT_MAX_TOTAL,
               max_words: int = DEFAULT_MAX_WORDS) -> FiniteEquivalence:
    sigma.require_balanced()
    return _phi(Presentation(sigma.identities), c, max_total, max_words)


def derivable(sigma: Presentation, u: Word, v: Word, max_total: int = DEFAULT_MAX_TOTAL,
              max_words: int = DEFAULT_MAX_WORDS) -> bool:
    """Whether ``u = v`` holds in the variety presented by ``sigma``.

    Explores the rewrite component of ``u`` breadth-first and stops as soon as
    ``v`` turns up, so a positive answer rarely needs the whole class.
    """
    sigma.require_balanced()
    if not is_balanced(u, v):
        return False
    if u == v:
        return True
    check_caps(content_of(u), max_total, max_words)
    rules = _directed_rules(sigma, both=True)
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in _rewrites(w, rules):
            if x == v:
                return True
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return False


def component(sigma: Presentation, w: Word, max_total: int = DEFAULT_MAX_TOTAL,
              max_words: int = DEFAULT_MAX_WORDS) -> set[Word]:
    """All words equal to ``w`` in the variety presented by ``sigma``."""
    sigma.require_balanced()
    check_caps(content_of(w), max_total, max_words)
    rules = _directed_rules(sigma, both=True)
    seen = {w}
    queue = deque([w])
    while queue:
        for x in _rewrites(queue.popleft(), rules):
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return seen

