"""Words over the alphabet x1, x2, ..., their contents, partitions and the
word classes W(c) of all words with a prescribed content.

A word is a plain tuple of positive letter indices.  Indices 1..26 are
rendered as ``a``..``z``; larger indices as ``x27``, ``x28``, ...
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterator, Mapping

from .errors import EmptyWord, LetterAbsent, ParseError, SizeCapExceeded, UnknownSymbol

Word = tuple[int, ...]

DEFAULT_MAX_TOTAL = 12
DEFAULT_MAX_WORDS = 10**6

_TOKEN = re.compile(r"x(\d+)|([a-z])")


def letter_symbol(i: int) -> str:
    if i < 1:
        raise ValueError(f"letter index must be positive, got {i}")
    return chr(ord("a") + i - 1) if i <= 26 else f"x{i}"


def parse_letter(text: str) -> int:
    w = parse_word(text)
    if len(w) != 1:
        raise UnknownSymbol(f"not a single letter: {text!r}")
    return w[0]


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        raise EmptyWord("empty word")
    letters = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise UnknownSymbol(f"unknown symbol {text[pos]!r} at position {pos} in {text!r}")
        if m.group(1) is not None:
            i = int(m.group(1))
            if i < 1:
                raise UnknownSymbol(f"letter index must be >= 1 in {text!r}")
        else:
            i = ord(m.group(2)) - ord("a") + 1
        letters.append(i)
        pos = m.end()
    return tuple(letters)


def format_word(w: Word) -> str:
    return "".join(letter_symbol(i) for i in w)


def reverse(w: Word) -> Word:
    return w[::-1]


@dataclass(frozen=True)
class Content:
    """Letter multiplicities of a word, stored as sorted ``(letter, count)`` pairs."""

    items: tuple[tuple[int, int], ...]
    _map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.items:
            raise EmptyWord("content must be nonempty")
        for letter, count in self.items:
            if letter < 1 or count < 1:
                raise ValueError(f"invalid content entry {letter}:{count}")
        letters = [x for x, _ in self.items]
        if letters != sorted(set(letters)):
            raise ValueError("content items must be sorted by letter without repeats")
        object.__setattr__(self, "_map", dict(self.items))

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> Content:
        return cls(tuple(sorted((x, c) for x, c in mapping.items() if c)))

    @classmethod
    def parse(cls, text: str) -> Content:
        """Parse ``"x:2,y:1"``."""
        text = text.strip()
        if not text:
            raise ParseError("empty content")
        counts: dict[int, int] = {}
        for part in text.split(","):
            sym, sep, num = part.partition(":")
            if not sep:
                raise ParseError(f"expected letter:count, got {part!r}")
            letter = parse_letter(sym)
            try:
                n = int(num)
            except ValueError:
                raise ParseError(f"bad count in {part!r}") from None
            if n < 1:
                raise ParseError(f"count must be positive in {part!r}")
            if letter in counts:
                raise ParseError(f"letter repeated in content: {sym!r}")
            counts[letter] = n
        return cls.of(counts)

    def __getitem__(self, letter: int) -> int:
        return self._map.get(letter, 0)

    def __contains__(self, letter: int) -> bool:
        return letter in self._map

    def __len__(self) -> int:
        return len(self.items)

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.items)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.items)

    def word_count(self) -> int:
        return factorial(self.total) // prod(factorial(c) for _, c in self.items)

    def __str__(self) -> str:
        return ",".join(f"{letter_symbol(x)}:{c}" for x, c in self.items)


@dataclass(frozen=True)
class Partition:
    components: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.components)
        object.__setattr__(self, "components", c)
        if not c:
            raise ValueError("a partition needs at least one component")
        if any(x < 1 for x in c):
            raise ValueError("partition components must be positive")
        if any(a < b for a, b in zip(c, c[1:])):
            raise ValueError(f"partition components must be non-increasing: {c}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ParseError(f"bad partition {text!r}") from None
        try:
            return cls(tuple(parts))
        except ValueError as e:
            raise ParseError(str(e)) from None

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(self.components)

    def content(self) -> Content:
        """Canonical content: letter i occurs ``components[i-1]`` times."""
        return Content(tuple((i + 1, c) for i, c in enumerate(self.components)))

    def __str__(self) -> str:
        return ",".join(map(str, self.components))


def content_of(w: Word) -> Content:
    if not w:
        raise EmptyWord("empty word")
    return Content.of(Counter(w))


def is_balanced(u: Word, v: Word) -> bool:
    return len(u) == len(v) and Counter(u) == Counter(v)


def partition_of(c: Content) -> Partition:
    return Partition(tuple(sorted((n for _, n in c.items), reverse=True)))


def is_simple(x: int, w: Word) -> bool:
    n = w.count(x)
    if n == 0:
        raise LetterAbsent(f"letter {letter_symbol(x)} does not occur in {format_word(w)}")
    return n == 1


def multiset_permutations(items) -> Iterator[tuple]:
    """All distinct permutations of ``items`` in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


@dataclass(frozen=True)
class WordClass:
    content: Content
    words: tuple[Word, ...]
    index: dict = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


def check_caps(c: Content, max_total: int = DEFAULT_MAX_TOTAL,
               max_words: int = DEFAULT_MAX_WORDS) -> int:
    if c.total > max_total:
        raise SizeCapExceeded(f"content {c} has {c.total} letters, cap is {max_total}")
    count = c.word_count()
    if count > max_words:
        raise SizeCapExceeded(f"content {c} has {count} words, cap is {max_words}")
    return count


def enumerate_words(c: Content, max_total: int = DEFAULT_MAX_TOTAL,
                    max_words: int = DEFAULT_MAX_WORDS) -> WordClass:
    check_caps(c, max_total, max_words)
    letters = [x for x, n in c.items for _ in range(n)]
    words = tuple(multiset_permutations(letters))
    return WordClass(c, words, {w: i for i, w in enumerate(words)})
