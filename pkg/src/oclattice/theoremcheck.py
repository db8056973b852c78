"""Deciding whether an overcommutative variety has a lattice of overcommutative
subvarieties with a non-trivial identity, plus the bookkeeping behind the
boundedness argument: P_k levels, the level n of the two auxiliary
identities, the bound N, and the L/M/R factorization of words.

The verdict is three-valued because permutativity is only semidecidable:
a permutation identity can be found, never refuted, by a bounded search.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .deciders import LZ, RZ, XDUAL, X, contains_fixed, sigma_pk
from .errors import (
    BoundaryPropertyViolated,
    NoNormalFormFound,
    NotOvercommutative,
    PremiseFailed,
    SizeCapExceeded,
    WordTooShort,
)
from .rewrite import Presentation, derivable, phi_lambda, rewrite_neighbors
from .words import DEFAULT_MAX_TOTAL, DEFAULT_MAX_WORDS, Content, Word, reverse

MAX_PERMUTATIVE_N = 7
MAX_LEMMA5_N = 3
MAX_LEMMA6_N = 2


@dataclass(frozen=True)
class PermutativityWitness:
    """``x1 x2 .. xn = x_g(1) .. x_g(n)`` holds, with ``g`` non-trivial."""

    n: int
    g: tuple[int, ...]

    @property
    def lhs(self) -> Word:
        return tuple(range(1, self.n + 1))

    @property
    def rhs(self) -> Word:
        return self.g


@dataclass(frozen=True)
class ConditionEReport:
    witness: Optional[PermutativityWitness]
    search_bound: int
    contains_lz: bool
    contains_rz: bool
    contains_x: bool
    contains_xdual: bool
    satisfies_e: Optional[bool]

    @property
    def permutative(self) -> bool:
        return self.witness is not None

    def violations(self) -> list[str]:
        names = ("contains_lz", "contains_rz", "contains_x", "contains_xdual")
        return [n for n in names if getattr(self, n)]


@dataclass(frozen=True)
class BoundParams:
    k: int
    n: int
    N: int

    @property
    def card_bound_log2(self) -> int:
        return self.N * self.N

    @property
    def card_bound(self) -> int:
        """``2^(N^2)``, built on request since it can be astronomically long."""
        return 1 << self.card_bound_log2


def is_overcommutative(sigma: Presentation) -> bool:
    return sigma.balanced


def is_permutative(sigma: Presentation, n_max: int = 6,
                   max_n: int = MAX_PERMUTATIVE_N) -> Optional[PermutativityWitness]:
    """Smallest permutation identity derivable from ``sigma`` on at most
    ``n_max`` letters, or ``None`` if there is none up to that length.

    On the square-free words of full support over x1..xn the renaming group
    acts regularly, so some class is non-trivial iff the class of x1..xn is,
    and that happens iff x1..xn has a one-step neighbour.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > max_n:
        raise SizeCapExceeded(f"n_max={n_max} exceeds the factorial cap {max_n}")
    sigma.require_balanced()
    for n in range(2, n_max + 1):
        neighbors = rewrite_neighbors(tuple(range(1, n + 1)), sigma)
        if neighbors:
            return PermutativityWitness(n, min(neighbors))
    return None


def pk_identity(k: int) -> tuple[Word, Word]:
    ident = sigma_pk(k).identities[0]
    return ident.lhs, ident.rhs


def least_pk(sigma: Presentation, k_max: int = 3, max_total: int = DEFAULT_MAX_TOTAL,
             max_words: int = DEFAULT_MAX_WORDS) -> Optional[int]:
    """Least ``k <= k_max`` with ``var(sigma) <= P_k``.  ``None`` does not
    mean the variety escapes every P_k, only that ``k_max`` was too small."""
    for k in range(k_max + 1):
        if derivable(sigma, *pk_identity(k), max_total=max_total, max_words=max_words):
            return k
    return None


def lemma5_identity(n: int) -> tuple[Word, Word]:
    """``x^n y^n z^n = y^n x^n z^n``."""
    x, y, z = (1,) * n, (2,) * n, (3,) * n
    return x + y + z, y + x + z


def lemma6_identity(n: int) -> tuple[Word, Word]:
    """``x t x^(n-1) y^n z^n = y t y^(n-1) x^n z^n``."""
    x, y, z, t = 1, 2, 3, 4
    lhs = (x, t) + (x,) * (n - 1) + (y,) * n + (z,) * n
    rhs = (y, t) + (y,) * (n - 1) + (x,) * n + (z,) * n
    return lhs, rhs


def _witness(sigma, lhs, rhs, dual, max_words):
    if dual:
        lhs, rhs = reverse(lhs), reverse(rhs)
    return derivable(sigma, lhs, rhs, max_words=max_words)


def lemma5_witness(sigma: Presentation, n: int, dual: bool = False, max_n: int = MAX_LEMMA5_N,
                   max_words: int = DEFAULT_MAX_WORDS) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SizeCapExceeded(f"n={n} exceeds cap {max_n} for x^n y^n z^n")
    return _witness(sigma, *lemma5_identity(n), dual, max_words)


def lemma6_witness(sigma: Presentation, n: int, dual: bool = False, max_n: int = MAX_LEMMA6_N,
                   max_words: int = DEFAULT_MAX_WORDS) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SizeCapExceeded(f"n={n} exceeds cap {max_n} for x t x^(n-1) y^n z^n")
    return _witness(sigma, *lemma6_identity(n), dual, max_words)


def least_lemma_level(sigma: Presentation, n_max: int = MAX_LEMMA6_N) -> Optional[int]:
    """Least ``n <= n_max`` at which both auxiliary identities and their
    duals are derivable."""
    for n in range(1, n_max + 1):
        if all(f(sigma, n, dual=d) for f in (lemma5_witness, lemma6_witness) for d in (False, True)):
            return n
    return None


def check_condition_e(sigma: Presentation, n_max: int = 6) -> ConditionEReport:
    if not is_overcommutative(sigma):
        raise NotOvercommutative("presentation contains an unbalanced identity")
    witness = is_permutative(sigma, n_max)
    flags = {name: contains_fixed(sigma, f) for name, f in
             (("contains_lz", LZ), ("contains_rz", RZ), ("contains_x", X), ("contains_xdual", XDUAL))}
    # the verdict is gated on permutativity: without a permutation identity
    # the search is inconclusive, even if the containment flags are set
    if witness is None:
        verdict: Optional[bool] = None
    else:
        verdict = not any(flags.values())
    return ConditionEReport(witness, n_max, satisfies_e=verdict, **flags)


def bound_params(k: int, n: int) -> BoundParams:
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    N = (4 * k * (2 * n + k - 1) + 2) ** (2 * k)
    return BoundParams(k, n, N)


def lmr_split(w: Word, k: int) -> tuple[Optional[Word], Word, Optional[Word]]:
    """``w = L M R`` with ``|L| = |R| = k``; for ``k = 0`` L and R are None."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if len(w) < 2 * k + 1:
        raise WordTooShort(f"word of length {len(w)} is shorter than 2k+1 = {2 * k + 1}")
    if k == 0:
        return None, w, None
    return w[:k], w[k:len(w) - k], w[len(w) - k:]


def _top_two(w: Word) -> set[int]:
    counts = Counter(w)
    return set(sorted(counts, key=lambda x: (-counts[x], x))[:2])


def _ends(w: Word, k: int) -> Word:
    left, _, right = lmr_split(w, k)
    return (left or ()) + (right or ())


def condition_i(w: Word, k: int, n: int) -> bool:
    """No letter of L(w) or R(w) occurs at least ``n + 2k`` times in ``w``,
    except the two most frequent letters (ties go to the smaller index)."""
    ends = _ends(w, k)
    counts = Counter(w)
    exempt = _top_two(w)
    return not any(counts[x] >= n + 2 * k and x not in exempt for x in ends)


def condition_ii(w: Word, k: int, n: int) -> bool:
    """Letters of L(w) and R(w) whose multiplicity ``i < n + 2k`` is shared by
    at least ``4k`` letters must come from a fixed set of ``4k`` such letters;
    the fixed set is the ``4k`` smallest indices with multiplicity ``i``."""
    counts = Counter(w)
    by_mult: dict[int, list[int]] = {}
    for x in sorted(counts):
        by_mult.setdefault(counts[x], []).append(x)
    for x in _ends(w, k):
        i = counts[x]
        same = by_mult[i]
        if i < n + 2 * k and len(same) >= 4 * k and x not in same[:4 * k]:
            return False
    return True


def normalize_ends(sigma: Presentation, w: Word, k: int, n: int,
                   max_words: int = DEFAULT_MAX_WORDS) -> Word:
    """A word equal to ``w`` in ``var(sigma)`` that satisfies condition (i).

    The search runs over the already materialized class of ``w`` (smallest
    word first) instead of replaying the rewriting argument.  The caller is
    responsible for the premises; without them a missing normal form is
    possible and is reported as ``NoNormalFormFound``.
    """
    if condition_i(w, k, n):
        return w
    phi = phi_lambda(sigma, _content(w), max_words=max_words)
    idx = phi.domain.index[w]
    cls = phi.classes()[phi.class_of[idx]]
    for j in cls:
        v = phi.domain.words[j]
        if condition_i(v, k, n):
            return v
    raise NoNormalFormFound(f"no word satisfying condition (i) in the class of {w}")


def _content(w: Word) -> Content:
    return Content.of(Counter(w))


@dataclass(frozen=True)
class ClassBound:
    class_count: int
    boundary_count: int
    restricted_count: int
    N: int


def verify_class_bound(sigma: Presentation, c: Content, k: int, n: int,
                       max_words: int = DEFAULT_MAX_WORDS) -> ClassBound:
    """Check the counting argument on one word class.

    1. ``var(sigma) <= P_k`` (otherwise ``PremiseFailed``).
    2. Words with the same (L, R) pair are phi-equivalent, exhaustively.
    3. Every class holds a word satisfying condition (i).
    4. ``class_count <= boundary_count``, where ``boundary_count`` is the number
       of distinct (L, R) pairs among condition-(i) words.
    5. Pairs of words satisfying (i) and (ii) number at most N.
    """
    if c.total < 2 * k + 2:
        raise WordTooShort(f"content total {c.total} must exceed 2k+1 = {2 * k + 1}")
    if not derivable(sigma, *pk_identity(k), max_words=max_words):
        raise PremiseFailed(f"variety is not contained in P_{k}")
    phi = phi_lambda(sigma, c, max_words=max_words)
    words = phi.domain.words
    fiber_class: dict = {}
    for i, w in enumerate(words):
        key = _boundary(w, k)
        if fiber_class.setdefault(key, phi.class_of[i]) != phi.class_of[i]:
            raise BoundaryPropertyViolated(f"words with boundary {key} lie in different classes")
    good_classes = set()
    boundaries = set()
    restricted = set()
    for i, w in enumerate(words):
        if condition_i(w, k, n):
            good_classes.add(phi.class_of[i])
            boundaries.add(_boundary(w, k))
            if condition_ii(w, k, n):
                restricted.add(_boundary(w, k))
    if len(good_classes) != phi.num_classes:
        raise NoNormalFormFound("some class has no word satisfying condition (i)")
    N = bound_params(k, n).N
    if not phi.num_classes <= len(boundaries):
        raise BoundaryPropertyViolated("more classes than boundary pairs")
    if len(restricted) > N:
        raise BoundaryPropertyViolated(f"{len(restricted)} restricted boundary pairs exceed N = {N}")
    return ClassBound(phi.num_classes, len(boundaries), len(restricted), N)


def _boundary(w: Word, k: int) -> tuple[Word, Word]:
    left, _, right = lmr_split(w, k)
    return left or (), right or ()
