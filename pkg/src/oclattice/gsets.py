"""The groups G_lambda, finite G-sets and their congruence lattices."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from typing import Callable, Optional, Sequence

from .errors import DegreeCapExceeded, DegreeMismatch, LatticeCapExceeded
from .lattices import FiniteLattice
from .perms import MAX_DEGREE, Perm, PermGroup, compose, symmetric_group, transposition
from .rewrite import FiniteEquivalence, Presentation, UnionFind, phi_lambda
from .words import DEFAULT_MAX_TOTAL, DEFAULT_MAX_WORDS, Partition, Word, format_word

DEFAULT_MAX_CONGRUENCES = 10**5


def g_lambda(p: Partition) -> PermGroup:
    """Permutations of the letters that preserve the component vector: the
    direct product of symmetric groups on runs of equal components."""
    m = p.m
    if m > MAX_DEGREE:
        raise DegreeCapExceeded(f"degree {m} exceeds cap {MAX_DEGREE}")
    blocks: list[list[int]] = []
    for i, c in enumerate(p.components, 1):
        if blocks and p.components[blocks[-1][0] - 1] == c:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    elements = []
    for choice in product(*(permutations(b) for b in blocks)):
        g = [0] * m
        for block, image in zip(blocks, choice):
            for i, gi in zip(block, image):
                g[i - 1] = gi
        elements.append(tuple(g))
    gens = tuple(transposition(m, b[j], b[j + 1]) for b in blocks for j in range(len(b) - 1))
    return PermGroup(m, tuple(sorted(elements)), gens)


def act_on_word(g: Perm, w: Word) -> Word:
    """Rename every letter ``x_i`` of ``w`` to ``x_g(i)``."""
    if max(w) > len(g):
        raise DegreeMismatch(f"word {format_word(w)} has letters beyond degree {len(g)}")
    return tuple(g[x - 1] for x in w)


@dataclass(frozen=True)
class GSet:
    """A finite G-set on points ``0..size-1``.

    ``gen_action[j]`` is the point permutation induced by ``group.generators[j]``;
    the action of an arbitrary element is computed from ``act`` on demand.
    """

    size: int
    group: PermGroup
    gen_action: tuple[tuple[int, ...], ...]
    act: Callable[[Perm, int], int] = field(compare=False, repr=False)
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False, repr=False)

    @cached_property
    def action(self) -> tuple[tuple[int, ...], ...]:
        """Point permutation for every group element, in ``group.elements`` order."""
        return tuple(tuple(self.act(g, a) for a in range(self.size)) for g in self.group.elements)

    def check_action(self) -> None:
        e = self.group.index[self.group.identity]
        if self.action[e] != tuple(range(self.size)):
            raise AssertionError("identity does not act trivially")
        for row in self.action:
            if sorted(row) != list(range(self.size)):
                raise AssertionError("group element does not act bijectively")
        idx = self.group.index
        for gi, g in enumerate(self.group.elements):
            for hi, h in enumerate(self.group.elements):
                gh = self.action[idx[compose(g, h)]]
                if any(gh[a] != self.action[gi][self.action[hi][a]] for a in range(self.size)):
                    raise AssertionError("action does not respect composition")

    @classmethod
    def from_action(cls, group: PermGroup, size: int, act: Callable[[Perm, int], int],
                    labels=None) -> GSet:
        gen_action = tuple(tuple(act(g, a) for a in range(size)) for g in group.generators)
        return cls(size, group, gen_action, act, labels)


def natural_gset(m: int) -> GSet:
    return GSet.from_action(symmetric_group(m), m, lambda g, a: g[a] - 1)


def regular_gset(m: int) -> GSet:
    group = symmetric_group(m)
    elems, idx = group.elements, group.index
    return GSet.from_action(group, group.order, lambda g, a: idx[compose(g, elems[a])])


def trivial_gset(size: int) -> GSet:
    group = PermGroup(1, ((1,),), ())
    return GSet.from_action(group, size, lambda g, a: a)


def quotient_gset(sigma: Presentation, p: Partition, max_total: int = DEFAULT_MAX_TOTAL,
                  max_words: int = DEFAULT_MAX_WORDS) -> GSet:
    """The G_lambda-set of phi-classes of the canonical word class of ``p``.

    Stability of the classes under renaming is verified for every generator
    on every word; a failure is a bug in the closure, never bad input.
    """
    phi = phi_lambda(sigma, p.content(), max_total, max_words)
    group = g_lambda(p)
    words = phi.domain.words
    index = phi.domain.index
    class_of = phi.class_of
    reps = [cls[0] for cls in phi.classes()]
    gen_action = []
    for g in group.generators:
        image = [class_of[index[act_on_word(g, words[r])]] for r in reps]
        for i, w in enumerate(words):
            if class_of[index[act_on_word(g, w)]] != image[class_of[i]]:
                raise AssertionError(f"phi is not stable under {g} at {format_word(w)}")
        gen_action.append(tuple(image))

    def act(g: Perm, a: int) -> int:
        return class_of[index[act_on_word(g, words[reps[a]])]]

    labels = tuple(format_word(words[r]) for r in reps)
    return GSet(len(reps), group, tuple(gen_action), act, labels)


def _stable_closure(a: GSet, uf: UnionFind, pairs: list[tuple[int, int]]) -> None:
    """Merge ``pairs`` and their images under the group into ``uf``."""
    seen = set(pairs)
    queue = deque(pairs)
    while queue:
        i, j = queue.popleft()
        uf.union(i, j)
        for perm in a.gen_action:
            q = (perm[i], perm[j])
            if q not in seen:
                seen.add(q)
                queue.append(q)


def principal_congruence(a: GSet, i: int, j: int) -> FiniteEquivalence:
    for x in (i, j):
        if not 0 <= x < a.size:
            raise IndexError(f"point {x} out of range for G-set of size {a.size}")
    uf = UnionFind(a.size)
    if i != j:
        _stable_closure(a, uf, [(i, j)])
    return uf.equivalence()


def is_stable(a: GSet, e: FiniteEquivalence) -> bool:
    """Whether ``e`` is compatible with the action (checked on generators)."""
    for perm in a.gen_action:
        image: dict = {}
        for x, c in enumerate(e.class_of):
            if image.setdefault(c, e.class_of[perm[x]]) != e.class_of[perm[x]]:
                return False
    return True


def congruences(a: GSet, max_congruences: int = DEFAULT_MAX_CONGRUENCES) -> list[FiniteEquivalence]:
    """All congruences of ``a``: the join-closure of the principal ones and the
    diagonal.  Ordered by number of classes (descending), then lexicographically."""
    principals = {}
    for i in range(a.size):
        for j in range(i + 1, a.size):
            p = principal_congruence(a, i, j)
            principals[p.class_of] = p
    bottom = FiniteEquivalence.identity(a.size)
    found = {bottom.class_of: bottom}
    found.update(principals)
    if len(found) > max_congruences:
        raise LatticeCapExceeded(f"more than {max_congruences} congruences")
    queue = deque(found.values())
    gens = list(principals.values())
    while queue:
        c = queue.popleft()
        for p in gens:
            j = c.join(p)
            if j.class_of not in found:
                found[j.class_of] = j
                if len(found) > max_congruences:
                    raise LatticeCapExceeded(f"more than {max_congruences} congruences")
                queue.append(j)
    return sorted(found.values(), key=lambda e: (-e.num_classes, e.class_of))


def congruence_lattice(a: GSet, max_congruences: int = DEFAULT_MAX_CONGRUENCES) -> FiniteLattice:
    return equivalence_lattice(congruences(a, max_congruences))


def equivalence_lattice(members: Sequence[FiniteEquivalence]) -> FiniteLattice:
    """Lattice of a meet- and join-closed family of equivalences under refinement."""
    members = list(members)
    leq = [[x.refines(y) for y in members] for x in members]
    labels = tuple("|".join(",".join(map(str, cls)) for cls in e.classes()) for e in members)
    return FiniteLattice.from_leq(leq, labels)


def is_transitive(a: GSet) -> bool:
    if a.size == 0:
        return True
    uf = UnionFind(a.size)
    for perm in a.gen_action:
        for x in range(a.size):
            uf.union(x, perm[x])
    return uf.equivalence().num_classes == 1


def is_regular(a: GSet) -> bool:
    """Transitive, and no element other than the identity fixes a point."""
    if not is_transitive(a):
        return False
    e = a.group.identity
    for g, row in zip(a.group.elements, a.action):
        if g != e and any(row[x] == x for x in range(a.size)):
            return False
    return True
