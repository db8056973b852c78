"""Finite lattices stored as full order/join/meet tables.

Tables are numpy arrays indexed by element number.  ``FiniteLattice.from_leq``
is the single entry point that derives joins and meets from an order; it
rejects orders that are not lattices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import AssignmentCapExceeded, SizeCapExceeded
from .perms import PermGroup, compose, symmetric_group

MAX_PARTITION_DEGREE = 8
MAX_ISO_SIZE = 100
MAX_ASSIGNMENTS = 10**7


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    labels: Optional[tuple[str, ...]] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.leq)

    def __len__(self) -> int:
        return self.size

    @classmethod
    def from_leq(cls, leq, labels: Optional[Sequence[str]] = None) -> FiniteLattice:
        leq = np.asarray(leq, dtype=bool)
        n = len(leq)
        if n == 0:
            raise ValueError("a lattice must be nonempty")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        li = leq.astype(np.int64)
        if ((li @ li > 0) & ~leq).any():
            raise ValueError("order is not transitive")
        # an element is determined by its up-set; the join of a and b is the
        # element whose up-set is the intersection of theirs
        up = [int("".join("1" if x else "0" for x in row[::-1]), 2) for row in leq]
        down = [int("".join("1" if x else "0" for x in col[::-1]), 2) for col in leq.T]
        by_up = {u: i for i, u in enumerate(up)}
        by_down = {d: i for i, d in enumerate(down)}
        join = np.empty((n, n), dtype=np.int32)
        meet = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            ua, da = up[a], down[a]
            for b in range(a, n):
                try:
                    j = by_up[ua & up[b]]
                    m = by_down[da & down[b]]
                except KeyError:
                    raise ValueError(f"elements {a} and {b} have no join or no meet") from None
                join[a, b] = join[b, a] = j
                meet[a, b] = meet[b, a] = m
        return cls(leq, join, meet, None if labels is None else tuple(labels))

    @property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def lower_covers(self) -> np.ndarray:
        """``covers[a, b]`` is true when ``a`` is covered by ``b``."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        li = lt.astype(np.int64)
        return lt & ~(li @ li > 0)

    def ranks(self) -> list[int]:
        """Length of the longest chain from the bottom to each element."""
        cov = self.lower_covers()
        order = np.argsort(self.leq.sum(axis=0), kind="stable")
        rank = [0] * self.size
        for b in order:
            below = np.flatnonzero(cov[:, b])
            rank[b] = max((rank[a] + 1 for a in below), default=0)
        return rank

    @property
    def height(self) -> int:
        return self.ranks()[self.top]

    def atoms(self) -> list[int]:
        return [int(b) for b in np.flatnonzero(self.lower_covers()[self.bottom])]

    def invariants(self) -> tuple[int, int, int]:
        return self.size, len(self.atoms()), self.height

    def element_invariants(self) -> list[tuple]:
        cov = self.lower_covers()
        ranks = self.ranks()
        downs = self.leq.sum(axis=0)
        ups = self.leq.sum(axis=1)
        return [(ranks[a], int(downs[a]), int(ups[a]), int(cov[:, a].sum()), int(cov[a].sum()))
                for a in range(self.size)]

    def to_json_dict(self) -> dict:
        d = {"size": self.size, "leq": self.leq.astype(int).tolist()}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> FiniteLattice:
        leq = d["leq"]
        if len(leq) != d["size"]:
            raise ValueError("size does not match leq table")
        return cls.from_leq(leq, d.get("labels"))

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> FiniteLattice:
        return cls.from_json_dict(json.loads(text))

    def same_tables(self, other: FiniteLattice) -> bool:
        return (self.size == other.size and (self.leq == other.leq).all()
                and (self.join == other.join).all() and (self.meet == other.meet).all())


# ---- lattice terms ----------------------------------------------------------

class Term:
    def __or__(self, other: Term) -> Term:
        return Join(self, other)

    def __and__(self, other: Term) -> Term:
        return Meet(self, other)


@dataclass(frozen=True)
class Var(Term):
    index: int

    def __str__(self):
        return "xyzuvw"[self.index] if self.index < 6 else f"v{self.index}"


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term

    def __str__(self):
        return f"({self.left} v {self.right})"


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term

    def __str__(self):
        return f"({self.left} ^ {self.right})"


def term_vars(t: Term) -> set[int]:
    if isinstance(t, Var):
        return {t.index}
    return term_vars(t.left) | term_vars(t.right)


def dual_term(t: Term) -> Term:
    if isinstance(t, Var):
        return t
    if isinstance(t, Join):
        return Meet(dual_term(t.left), dual_term(t.right))
    return Join(dual_term(t.left), dual_term(t.right))


@dataclass(frozen=True)
class LatticeIdentity:
    lhs: Term
    rhs: Term

    @property
    def num_vars(self) -> int:
        return max(term_vars(self.lhs) | term_vars(self.rhs)) + 1

    def dual(self) -> LatticeIdentity:
        return LatticeIdentity(dual_term(self.lhs), dual_term(self.rhs))

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


_x, _y, _z = Var(0), Var(1), Var(2)
DISTRIBUTIVE_LAW = LatticeIdentity(_x & (_y | _z), (_x & _y) | (_x & _z))
MODULAR_LAW = LatticeIdentity(_x & (_y | (_x & _z)), (_x & _y) | (_x & _z))


def _evaluate(l: FiniteLattice, t: Term, values: np.ndarray) -> np.ndarray:
    if isinstance(t, Var):
        return values[t.index]
    a = _evaluate(l, t.left, values)
    b = _evaluate(l, t.right, values)
    return (l.join if isinstance(t, Join) else l.meet)[a, b]


def satisfies_identity(l: FiniteLattice, ident: LatticeIdentity,
                       max_assignments: int = MAX_ASSIGNMENTS) -> bool:
    v = ident.num_vars
    if l.size ** v > max_assignments:
        raise AssignmentCapExceeded(f"{l.size}^{v} assignments exceed cap {max_assignments}")
    values = np.indices((l.size,) * v, dtype=np.int32).reshape(v, -1)
    return bool((_evaluate(l, ident.lhs, values) == _evaluate(l, ident.rhs, values)).all())


def is_distributive(l: FiniteLattice) -> bool:
    return satisfies_identity(l, DISTRIBUTIVE_LAW)


def is_modular(l: FiniteLattice) -> bool:
    return satisfies_identity(l, MODULAR_LAW)


# ---- constructions ------------------------------------------------------------

def dual(l: FiniteLattice) -> FiniteLattice:
    return FiniteLattice(l.leq.T.copy(), l.meet.copy(), l.join.copy(), l.labels)


def direct_product(l1: FiniteLattice, l2: FiniteLattice, max_size: int = 10**4) -> FiniteLattice:
    n1, n2 = l1.size, l2.size
    if n1 * n2 > max_size:
        raise SizeCapExceeded(f"product of sizes {n1}x{n2} exceeds cap {max_size}")
    leq = np.einsum("ac,bd->abcd", l1.leq, l2.leq).reshape(n1 * n2, n1 * n2)
    join = (l1.join[:, None, :, None] * n2 + l2.join[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    meet = (l1.meet[:, None, :, None] * n2 + l2.meet[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = None
    if l1.labels is not None and l2.labels is not None:
        labels = tuple(f"({a},{b})" for a in l1.labels for b in l2.labels)
    return FiniteLattice(leq.astype(bool), join.astype(np.int32), meet.astype(np.int32), labels)


def chain(n: int) -> FiniteLattice:
    i = np.arange(n)
    return FiniteLattice.from_leq(i[:, None] <= i[None, :])


def boolean_lattice(k: int) -> FiniteLattice:
    n = 1 << k
    i = np.arange(n)
    return FiniteLattice.from_leq((i[:, None] & ~i[None, :]) == 0)


def _from_covers(n: int, covers: Sequence[tuple[int, int]]) -> FiniteLattice:
    leq = np.eye(n, dtype=bool)
    for a, b in covers:
        leq[a, b] = True
    for k in range(n):
        leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    return FiniteLattice.from_leq(leq)


def diamond_m3() -> FiniteLattice:
    return _from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def pentagon_n5() -> FiniteLattice:
    # 0 < a=1 < c=3 < 4, 0 < b=2 < 4
    return _from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` (one per set partition)."""
    if n == 0:
        yield ()
        return
    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            prefix.append(c)
            yield from grow(prefix, max(top, c))
            prefix.pop()
    yield from grow([0], 0)


def _rgs_leq(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    image: dict = {}
    return all(image.setdefault(a, b) == b for a, b in zip(p, q))


def partition_lattice(n: int) -> FiniteLattice:
    """Part(n): all equivalences on an n-set, ordered by refinement."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_PARTITION_DEGREE:
        raise SizeCapExceeded(f"Part({n}) exceeds degree cap {MAX_PARTITION_DEGREE}")
    parts = list(set_partitions(n))
    leq = [[_rgs_leq(p, q) for q in parts] for p in parts]
    return FiniteLattice.from_leq(leq, ["".join(map(str, p)) for p in parts])


def subgroups_sym(n: int) -> list[frozenset]:
    """All subgroups of S_n, from the subgroups generated by at most two
    elements, closed under joins."""
    if n > 4:
        raise SizeCapExceeded(f"subgroup enumeration of S_{n} exceeds cap (n <= 4)")
    sym = symmetric_group(n)
    found = set()
    for g, h in combinations(sym.elements, 2):
        found.add(frozenset(PermGroup.generated(n, (g, h)).elements))
    for g in sym.elements:
        found.add(frozenset(PermGroup.generated(n, (g,)).elements))
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            for b in list(found):
                j = frozenset(PermGroup.generated(n, tuple(a | b)).elements)
                if j not in found:
                    found.add(j)
                    new.append(j)
        frontier = new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subgroup_lattice_sym(n: int) -> FiniteLattice:
    subs = subgroups_sym(n)
    leq = [[a <= b for b in subs] for a in subs]
    return FiniteLattice.from_leq(leq, [f"order {len(s)}" for s in subs])


# ---- isomorphism and embedding ------------------------------------------------

def are_isomorphic(l1: FiniteLattice, l2: FiniteLattice, max_size: int = MAX_ISO_SIZE) -> bool:
    if max(l1.size, l2.size) > max_size:
        raise SizeCapExceeded(f"isomorphism test limited to {max_size} elements")
    if l1.size != l2.size:
        return False
    inv1, inv2 = l1.element_invariants(), l2.element_invariants()
    if sorted(inv1) != sorted(inv2):
        return False
    leq1, leq2 = l1.leq.tolist(), l2.leq.tolist()
    order = sorted(range(l1.size), key=lambda a: inv1[a])
    candidates = [[b for b in range(l2.size) if inv2[b] == inv1[a]] for a in order]
    image: list[int] = []
    used = [False] * l2.size

    def search(pos: int) -> bool:
        if pos == len(order):
            return True
        a = order[pos]
        for b in candidates[pos]:
            if used[b]:
                continue
            if all(leq1[x][a] == leq2[y][b] and leq1[a][x] == leq2[b][y]
                   for x, y in zip(order, image)):
                used[b] = True
                image.append(b)
                if search(pos + 1):
                    return True
                image.pop()
                used[b] = False
        return False

    return search(0)


def embeds_into(l1: FiniteLattice, l2: FiniteLattice) -> bool:
    """Whether ``l1`` is isomorphic to a sublattice of ``l2``."""
    if l1.size > 8 or l2.size > 50:
        raise SizeCapExceeded("embedding search limited to |l1| <= 8, |l2| <= 50")
    if l1.size > l2.size:
        return False
    leq1, leq2 = l1.leq.tolist(), l2.leq.tolist()
    j1, m1 = l1.join.tolist(), l1.meet.tolist()
    j2, m2 = l2.join.tolist(), l2.meet.tolist()
    order = sorted(range(l1.size), key=lambda a: sum(leq1[x][a] for x in range(l1.size)))
    f = [-1] * l1.size
    used = [False] * l2.size

    def consistent(a: int) -> bool:
        for x in range(l1.size):
            fx = f[x]
            if fx < 0 or x == a:
                continue
            if leq1[x][a] != leq2[fx][f[a]] or leq1[a][x] != leq2[f[a]][fx]:
                return False
        mapped = [x for x in range(l1.size) if f[x] >= 0]
        for x, y in product(mapped, repeat=2):
            if a not in (x, y, j1[x][y], m1[x][y]):
                continue
            j, m = j1[x][y], m1[x][y]
            if f[j] >= 0 and f[j] != j2[f[x]][f[y]]:
                return False
            if f[m] >= 0 and f[m] != m2[f[x]][f[y]]:
                return False
        return True

    def search(pos: int) -> bool:
        if pos == len(order):
            return True
        a = order[pos]
        for b in range(l2.size):
            if used[b]:
                continue
            f[a] = b
            used[b] = True
            if consistent(a) and search(pos + 1):
                return True
            used[b] = False
            f[a] = -1
        return False

    return search(0)
