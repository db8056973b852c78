import pytest

from oclattice.rewrite import Presentation, UnionFind
from oclattice.words import parse_word


def w(text):
    return parse_word(text)


SQUARE_SHUFFLE = Presentation.of("xxy = yxx", "xyz = xzy", name="square-shuffle")
COMMUTATIVE = Presentation.of("xy = yx")
RIGHT_SHUFFLE = Presentation.of("xyz = xzy")
EMPTY = Presentation()


@pytest.fixture
def shuffle():
    return SQUARE_SHUFFLE


def integer_partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def brute_force_factorizations(pattern, target):
    """All (start, end, subst) with target[start:end] = subst(pattern), by
    trying every split of every factor into len(pattern) nonempty pieces."""
    from itertools import combinations

    out = []
    k = len(pattern)
    for start in range(len(target)):
        for end in range(start + k, len(target) + 1):
            for cuts in combinations(range(start + 1, end), k - 1):
                bounds = (start,) + cuts + (end,)
                pieces = [target[bounds[i]:bounds[i + 1]] for i in range(k)]
                subst = {}
                if all(subst.setdefault(x, p) == p for x, p in zip(pattern, pieces)):
                    out.append((start, end, subst))
    return out


def brute_force_classes(sigma, words):
    """Closure of ``sigma`` on ``words`` from brute-force factorizations, as a
    set of frozensets of words."""
    index = {u: i for i, u in enumerate(words)}
    uf = UnionFind(len(words))
    for i, u in enumerate(words):
        for ident in sigma:
            for p, q in ((ident.lhs, ident.rhs), (ident.rhs, ident.lhs)):
                if len(p) > len(u):
                    continue
                for start, end, subst in brute_force_factorizations(p, u):
                    image = tuple(x for letter in q for x in subst[letter])
                    uf.union(i, index[u[:start] + image + u[end:]])
    groups = {}
    for i, u in enumerate(words):
        groups.setdefault(uf.find(i), set()).add(u)
    return {frozenset(g) for g in groups.values()}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({title})")
