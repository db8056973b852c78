import pytest
from sympy.utilities.iterables import multiset_partitions

from oclattice.errors import DegreeCapExceeded, DegreeMismatch, LatticeCapExceeded
from oclattice.gsets import (
    GSet, act_on_word, congruence_lattice, congruences, g_lambda, is_regular, is_stable,
    is_transitive, natural_gset, principal_congruence, quotient_gset, regular_gset, trivial_gset,
)
from oclattice.lattices import are_isomorphic, chain, partition_lattice, subgroup_lattice_sym
from oclattice.perms import PermGroup, compose, identity_perm, inverse, symmetric_group
from oclattice.rewrite import FiniteEquivalence, Presentation
from oclattice.words import Partition, enumerate_words

from conftest import COMMUTATIVE, EMPTY, SQUARE_SHUFFLE, RIGHT_SHUFFLE, w


def brute_force_congruences(a: GSet) -> set:
    """Every set partition of the points, kept if stable under every group element."""
    found = set()
    for blocks in multiset_partitions(list(range(a.size))):
        e = FiniteEquivalence.from_labels(
            next(b for b, block in enumerate(blocks) if x in block) for x in range(a.size))
        stable = all(
            e.class_of[row[x]] == e.class_of[row[y]]
            for row in a.action
            for x in range(a.size) for y in range(a.size) if e.class_of[x] == e.class_of[y]
        )
        if stable:
            found.add(e.class_of)
    return found


@pytest.mark.parametrize("parts,order", [("2,1", 1), ("1,1,1", 6), ("2,2,1", 2), ("3,3,1,1", 4),
                                         ("1,1,1,1", 24)])
def test_g_lambda_orders(parts, order):
    g = g_lambda(Partition.parse(parts))
    assert g.order == order
    assert g.is_closed()
    assert PermGroup.generated(g.degree, g.generators).elements == g.elements


def test_g_lambda_preserves_components():
    p = Partition.parse("3,2,2,1,1,1")
    for g in g_lambda(p).elements:
        assert all(p.components[i - 1] == p.components[g[i - 1] - 1] for i in range(1, p.m + 1))


def test_g_lambda_cap():
    with pytest.raises(DegreeCapExceeded):
        g_lambda(Partition.parse(",".join(["1"] * 9)))


def test_act_on_word_examples():
    assert act_on_word((2, 1), w("aab")) == w("bba")
    assert act_on_word(identity_perm(3), w("abcab")) == w("abcab")
    assert act_on_word((2, 3, 1), w("abc")) == w("bca")
    with pytest.raises(DegreeMismatch):
        act_on_word((2, 1), w("abc"))


def test_act_on_word_is_an_action():
    s3 = symmetric_group(3)
    u = w("aabcb")
    for g in s3.elements:
        for h in s3.elements:
            assert act_on_word(compose(g, h), u) == act_on_word(g, act_on_word(h, u))


def test_quotient_gset_examples():
    a = quotient_gset(SQUARE_SHUFFLE, Partition.parse("1,1,1"))
    assert a.size == 3
    a.check_action()
    assert are_isomorphic(congruence_lattice(a), chain(2))
    # points are first-letter fibres, permuted like the letters themselves
    first = [int(lbl[0] == "a") + 2 * int(lbl[0] == "b") + 3 * int(lbl[0] == "c") for lbl in a.labels]
    for g, row in zip(a.group.elements, a.action):
        assert [first[row[i]] for i in range(3)] == [g[first[i] - 1] for i in range(3)]

    b = quotient_gset(EMPTY, Partition.parse("1,1,1"))
    assert b.size == 6 and is_regular(b)
    c = quotient_gset(COMMUTATIVE, Partition.parse("2,1"))
    assert c.size == 1 and c.group.order == 1


@pytest.mark.parametrize("parts", ["2,1", "1,1,1", "2,2", "2,1,1", "3,1"])
def test_empty_presentation_does_not_collapse(parts):
    p = Partition.parse(parts)
    a = quotient_gset(EMPTY, p)
    assert a.size == len(enumerate_words(p.content()).words)
    a.check_action()


def test_principal_congruence_examples():
    a = regular_gset(3)
    assert principal_congruence(a, 2, 2) == FiniteEquivalence.identity(6)
    t = trivial_gset(3)
    assert principal_congruence(t, 0, 1) == FiniteEquivalence((0, 0, 1))
    with pytest.raises(IndexError):
        principal_congruence(t, 0, 3)


def test_principal_congruence_regular_is_coset_partition():
    # point x is the element elems[x], acted on by left multiplication, so the
    # congruence generated by (i, j) has the left cosets of <elems[i]^-1 elems[j]>
    elems = symmetric_group(3).elements
    a = regular_gset(3)
    for i in range(6):
        for j in range(6):
            if i == j:
                continue
            k = compose(inverse(elems[i]), elems[j])
            sub, x = {identity_perm(3)}, k
            while x not in sub:
                sub.add(x)
                x = compose(x, k)
            expected = FiniteEquivalence.from_labels(
                frozenset(compose(elems[p], s) for s in sub) for p in range(6))
            assert principal_congruence(a, i, j) == expected


@pytest.mark.parametrize("make,size", [(lambda: regular_gset(3), 6), (lambda: trivial_gset(3), 5),
                                       (lambda: natural_gset(3), 2), (lambda: natural_gset(4), 2),
                                       (lambda: trivial_gset(4), 15)])
def test_congruence_lattice_sizes(make, size):
    assert congruence_lattice(make()).size == size


@pytest.mark.parametrize("make", [
    lambda: regular_gset(3),
    lambda: natural_gset(4),
    lambda: trivial_gset(5),
    lambda: quotient_gset(EMPTY, Partition.parse("1,1,1")),
    lambda: quotient_gset(RIGHT_SHUFFLE, Partition.parse("2,1,1")),
    lambda: quotient_gset(RIGHT_SHUFFLE, Partition.parse("1,1,1")),
    lambda: quotient_gset(EMPTY, Partition.parse("2,2")),
    lambda: quotient_gset(SQUARE_SHUFFLE, Partition.parse("1,1,1,1")),
    lambda: quotient_gset(EMPTY, Partition.parse("2,1")),
])
def test_congruences_match_brute_force(make):
    a = make()
    assert a.size <= 8
    cons = congruences(a)
    got = {e.class_of for e in cons}
    assert got == brute_force_congruences(a)
    assert FiniteEquivalence.identity(a.size).class_of in got
    assert FiniteEquivalence.total(a.size).class_of in got
    for e in cons:
        assert is_stable(a, e)
        for f in cons:
            assert e.meet(f).class_of in got
            assert e.join(f).class_of in got


def test_is_stable_uses_every_element():
    a = natural_gset(3)
    assert not is_stable(a, FiniteEquivalence((0, 0, 1)))
    assert is_stable(a, FiniteEquivalence.total(3))


@pytest.mark.parametrize("n,size", [(2, 2), (3, 6), (4, 30)])
def test_regular_gset_congruences_are_subgroups(n, size):
    lat = congruence_lattice(regular_gset(n))
    assert lat.size == size
    assert are_isomorphic(lat, subgroup_lattice_sym(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_trivial_group_gives_partition_lattice(n):
    assert are_isomorphic(congruence_lattice(trivial_gset(n)), partition_lattice(n))


def test_congruence_cap():
    with pytest.raises(LatticeCapExceeded):
        congruence_lattice(trivial_gset(6), max_congruences=100)


def test_is_regular_examples():
    assert is_regular(regular_gset(3))
    assert not is_regular(natural_gset(3))
    assert is_regular(trivial_gset(1))
    assert not is_regular(trivial_gset(2))
    assert is_transitive(natural_gset(3)) and not is_transitive(trivial_gset(2))


@pytest.mark.parametrize("make", [lambda: regular_gset(3), lambda: natural_gset(4),
                                  lambda: quotient_gset(SQUARE_SHUFFLE, Partition.parse("1,1,1,1"))])
def test_actions_are_group_actions(make):
    make().check_action()


def test_bad_action_is_caught():
    group = symmetric_group(2)
    bad = GSet.from_action(group, 2, lambda g, a: 0)
    with pytest.raises(AssertionError):
        bad.check_action()
