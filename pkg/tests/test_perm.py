from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from vrc import perm
from vrc.perm import (FiniteGroup, GroupTooLarge, burnside_class_number, center,
                      centralizer_in_sym, centralizer_order_in_sym, class_number, closure,
                      compose, conjugacy_classes, cycle_type, format_cycles, identity, inverse,
                      parse_cycles)


def pointwise(p, q):
    return tuple(p[q[x]] for x in range(len(q)))


perms6 = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(n))).map(tuple))


def test_compose_example():
    t01 = parse_cycles("(0 1)", 3)
    t12 = parse_cycles("(1 2)", 3)
    assert compose(t01, t12) == (1, 2, 0) == pointwise(t01, t12)


def test_compose_identity_and_inverse():
    q = (2, 0, 1, 3)
    assert compose(identity(4), q) == q
    assert compose(q, inverse(q)) == identity(4)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


def test_inverse_examples():
    assert inverse(identity(3)) == identity(3)
    assert inverse((1, 2, 0)) == (2, 0, 1)
    assert inverse((0, 3, 2, 1)) == (0, 3, 2, 1)


@given(perms6)
def test_inverse_property(p):
    assert compose(p, inverse(p)) == identity(len(p)) == compose(inverse(p), p)


def test_cycle_type_examples():
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert cycle_type((1, 0, 3, 2)) == (2, 2)
    assert cycle_type((1, 2, 3, 4, 0)) == (5,)


def test_cycle_notation_round_trip():
    assert format_cycles(identity(3)) == "()"
    assert parse_cycles("()", 3) == identity(3)
    p = parse_cycles("(0 1)(2 3)", 5)
    assert p == (1, 0, 3, 2, 4)
    assert format_cycles(p) == "(0 1)(2 3)"
    with pytest.raises(ValueError):
        parse_cycles("(0 1", 3)
    with pytest.raises(ValueError):
        parse_cycles("(0 1)(1 2)", 3)


@given(perms6)
def test_cycle_notation_property(p):
    assert parse_cycles(format_cycles(p), len(p)) == p


def test_closure_examples():
    assert len(closure([identity(3)])) == 1
    S3 = closure([parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)])
    assert len(S3) == 6
    C4 = closure([parse_cycles("(0 1 2 3)", 4)])
    assert len(C4) == 4
    assert sorted(C4) == list(C4.elements)


def test_closure_cap():
    with pytest.raises(GroupTooLarge):
        closure([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], cap=100)


def test_group_validation():
    with pytest.raises(ValueError):
        FiniteGroup([identity(3), (1, 0, 2)], [(1, 2, 0)])
    with pytest.raises(ValueError):
        FiniteGroup.from_elements([identity(3), (1, 2, 0)])


def test_conjugacy_class_examples():
    assert len(conjugacy_classes(closure([identity(2)]))) == 1
    S3 = closure([parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)])
    assert sorted(map(len, conjugacy_classes(S3))) == [1, 2, 3]
    C4 = closure([parse_cycles("(0 1 2 3)", 4)])
    assert [len(c) for c in conjugacy_classes(C4)] == [1, 1, 1, 1]


def test_class_number_examples():
    assert class_number(closure([identity(1)])) == 1
    assert class_number(perm.symmetric_group(4)) == 5
    for n in range(1, 9):
        assert class_number(closure([tuple(range(1, n)) + (0,)])) == n


@pytest.mark.parametrize("G", [perm.symmetric_group(3), perm.symmetric_group(4),
                               perm.alternating_group(4), perm.alternating_group(5),
                               closure([(1, 0, 3, 2), (2, 3, 0, 1)])])
def test_orbit_stabilizer_and_burnside(G):
    classes = conjugacy_classes(G)
    assert sum(map(len, classes)) == len(G)
    for cls in classes:
        for g in cls:
            assert len(cls) * len(perm.centralizer(G, g)) == len(G)
    assert class_number(G) == burnside_class_number(G) == len(classes)


def test_classes_independent_of_generator_order():
    a, b = (1, 0, 2, 3), (1, 2, 3, 0)
    assert conjugacy_classes(closure([a, b])) == conjugacy_classes(closure([b, a, compose(a, b)]))


def test_centralizer_in_sym_examples():
    assert len(centralizer_in_sym(identity(4))) == 24
    five = (1, 2, 3, 4, 0)
    C = centralizer_in_sym(five)
    assert C == closure([five])
    C22 = centralizer_in_sym((1, 0, 3, 2))
    brute = [s for s in permutations(range(4)) if compose(s, (1, 0, 3, 2)) == compose((1, 0, 3, 2), s)]
    assert len(C22) == 8 == len(brute)
    assert list(C22) == sorted(brute)


def test_centralizer_order_formula_exhaustive():
    for n in range(1, 7):
        S = list(permutations(range(n)))
        for sigma in S:
            C = centralizer_in_sym(sigma)
            assert len(C) == centralizer_order_in_sym(cycle_type(sigma))
            if n <= 5:
                assert list(C) == [s for s in S if perm.commutes(s, sigma)]


def test_center_examples():
    C4 = closure([(1, 2, 3, 0)])
    assert center(C4) == C4
    assert len(center(perm.symmetric_group(3))) == 1
    V = closure([(1, 0, 3, 2), (2, 3, 0, 1)])
    assert center(V) == V


def test_cycles_reject_non_permutations():
    with pytest.raises(ValueError):
        format_cycles((0, 0, 1))
