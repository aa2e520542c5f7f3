from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from vrc import perm
from vrc.autgroup import (NotAnAutomorphism, VirtualRack, automorphism_group, classify_virtual,
                          inner_virtual, is_virtual_structure, v, virtual_isomorphic)
from vrc.rack import (GroupTable, conjugation_quandle, dihedral_quandle, permutation_rack,
                      relabel, takasaki_kei, trivial_quandle)


def brute_aut(R):
    return [f for f in permutations(range(R.n))
            if all(perm.conjugate(f, R.rows[x]) == R.rows[f[x]] for x in range(R.n))]


def naive_classes(elems):
    """Conjugacy classes by comparing every pair."""
    remaining = set(elems)
    count = 0
    while remaining:
        g = min(remaining)
        remaining -= {perm.conjugate(h, g) for h in elems}
        count += 1
    return count


RACKS = [trivial_quandle(1), trivial_quandle(4), dihedral_quandle(4), dihedral_quandle(5),
         dihedral_quandle(6), permutation_rack(4, (1, 2, 3, 0)), permutation_rack(5, (1, 0, 3, 4, 2)),
         takasaki_kei([2, 2]), conjugation_quandle(GroupTable.from_group(perm.symmetric_group(3)))]


@pytest.mark.parametrize("R", RACKS)
def test_aut_matches_brute_force(R):
    aut = automorphism_group(R)
    assert list(aut) == sorted(brute_aut(R))
    assert classify_virtual(R).v == naive_classes(list(aut))


def test_examples():
    assert v(trivial_quandle(3)) == 3
    assert v(permutation_rack(4, (1, 2, 3, 0))) == 4
    assert classify_virtual(dihedral_quandle(3)).aut_order == 6


def test_report_fields():
    c = classify_virtual(dihedral_quandle(4))
    d = c.to_dict()
    assert list(d) == ["rack", "aut_order", "v", "representatives", "class_sizes"]
    assert d["aut_order"] == sum(d["class_sizes"]) == 8
    assert d["v"] == len(d["representatives"]) == 5


def test_virtual_rack_validation():
    R = dihedral_quandle(3)
    VirtualRack(R, (0, 2, 1))
    with pytest.raises(NotAnAutomorphism):
        VirtualRack(R, (0, 0, 1))
    P = permutation_rack(3, (1, 2, 0))
    assert not is_virtual_structure(permutation_rack(4, (1, 0, 2, 3)), (0, 2, 1, 3))
    assert inner_virtual(P, 0).f == (1, 2, 0)
    with pytest.raises(IndexError):
        inner_virtual(P, 3)


def test_virtual_isomorphic_is_conjugacy():
    for R in RACKS[:6]:
        aut = automorphism_group(R)
        for f1 in aut:
            for f2 in aut:
                psi = virtual_isomorphic(R, f1, f2, aut)
                conj = any(perm.conjugate(h, f1) == f2 for h in aut)
                assert (psi is not None) == conj
                if psi is not None:
                    assert psi in aut and perm.conjugate(psi, f1) == f2
    with pytest.raises(NotAnAutomorphism):
        virtual_isomorphic(permutation_rack(4, (1, 0, 2, 3)), (0, 1, 2, 3), (0, 2, 1, 3))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(RACKS), st.data())
def test_v_is_relabeling_invariant(R, data):
    pi = tuple(data.draw(st.permutations(list(range(R.n)))))
    S = relabel(R, pi)
    assert v(S) == v(R)
    assert len(automorphism_group(S)) == len(automorphism_group(R))


def test_permutation_rack_aut_is_centralizer():
    for n in range(1, 6):
        for sigma in sorted(set(permutations(range(n))))[::3]:
            assert automorphism_group(permutation_rack(n, sigma)) == perm.centralizer_in_sym(sigma)
