import pytest

from vrc import perm
from vrc.families import (NotCentral, FamilyQuery, conj_virtual_left_mult,
                          group_automorphism_order, pgl2_class_number, pgl2_group, pgl2_report,
                          psl2_group, v_family)
from vrc.numtheory import partitions
from vrc.rack import GroupTable, cyclic_group_table


def test_query_validation():
    with pytest.raises(ValueError):
        FamilyQuery("nope", 3)
    with pytest.raises(ValueError):
        FamilyQuery("cycle", 0)
    with pytest.raises(ValueError):
        FamilyQuery("conj-psl2", 4)
    with pytest.raises(ValueError):
        FamilyQuery("conj-psl2", 2)


@pytest.mark.parametrize("family, n, claimed", [("trivial", 5, 7), ("cycle", 9, 9),
                                                ("dihedral", 12, 15), ("conj-sym", 4, 5),
                                                ("conj-sym", 6, 13)])
def test_claimed_values(family, n, claimed):
    ans = v_family(FamilyQuery(family, n))
    assert ans.claimed == claimed
    assert not ans.mismatch


def test_conj_alt_claims_without_computing():
    ans = v_family(FamilyQuery("conj-alt", 5))
    assert ans.claimed == partitions(5) and ans.computed is None and not ans.mismatch
    assert v_family(FamilyQuery("conj-alt", 2)).claimed == 1


def test_large_parameters_are_not_computed():
    ans = v_family(FamilyQuery("trivial", 30))
    assert ans.claimed == 5604 and ans.computed is None


def test_psl_discrepancy_is_surfaced():
    ans = v_family(FamilyQuery("conj-psl2", 3))
    assert ans.claimed == 8 and ans.computed == 5 and ans.mismatch
    d = ans.to_dict()
    assert list(d)[:5] == ["family", "parameter", "claimed", "computed", "mismatch"]
    assert d["mismatch"] is True


def test_pgl_class_numbers():
    # PGL(2,p) has p + 2 classes for odd p; independent of the (p-1)(p+1) formula
    for p in (3, 5, 7, 11):
        assert pgl2_class_number(p) == p + 2
    assert pgl2_report(3) == {"p": 3, "claimed": 8, "computed": 5, "mismatch": True}
    assert len(pgl2_group(5)) == 120


def test_psl_orders():
    for p, order in ((3, 12), (5, 60), (7, 168)):
        assert psl2_group(p).n == order
    with pytest.raises(ValueError):
        psl2_group(11)


def test_left_multiplication():
    S3 = GroupTable.from_group(perm.symmetric_group(3))
    conj_virtual_left_mult(S3, S3.identity)
    g = next(x for x in range(S3.n) if x != S3.identity)
    with pytest.raises(NotCentral) as info:
        conj_virtual_left_mult(S3, g)
    assert 0 <= info.value.witness < S3.n
    Z4 = cyclic_group_table(4)
    for g in range(4):
        assert conj_virtual_left_mult(Z4, g).f == Z4.product[g]


def test_group_automorphism_orders():
    assert group_automorphism_order(GroupTable.from_group(perm.symmetric_group(3))) == 6
    assert group_automorphism_order(GroupTable.from_group(perm.symmetric_group(4))) == 24
    assert group_automorphism_order(cyclic_group_table(4)) == 2
    assert group_automorphism_order(cyclic_group_table(7)) == 6
