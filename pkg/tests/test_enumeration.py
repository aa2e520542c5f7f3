import pytest

from vrc.autgroup import v
from vrc.enumeration import (BudgetExhausted, CensusRow, census, check_representatives,
                             enumerate_racks, least_realisation, naive_enumerate, point_type,
                             root_rows, virtual_count)
from vrc.rack import are_isomorphic, dihedral_quandle, is_quandle, permutation_rack, trivial_quandle

RACK_COUNTS = {1: 1, 2: 2, 3: 6, 4: 19}
QUANDLE_COUNTS = {1: 1, 2: 1, 3: 3, 4: 7}


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("kind", ["rack", "quandle"])
def test_generator_equals_naive(n, kind):
    naive = naive_enumerate(n, kind)
    assert enumerate_racks(n, kind) == naive
    assert len(naive) == (RACK_COUNTS if kind == "rack" else QUANDLE_COUNTS)[n]


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("kind", ["rack", "quandle"])
def test_strategies_agree(n, kind):
    assert enumerate_racks(n, kind, "orderly") == enumerate_racks(n, kind, "dedup")


def test_representatives_are_sound():
    for kind in ("rack", "quandle"):
        reps = enumerate_racks(5, kind)
        assert check_representatives(reps, kind) == []
        for i, A in enumerate(reps):
            for B in reps[i + 1:i + 4]:
                assert are_isomorphic(A, B) is None
    assert len(enumerate_racks(5, "quandle")) == 22


def test_known_racks_are_found():
    reps = set(enumerate_racks(4))
    from vrc.rack import canonical_form
    for R in (trivial_quandle(4), dihedral_quandle(4), permutation_rack(4, (1, 2, 3, 0))):
        assert canonical_form(R) in reps


def test_order_three_virtual_hand_count():
    # T3, R3 and the quandle with one transposition row: Aut orders 6, 6, 2
    reps = enumerate_racks(3, "quandle")
    assert sorted(v(R) for R in reps) == [2, 3, 3]
    assert all(is_quandle(R) for R in reps)
    assert virtual_count(reps) == 8


def test_census_rows():
    rows = list(census(3, "quandle"))
    assert [r.virtual for r in rows] == [1, 2, 8]
    assert [r.structures for r in rows] == [1, 1, 3]
    assert all(isinstance(r, CensusRow) and r.complete for r in rows)
    assert list(rows[0].to_dict()) == ["order", "kind", "structures", "virtual", "seconds",
                                      "complete"]


def test_stretch_needs_flag():
    with pytest.raises(ValueError):
        next(census(7, "quandle"))
    with pytest.raises(ValueError):
        enumerate_racks(9)


def test_budget_is_enforced():
    with pytest.raises(BudgetExhausted) as info:
        enumerate_racks(6, "rack", budget_secs=0.0)
    assert isinstance(info.value.found, list)
    rows = list(census(6, "rack", budget_secs=0.0))
    assert not rows[-1].complete


def test_budget_from_environment(monkeypatch):
    from vrc.enumeration import budget_from_env
    monkeypatch.setenv("VRC_BUDGET_SECS", "12.5")
    assert budget_from_env() == 12.5
    monkeypatch.delenv("VRC_BUDGET_SECS")
    assert budget_from_env() == 3600


def test_output_is_deterministic():
    assert enumerate_racks(5) == enumerate_racks(5)
    assert enumerate_racks(4, parallel=2) == enumerate_racks(4)


def test_point_types():
    assert least_realisation(2, (1, 3)) == (1, 0, 2, 4, 5, 3)
    assert point_type((1, 0, 2, 4, 5, 3), 4) == (3, (1, 2))
    assert root_rows(3, "quandle") == [(0, 1, 2), (0, 2, 1)]
    assert len(root_rows(3, "rack")) == 4


def test_naive_limits():
    with pytest.raises(ValueError):
        naive_enumerate(5)
    with pytest.raises(ValueError):
        enumerate_racks(3, "kei")
