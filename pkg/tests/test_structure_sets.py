import pytest

from constructions import ring_Zn, upper_triangular_ring
from structure_sets import (
    SET_NAMES,
    StructuralSets,
    compute_structural_sets,
    jacobson_oracle,
    jacobson_radical,
    sets_summary_text,
    structure,
)


def test_sets_of_z4(z4):
    sets = compute_structural_sets(z4)
    assert sets.units == (1, 3)
    assert sets.idempotents == (0, 1)
    for name in ("nilpotents", "jacobson", "j_sharp", "quasi_nilpotents", "delta_nilpotents"):
        assert getattr(sets, name) == (0, 2), name


def test_sets_of_z2(z2):
    sets = compute_structural_sets(z2)
    assert sets.units == (1,)
    assert sets.idempotents == (0, 1)
    for name in ("nilpotents", "jacobson", "j_sharp", "quasi_nilpotents", "delta_nilpotents"):
        assert getattr(sets, name) == (0,), name


def test_sets_of_z6():
    sets = compute_structural_sets(ring_Zn(6))
    assert sets.units == (1, 5)
    assert sets.idempotents == (0, 1, 3, 4)
    assert sets.j_sharp == (0,)


def test_trivial_ring_sets():
    sets = compute_structural_sets(ring_Zn(1))
    assert all(getattr(sets, name) == (0,) for name in SET_NAMES)


def test_radical_of_triangular_ring(z2):
    T = upper_triangular_ring(z2, 2)
    e12 = T.parse("[[0, 1], [0, 0]]")
    assert jacobson_radical(T) == frozenset({T.zero, e12})


@pytest.mark.parametrize("expr", ["Z8", "M2(Z2)", "T2(Z4)", "K(Z2,0)"])
def test_radical_matches_two_sided_oracle(subject, expr):
    R = subject(expr).ring
    assert jacobson_radical(R) == jacobson_oracle(R)


def test_matrix_ring_over_field_has_zero_radical(m2z2):
    sets = compute_structural_sets(m2z2)
    assert sets.jacobson == (m2z2.zero,)
    assert len(sets.nilpotents) == 4


def test_structure_is_shared_by_content(z4):
    assert structure(z4) is structure(ring_Zn(4))


def test_snapshot_dict_round_trip(z4):
    sets = compute_structural_sets(z4)
    again = StructuralSets.from_dict(sets.to_dict(), label="other")
    assert again == sets
    assert again.label == "other"


def test_summary_text(m2z2):
    sets = compute_structural_sets(m2z2)
    line = sets.summary_line("units")
    assert line.startswith("U") and "|6|" in line
    text = sets_summary_text(m2z2, sets, pretty=True)
    assert "[[1, 0], [0, 1]]" in text
    assert text.splitlines()[0] == "Conjuntos estruturais de M2(Z2) (ordem 16):"
