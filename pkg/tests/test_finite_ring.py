import numpy as np
import pytest

from catalog import build_subject
from constructions import ring_Zn
from errors import AxiomViolation, ElementOutOfRange, IndexOutOfRange
from finite_ring import (
    center,
    check_triple,
    left_annihilator,
    make_ring,
    power_orbit,
    right_annihilator,
)


def _mutated_z4_tables():
    z4 = ring_Zn(4)
    mul = z4.mul.astype(np.int64)
    mul[2, 2] = 1
    return z4.add, mul


def test_derived_tables_of_z4(z4):
    assert z4.order == 4
    assert list(z4.neg) == [0, 3, 2, 1]
    assert list(z4.one_minus) == [1, 0, 3, 2]
    assert z4.two == 2
    assert int(z4.sub(1, 3)) == 2


def test_trivial_ring():
    z1 = ring_Zn(1)
    assert z1.is_trivial
    assert z1.zero == z1.one == 0


def test_content_hash_follows_tables(z4):
    assert z4.content_hash == ring_Zn(4).content_hash
    assert z4.content_hash != ring_Zn(2).content_hash


def test_render_and_parse_residues(z4):
    assert z4.render(3) == "3"
    assert z4.parse("-1") == 3


def test_power_orbit_stops_at_first_repeat(z4):
    assert power_orbit(z4.element(2)) == [2, 0]
    assert power_orbit(z4.element(3)) == [3, 1]


def test_annihilators(z4):
    assert left_annihilator(z4.element(2)) == frozenset({0, 2})
    assert right_annihilator(z4.element(1)) == frozenset({0})


def test_center_of_matrix_ring(m2z2):
    identity = m2z2.parse("[[1, 0], [0, 1]]")
    assert center(m2z2) == frozenset({m2z2.zero, identity})


def test_element_ref_range(z4):
    with pytest.raises(ElementOutOfRange):
        z4.element(4)


@pytest.mark.parametrize(
    "add, mul",
    [
        ([[0, 1], [1, 0]], [[0, 0, 0], [0, 1, 0], [0, 0, 0]]),
        ([[0, 1], [1, 2]], [[0, 0], [0, 1]]),
        ([[0.0, 1.0], [1.0, 0.0]], [[0, 0], [0, 1]]),
    ],
    ids=["shape-mismatch", "entry-out-of-range", "non-integer"],
)
def test_malformed_tables_are_rejected(add, mul):
    with pytest.raises(IndexOutOfRange):
        make_ring(add, mul, 0, 1, "bad")


def test_identity_must_act_as_identity():
    z2 = ring_Zn(2)
    with pytest.raises(AxiomViolation) as err:
        make_ring(z2.add, z2.mul, 0, 0, "bad")
    assert err.value.kind == "multiplicative identity"


def test_associativity_violation_reports_first_triple():
    add, mul = _mutated_z4_tables()
    with pytest.raises(AxiomViolation) as err:
        make_ring(add, mul, 0, 1, "Z4*")
    assert err.value.kind == "multiplicative associativity"
    assert err.value.witness == (2, 2, 3)


def test_unvalidated_ring_keeps_broken_tables():
    add, mul = _mutated_z4_tables()
    ring = make_ring(add, mul, 0, 1, "Z4*", validate=False)
    assert "multiplicative associativity" in check_triple(ring, 2, 2, 3)
    assert check_triple(ring, 1, 2, 3) == []


def test_tables_are_read_only(z4):
    with pytest.raises(ValueError):
        z4.add[0, 0] = 1


@pytest.mark.parametrize("expr", ["Z8", "M2(Z2)", "T2(Z4)", "GR(Z2,S3)"])
def test_power_orbits_are_short_and_close_up(expr):
    R = build_subject(expr).ring
    for a in range(R.order):
        orbit = power_orbit(R.element(a))
        assert len(orbit) <= R.order + 1
        assert len(set(orbit)) == len(orbit)
        assert int(R.mul[orbit[-1], a]) in orbit


@pytest.mark.parametrize("expr", ["Z8", "M2(Z2)", "T2(Z4)"])
def test_annihilators_are_additive_subgroups(expr):
    R = build_subject(expr).ring
    for a in range(R.order):
        for side in (left_annihilator, right_annihilator):
            members = np.array(sorted(side(R.element(a))))
            assert R.zero in members
            assert np.isin(R.add[np.ix_(members, members)], members).all()
            assert np.isin(R.neg[members], members).all()
