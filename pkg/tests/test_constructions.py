import numpy as np
import pytest

from constructions import (
    augmentation_ideal,
    augmentation_map,
    builtin_group,
    corner_ring,
    direct_product,
    enumerate_ideals,
    generalized_matrix_ring,
    group_from_cayley,
    group_ring,
    ideal_from_mask,
    ideal_generated_by,
    matrix_ring,
    quotient_ring,
    ring_Zn,
    upper_triangular_ring,
)
from catalog import build_subject
from constructions.generalized_matrix import diagonal_mask, from_quadruple, quadruple
from constructions.group_ring import embed_base
from errors import (
    GroupAxiomViolation,
    NotAGroupRing,
    NotAnIdeal,
    NotCentral,
    NotIdempotent,
    SizeExceeded,
)
from structure_sets import units


def test_direct_product_layout():
    P = direct_product([ring_Zn(2), ring_Zn(3)])
    assert P.order == 6
    assert P.label == "prod(Z2,Z3)"
    assert P.one == 4
    assert P.render(P.one) == "(1, 1)"
    assert P.parse("(1, 2)") == 5
    assert len(units(P)) == 2


def test_matrix_rings(z2):
    M = matrix_ring(z2, 2)
    T = upper_triangular_ring(z2, 2)
    assert (M.order, T.order) == (16, 8)
    assert len(units(M)) == 6
    assert len(units(T)) == 2
    assert M.render(M.one) == "[[1, 0], [0, 1]]"


def test_triangular_parse_rejects_lower_entries(z2):
    T = upper_triangular_ring(z2, 2)
    assert T.parse("[[1, 1], [0, 1]]") != T.one
    with pytest.raises(ValueError):
        T.parse("[[1, 0], [1, 1]]")


def test_order_cap():
    with pytest.raises(SizeExceeded) as err:
        ring_Zn(10, cap=5)
    assert (err.value.order, err.value.cap) == (10, 5)


def test_generalized_matrix_ring(z2):
    K = generalized_matrix_ring(z2, 1)
    assert K.order == 16
    assert K.label == "K(Z2,1)"
    assert len(units(K)) == 6
    x = from_quadruple(K, 1, 0, 1, 1)
    assert quadruple(K, x) == (1, 0, 1, 1)
    assert int(diagonal_mask(K).sum()) == 4


def test_generalized_matrix_zero_multiplier_kills_off_diagonal_products(z2):
    K = generalized_matrix_ring(z2, 0)
    e12 = from_quadruple(K, 0, 1, 0, 0)
    e21 = from_quadruple(K, 0, 0, 1, 0)
    assert int(K.mul[e12, e21]) == K.zero


def test_generalized_matrix_needs_central_multiplier(m2z2):
    e22 = m2z2.parse("[[0, 0], [0, 1]]")
    with pytest.raises(NotCentral):
        generalized_matrix_ring(m2z2, e22)


def test_group_ring_and_augmentation(z2):
    RG = group_ring(z2, builtin_group("C2"))
    assert RG.order == 4
    assert embed_base(RG, z2.one) == RG.one
    eps = augmentation_map(RG)
    assert int(eps[RG.one]) == z2.one
    assert augmentation_ideal(RG).size == 2


def test_augmentation_needs_group_ring(z4):
    with pytest.raises(NotAGroupRing):
        augmentation_map(z4)


def test_builtin_groups():
    s3 = builtin_group("S3")
    assert s3.order == 6 and not s3.is_abelian
    assert builtin_group("Q8").is_2_group
    assert sorted(builtin_group("C6").element_orders) == [1, 2, 3, 3, 6, 6]
    with pytest.raises(ValueError):
        builtin_group("A5")


def test_cayley_table_validation():
    with pytest.raises(GroupAxiomViolation) as err:
        group_from_cayley([[1, 0], [0, 1]], 0)
    assert err.value.kind == "identity"
    with pytest.raises(GroupAxiomViolation):
        group_from_cayley([[0, 1], [1, 2]], 0)


@pytest.mark.parametrize("table", [[[0, 1.5], [1.5, 0]], [[0, 1], [1, np.nan]], [["0", "1"], ["1", "0"]]])
def test_cayley_table_must_hold_whole_numbers(table):
    with pytest.raises(GroupAxiomViolation) as err:
        group_from_cayley(table, 0)
    assert err.value.kind == "integrality"


def test_cayley_table_accepts_whole_floats():
    group = group_from_cayley([[0.0, 1.0], [1.0, 0.0]], 0)
    assert group.op.dtype == np.int64
    assert group.order == 2


def test_ideals_of_residue_rings():
    assert [I.size for I in enumerate_ideals(ring_Zn(4))] == [1, 2, 4]
    assert [I.size for I in enumerate_ideals(ring_Zn(6))] == [1, 2, 3, 6]
    assert ideal_generated_by(ring_Zn(6), [2]).members == frozenset({0, 2, 4})


def test_ideal_from_mask_rejects_non_ideals(z4):
    with pytest.raises(NotAnIdeal):
        ideal_from_mask(z4, np.array([True, True, False, False]))


def test_quotient_ring(z4):
    Q = quotient_ring(z4, ideal_generated_by(z4, [2]))
    assert Q.ring.order == 2
    assert int(Q.projection[3]) == Q.ring.one


def test_corner_ring(m2z2):
    e11 = m2z2.parse("[[1, 0], [0, 0]]")
    corner = corner_ring(m2z2, e11)
    assert corner.ring.order == 2
    assert int(corner.embedding[corner.ring.one]) == e11


def test_corner_needs_idempotent(z4):
    with pytest.raises(NotIdempotent):
        corner_ring(z4, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generalized_matrix_with_unit_multiplier_is_the_matrix_ring(n):
    R = ring_Zn(n)
    K = generalized_matrix_ring(R, R.one)
    M = matrix_ring(R, 2)
    to_matrix = np.array(
        [
            M.codec.compose(dict(zip([(0, 0), (0, 1), (1, 0), (1, 1)], quadruple(K, x))))
            for x in range(K.order)
        ]
    )
    assert sorted(to_matrix) == list(range(M.order))
    assert (M.add[to_matrix[:, None], to_matrix[None, :]] == to_matrix[K.add]).all()
    assert (M.mul[to_matrix[:, None], to_matrix[None, :]] == to_matrix[K.mul]).all()
    assert to_matrix[K.one] == M.one


@pytest.mark.parametrize("expr", ["Z2", "Z4", "M2(Z2)"])
def test_group_ring_over_trivial_group_is_the_base(expr):
    R = build_subject(expr).ring
    RG = group_ring(R, builtin_group("C1"))
    assert (RG.order, RG.zero, RG.one) == (R.order, R.zero, R.one)
    assert np.array_equal(RG.add, R.add)
    assert np.array_equal(RG.mul, R.mul)


@pytest.mark.parametrize("expr", ["Z4", "Z6", "M2(Z2)", "T2(Z2)"])
def test_quotient_by_zero_ideal_is_the_ring(expr):
    R = build_subject(expr).ring
    Q = quotient_ring(R, ideal_generated_by(R, ()))
    assert list(Q.projection) == list(range(R.order))
    assert np.array_equal(Q.ring.add, R.add)
    assert np.array_equal(Q.ring.mul, R.mul)


@pytest.mark.parametrize(
    "expr",
    [
        "Z8",
        "prod(Z2,Z4)",
        "M2(Z2)",
        "T2(Z4)",
        "K(Z4,2)",
        "quot(Z8,{4})",
        "corner(M2(Z2),8)",
        "GR(Z4,C2)",
        "GR(Z2,C2xC2)",
        "GR(Z2,S3)",
        "GR(M2(Z2),C2)",
    ],
)
def test_render_parse_round_trip(expr):
    R = build_subject(expr).ring
    assert [R.parse(R.render(i)) for i in range(R.order)] == list(range(R.order))
