import pytest

from catalog import build_subject
from classifiers import (
    DecompositionKind,
    decompositions,
    is_abelian,
    is_boolean,
    is_clean,
    is_local,
    is_strongly_jsharp_clean_via_x,
    parse_kind,
    ring_class_report,
    unit_shape_witness,
    units_equal_one_plus,
)


@pytest.mark.parametrize(
    "text, kind",
    [
        ("strongly-jsharp-clean", DecompositionKind.STRONGLY_JSHARP_CLEAN),
        ("J#-clean", DecompositionKind.JSHARP_CLEAN),
        ("strongly_qn_clean", DecompositionKind.STRONGLY_QN_CLEAN),
        ("Strongly-Nil-Clean", DecompositionKind.STRONGLY_NIL_CLEAN),
    ],
)
def test_parse_kind_aliases(text, kind):
    assert parse_kind(text) is kind


def test_parse_kind_unknown():
    with pytest.raises(ValueError, match="Unknown decomposition kind"):
        parse_kind("very-clean")


def test_kind_targets():
    assert DecompositionKind.STRONGLY_JSHARP_CLEAN.target == "j_sharp"
    assert DecompositionKind.CLEAN.target == "units"
    assert not DecompositionKind.CLEAN.strongly


def test_unique_decomposition_in_z4(z4):
    found = decompositions(z4, 3, "strongly-jsharp-clean")
    assert len(found) == 1
    assert (found[0].idempotent, found[0].complement) == (1, 2)
    assert found[0].to_dict()["kind"] == "strongly-jsharp-clean"


def test_no_decomposition_in_z3(z3):
    assert decompositions(z3, 2, DecompositionKind.STRONGLY_JSHARP_CLEAN) == []
    assert is_strongly_jsharp_clean_via_x(z3, 2) is None


def test_x_characterization_agrees_in_z4(z4):
    for a in range(z4.order):
        assert is_strongly_jsharp_clean_via_x(z4, a) is not None


def test_matrix_ring_is_clean_but_not_strongly_jsharp_clean(m2z2):
    assert is_clean(m2z2, "clean")
    assert not is_clean(m2z2, "strongly-jsharp-clean")
    found = decompositions(m2z2, m2z2.parse("[[1, 1], [1, 0]]"), "clean")
    assert found


def test_predicates(z2, z4, m2z2):
    assert is_local(z4) and not is_local(m2z2)
    assert is_abelian(z4) and not is_abelian(m2z2)
    assert is_boolean(z2) and not is_boolean(z4)


def test_unit_shapes(z3, z4):
    assert units_equal_one_plus(z4, "jacobson")
    assert unit_shape_witness(z3, "jacobson") == {"unit_not_one_plus_x": 2}


def test_report_for_z4(z4):
    report = ring_class_report(z4)
    flags = report.flags()
    assert flags["strongly_jsharp_clean"] and flags["local"] and flags["two_in_jacobson"]
    assert flags["uniquely_clean"] and flags["uu"] and flags["uj"]
    assert not flags["boolean_ring"] and not flags["field"]
    assert report.witnesses["boolean_ring"] == {"element": 2}
    assert "uq is evaluated as U(R) = 1 + QN(R)" in report.notes


def test_report_for_z2_and_matrix_ring(z2, m2z2):
    small = ring_class_report(z2).flags()
    assert small["field"] and small["boolean_ring"]
    big = ring_class_report(m2z2)
    assert big.flags()["dedekind_finite"]
    assert not big.flags()["strongly_jsharp_clean"]
    assert "abelian" in big.witnesses


def test_report_of_trivial_ring(subject):
    report = ring_class_report(subject("Z1").ring)
    assert report.trivial
    assert report.flags()["strongly_jsharp_clean"]
    assert any("trivial ring" in n for n in report.notes)


@pytest.mark.parametrize(
    "expr", ["Z2", "Z4", "Z8", "prod(Z2,Z4)", "T2(Z4)", "GR(Z2,C2)", "GR(Z4,C2)", "GR(Z2,C2xC2)"]
)
def test_strongly_jsharp_clean_rings(expr):
    R = build_subject(expr).ring
    report = ring_class_report(R)
    assert report.strongly_jsharp_clean
    assert "strongly_jsharp_clean" not in report.witnesses


@pytest.mark.parametrize("expr", ["Z3", "Z6", "M2(Z2)", "GR(Z2,C3)", "GR(Z4,C3)", "GR(Z2,S3)"])
def test_rings_that_are_not_strongly_jsharp_clean_carry_a_witness(expr):
    R = build_subject(expr).ring
    report = ring_class_report(R)
    assert not report.strongly_jsharp_clean
    a = report.witnesses["strongly_jsharp_clean"]["element"]
    assert decompositions(R, a, DecompositionKind.STRONGLY_JSHARP_CLEAN) == []
    assert is_strongly_jsharp_clean_via_x(R, a) is None
