import pytest

from catalog import build_subject, load_catalog
from constructions import NodeKind
from dsl import catalog_lines, parse_ring_expr, read_catalog
from errors import EmptyCatalog, ParseError


@pytest.mark.parametrize(
    "text, kind, canonical",
    [
        ("Z4", NodeKind.ZN, "Z4"),
        ("prod( Z2 , Z4 )", NodeKind.PRODUCT, "prod(Z2,Z4)"),
        ("M2(Z2)", NodeKind.MATRIX, "M2(Z2)"),
        ("T3(Z2)", NodeKind.TRIANGULAR, "T3(Z2)"),
        ("K(Z4, 2)", NodeKind.GEN_MATRIX, "K(Z4,2)"),
        ("quot(Z8,{4})", NodeKind.QUOTIENT, "quot(Z8,{4})"),
        ("corner(M2(Z2), 8)", NodeKind.CORNER, "corner(M2(Z2),8)"),
        ("GR(Z2,C2xC2)", NodeKind.GROUP_RING, "GR(Z2,C2xC2)"),
    ],
)
def test_parse_ring_expr(text, kind, canonical):
    ast = parse_ring_expr(text)
    assert ast.kind is kind
    assert ast.to_expr() == canonical


@pytest.mark.parametrize(
    "text, offset",
    [("Q5", 0), ("Z4 junk", 3), ("M0(Z2)", 1), ("prod(Z2", 7)],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as err:
        parse_ring_expr(text)
    assert err.value.offset == offset


def test_catalog_lines_drop_comments_and_blanks():
    text = "# header\nZ2\n\nM2(Z2)   # matrices\n"
    assert catalog_lines(text) == [(2, "Z2"), (4, "M2(Z2)")]


def test_read_catalog_keeps_origin(tmp_path):
    path = tmp_path / "small.txt"
    path.write_text("Z2\nZ3\n", encoding="utf-8")
    sources = read_catalog(path)
    assert [s.text for s in sources] == ["Z2", "Z3"]
    assert sources[1].origin.endswith(":2")


def test_build_subject_records_parts():
    gr = build_subject("GR(Z2,C3)")
    assert gr.is_group_ring and gr.group.order == 3 and gr.base.order == 2
    ks = build_subject("K(Z4,2)")
    assert ks.is_generalized_matrix and ks.multiplier == 2
    prod = build_subject("prod(Z2,Z3)")
    assert [f.order for f in prod.factors] == [2, 3]


def test_quotient_and_corner_subjects():
    assert build_subject("quot(Z8,{4})").ring.order == 4
    assert build_subject("corner(M2(Z2),8)").ring.order == 2


def test_empty_catalog(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n", encoding="utf-8")
    with pytest.raises(EmptyCatalog):
        load_catalog(path)


def test_catalog_from_expressions():
    subjects = load_catalog(expressions=["Z2", "T2(Z2)"])
    assert [s.ring.order for s in subjects] == [2, 8]
