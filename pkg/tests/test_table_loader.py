import importlib.util
import json
from pathlib import Path

import pandas as pd
import pytest

from catalog import build_subject
from errors import GroupAxiomViolation
from structure_sets import compute_structural_sets
from table_loader import load_cayley_table, ring_summary

KLEIN = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def test_load_txt(tmp_path):
    path = tmp_path / "c2.txt"
    path.write_text("2 0\n0 1\n1 0\n", encoding="utf-8")
    group = load_cayley_table(path)
    assert group.order == 2
    assert group.label == "@c2.txt"


def test_load_txt_shape_mismatch(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 0\n0 1\n1 0\n", encoding="utf-8")
    with pytest.raises(ValueError, match="3×3"):
        load_cayley_table(path)


def test_load_csv_with_identity_hint(tmp_path):
    path = tmp_path / "c3.csv"
    # identity is element 1: g0 = g^2, g1 = e, g2 = g
    path.write_text("# identity=1\n2,0,1\n0,1,2\n1,2,0\n", encoding="utf-8")
    group = load_cayley_table(path)
    assert group.identity == 1
    assert sorted(group.element_orders) == [1, 3, 3]


def test_load_tsv(tmp_path):
    path = tmp_path / "klein.tsv"
    path.write_text("\n".join("\t".join(map(str, row)) for row in KLEIN) + "\n", encoding="utf-8")
    group = load_cayley_table(path)
    assert group.is_abelian and group.is_2_group


def test_load_json_with_names(tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps({"identity": 0, "table": KLEIN, "names": ["e", "a", "b", "ab"]}), encoding="utf-8")
    group = load_cayley_table(path)
    assert group.name(3) == "ab"


def test_load_xlsx(tmp_path):
    path = tmp_path / "klein.xlsx"
    pd.DataFrame(KLEIN).to_excel(path, header=False, index=False, engine="openpyxl")
    assert load_cayley_table(path).order == 4


def test_unsupported_extension(tmp_path):
    path = tmp_path / "table.dat"
    path.write_text("0\n", encoding="utf-8")
    with pytest.raises(ValueError, match="Unsupported file format '.dat'"):
        load_cayley_table(path)


def test_table_that_is_not_a_group(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"table": [[0, 1], [1, 1]]}), encoding="utf-8")
    with pytest.raises(GroupAxiomViolation):
        load_cayley_table(path)


def test_group_ring_over_loaded_table(tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps({"table": KLEIN}), encoding="utf-8")
    s = build_subject(f"GR(Z2,@{path})")
    assert s.ring.order == 16
    assert s.ring.label == "GR(Z2,@klein.json)"


def test_ring_summary(z4):
    text = ring_summary(z4, compute_structural_sets(z4), max_elements=1)
    lines = text.splitlines()
    assert lines[0] == "Anel: Z4"
    assert lines[1].startswith("Ordem: 4 elementos")
    assert "conjunto" in text and "fração" in text
    assert "1 …" in text


SAMPLE_DATA = Path(__file__).resolve().parent.parent / "sample_data"


@pytest.mark.parametrize(
    "filename, order, abelian",
    [("01_c2.txt", 2, True), ("02_c4.csv", 4, True), ("03_klein.json", 4, True), ("04_s3.tsv", 6, False)],
)
def test_shipped_sample_tables(filename, order, abelian):
    group = load_cayley_table(SAMPLE_DATA / filename)
    assert group.order == order
    assert group.is_abelian is abelian


def _generator_script():
    path = SAMPLE_DATA.parent / "scripts" / "generate_cayley_tables.py"
    module_spec = importlib.util.spec_from_file_location("generate_cayley_tables", path)
    module = importlib.util.module_from_spec(module_spec)
    module_spec.loader.exec_module(module)
    return module


def test_generator_writes_every_listed_table(tmp_path):
    script = _generator_script()
    groups = {}
    for filename, gen_fn, writer in script.TABLES:
        writer(gen_fn(), tmp_path / filename)
        groups[filename] = load_cayley_table(tmp_path / filename)
    d4 = groups["05_d4.xlsx"]
    assert d4.order == 8
    assert d4.is_2_group and not d4.is_abelian
    assert [g.order for g in groups.values()] == [2, 4, 4, 6, 8]
