"""
Generate the sample Cayley tables used by group-ring expressions (GR(R,@file)).
Creates one table per supported file format.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import pandas as pd

OUT_DIR = Path(__file__).resolve().parent.parent / "sample_data"
OUT_DIR.mkdir(parents=True, exist_ok=True)


def _permutation_table(perms: list[tuple[int, ...]]) -> pd.DataFrame:
    """(p·q)(i) = p(q(i)), rows and columns in the order of *perms*."""
    index = {p: k for k, p in enumerate(perms)}
    rows = [[index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]
    return pd.DataFrame(rows)


# ─────────────────────────────────────────────────────────────────
# Groups
# ─────────────────────────────────────────────────────────────────
def gen_cyclic(m: int) -> pd.DataFrame:
    return pd.DataFrame([[(i + j) % m for j in range(m)] for i in range(m)])


def gen_klein() -> pd.DataFrame:
    return pd.DataFrame([[i ^ j for j in range(4)] for i in range(4)])


def gen_s3() -> pd.DataFrame:
    return _permutation_table(list(itertools.permutations(range(3))))


def gen_d4() -> pd.DataFrame:
    rotations = [tuple((i + k) % 4 for i in range(4)) for k in range(4)]
    reflections = [tuple((k - i) % 4 for i in range(4)) for k in range(4)]
    return _permutation_table(rotations + reflections)


# ─────────────────────────────────────────────────────────────────
# Writers
# ─────────────────────────────────────────────────────────────────
def write_txt(df: pd.DataFrame, path: Path) -> None:
    body = df.to_csv(sep=" ", header=False, index=False)
    path.write_text(f"{len(df)} 0\n{body}", encoding="utf-8")


def write_csv(df: pd.DataFrame, path: Path) -> None:
    path.write_text("# identity=0\n" + df.to_csv(header=False, index=False), encoding="utf-8")


def write_tsv(df: pd.DataFrame, path: Path) -> None:
    df.to_csv(path, sep="\t", header=False, index=False)


def write_xlsx(df: pd.DataFrame, path: Path) -> None:
    df.to_excel(path, header=False, index=False, engine="openpyxl")


def write_json(df: pd.DataFrame, path: Path, names: list[str]) -> None:
    payload = {"identity": 0, "names": names, "table": df.values.tolist()}
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


# ─────────────────────────────────────────────────────────────────
# Main
# ─────────────────────────────────────────────────────────────────

TABLES = [
    ("01_c2.txt", lambda: gen_cyclic(2), write_txt),
    ("02_c4.csv", lambda: gen_cyclic(4), write_csv),
    ("03_klein.json", gen_klein, lambda df, p: write_json(df, p, ["e", "a", "b", "ab"])),
    ("04_s3.tsv", gen_s3, write_tsv),
    ("05_d4.xlsx", gen_d4, write_xlsx),
]


def main() -> None:
    for filename, gen_fn, writer in TABLES:
        df = gen_fn()
        path = OUT_DIR / filename
        writer(df, path)
        print(f"Created {path} ({df.shape[0]}×{df.shape[1]})")
    print(f"\n{len(TABLES)} tables created in {OUT_DIR}")


if __name__ == "__main__":
    main()
