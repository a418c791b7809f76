"""Cayley-table loader supporting TXT, CSV, TSV, XLSX and JSON files."""

from __future__ import annotations

import io
import json
import logging
import re
from pathlib import Path, PurePath
from typing import Any, Callable

import numpy as np
import pandas as pd

from constructions.groups import GroupTable, group_from_cayley
from finite_ring import FiniteRing
from structure_sets import SET_NAMES, StructuralSets

log = logging.getLogger(__name__)

_IDENTITY_HINT = re.compile(r"^\s*#\s*identity\s*=\s*(\d+)\s*$")


# ── public helpers ──────────────────────────────────────────────


def load_cayley_table(path: str | Path) -> GroupTable:
    """Detect the format from the file extension and return a validated group."""
    p = Path(path)
    ext = PurePath(p.name.lower()).suffix

    loaders: dict[str, Callable[[Path], tuple[Any, int, list[str]]]] = {
        ".txt": _load_txt,
        ".csv": _load_csv,
        ".tsv": _load_tsv,
        ".xlsx": _load_xlsx,
        ".json": _load_json,
    }

    loader = loaders.get(ext)
    if loader is None:
        supported = ", ".join(sorted(loaders))
        raise ValueError(f"Unsupported file format '{ext}'. Supported: {supported}")

    table, identity, names = loader(p)
    log.debug("load_cayley_table: %s -> %s", p, np.shape(table))
    return group_from_cayley(table, identity, label=f"@{p.name}", names=names)


def ring_summary(ring: FiniteRing, sets: StructuralSets, max_elements: int = 8) -> str:
    """Return a compact text summary of a ring and its structural sets."""
    rows = []
    for name in SET_NAMES:
        members = getattr(sets, name)
        sample = ", ".join(ring.render(i) for i in members[:max_elements])
        rows.append({
            "conjunto": name,
            "tamanho": len(members),
            "fração": round(len(members) / ring.order, 3),
            "amostra": sample + (" …" if len(members) > max_elements else ""),
        })
    df = pd.DataFrame(rows)

    lines: list[str] = []
    lines.append(f"Anel: {ring.label}")
    lines.append(f"Ordem: {ring.order} elementos (zero = {ring.render(ring.zero)}, um = {ring.render(ring.one)})")
    lines.append("")
    lines.append("Conjuntos estruturais:")
    lines.append(df.to_string(index=False))
    return "\n".join(lines)


# ── private loaders ─────────────────────────────────────────────


def _load_txt(p: Path) -> tuple[Any, int, list[str]]:
    """First line ``m identity``, then m rows of m integers."""
    lines = [ln for ln in p.read_text(encoding="utf-8").splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{p} is empty")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"{p}: first line must be 'm identity', got {lines[0]!r}")
    m, identity = int(header[0]), int(header[1])
    body = pd.read_csv(io.StringIO("\n".join(lines[1:])), sep=r"\s+", header=None)
    if body.shape != (m, m):
        raise ValueError(f"{p}: expected a {m}×{m} table, got {body.shape[0]}×{body.shape[1]}")
    return body.to_numpy(), identity, []


def _identity_hint(p: Path) -> tuple[int, int]:
    """(identity, rows to skip) from an optional leading ``# identity=k`` line."""
    with p.open(encoding="utf-8") as fh:
        first = fh.readline()
    hit = _IDENTITY_HINT.match(first)
    return (int(hit.group(1)), 1) if hit else (0, 0)


def _load_csv(p: Path) -> tuple[Any, int, list[str]]:
    identity, skip = _identity_hint(p)
    df = pd.read_csv(p, header=None, skiprows=skip, sep=None, engine="python")
    return df.to_numpy(), identity, []


def _load_tsv(p: Path) -> tuple[Any, int, list[str]]:
    identity, skip = _identity_hint(p)
    df = pd.read_csv(p, header=None, skiprows=skip, sep="\t")
    return df.to_numpy(), identity, []


def _load_xlsx(p: Path) -> tuple[Any, int, list[str]]:
    df = pd.read_excel(p, header=None, engine="openpyxl")
    return df.to_numpy(), 0, []


def _load_json(p: Path) -> tuple[Any, int, list[str]]:
    """``{"identity": k, "table": [[...]], "names": [...]}`` (names optional)."""
    data = json.loads(p.read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "table" not in data:
        raise ValueError(f"{p}: expected an object with a 'table' key")
    return data["table"], int(data.get("identity", 0)), [str(n) for n in data.get("names", [])]
