"""Z_n, direct products and (upper triangular) matrix rings.

Element orderings are fixed so that indices are stable across runs:
natural residues for Z_n, and mixed radix (first coordinate most
significant) for products and for matrices read row-major.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from constructions.base import (
    ElementCodec,
    ensure_within_cap,
    split_top_level,
    strip_brackets,
)
from finite_ring import FiniteRing, make_ring

log = logging.getLogger(__name__)


# ── codecs ──────────────────────────────────────────────────────


class ResidueCodec(ElementCodec):
    def __init__(self, modulus: int):
        self.modulus = modulus

    def render(self, index: int) -> str:
        return str(int(index))

    def parse(self, text: str) -> int:
        # negative residues are accepted and reduced
        return int(text.strip()) % self.modulus


class ProductCodec(ElementCodec):
    def __init__(self, factors: Sequence[FiniteRing]):
        self.factors = tuple(factors)
        self.radices = tuple(f.order for f in self.factors)

    def components(self, index: int) -> tuple[int, ...]:
        return tuple(int(c) for c in np.unravel_index(int(index), self.radices))

    def compose(self, components: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(components), self.radices))

    def render(self, index: int) -> str:
        parts = [f.render(c) for f, c in zip(self.factors, self.components(index))]
        return "(" + ", ".join(parts) + ")"

    def parse(self, text: str) -> int:
        parts = split_top_level(strip_brackets(text, "(", ")"))
        if len(parts) != len(self.factors):
            raise ValueError(f"expected {len(self.factors)} components, got {len(parts)}")
        return self.compose([f.parse(p) for f, p in zip(self.factors, parts)])


class MatrixCodec(ElementCodec):
    """k×k matrices whose stored entries are *positions* (row-major)."""

    def __init__(self, base: FiniteRing, k: int, positions: Sequence[tuple[int, int]]):
        self.base = base
        self.k = k
        self.positions = tuple(positions)
        self.radices = (base.order,) * len(self.positions)

    def entries(self, index: int) -> dict[tuple[int, int], int]:
        comps = np.unravel_index(int(index), self.radices)
        return {pos: int(c) for pos, c in zip(self.positions, comps)}

    def compose(self, entries: dict[tuple[int, int], int]) -> int:
        comps = tuple(entries.get(pos, self.base.zero) for pos in self.positions)
        return int(np.ravel_multi_index(comps, self.radices))

    def render(self, index: int) -> str:
        entries = self.entries(index)
        rows = []
        for i in range(self.k):
            row = [self.base.render(entries.get((i, j), self.base.zero)) for j in range(self.k)]
            rows.append("[" + ", ".join(row) + "]")
        return "[" + ", ".join(rows) + "]"

    def parse(self, text: str) -> int:
        rows = split_top_level(strip_brackets(text, "[", "]"))
        if len(rows) != self.k:
            raise ValueError(f"expected {self.k} rows, got {len(rows)}")
        allowed = set(self.positions)
        entries: dict[tuple[int, int], int] = {}
        for i, row in enumerate(rows):
            cells = split_top_level(strip_brackets(row, "[", "]"))
            if len(cells) != self.k:
                raise ValueError(f"row {i} needs {self.k} entries, got {len(cells)}")
            for j, cell in enumerate(cells):
                value = self.base.parse(cell)
                if (i, j) in allowed:
                    entries[(i, j)] = value
                elif value != self.base.zero:
                    raise ValueError(f"entry ({i}, {j}) must be zero")
        return self.compose(entries)


# ── public API ──────────────────────────────────────────────────


def ring_Zn(n: int, *, cap: int | None = None) -> FiniteRing:
    if n < 1:
        raise ValueError(f"Z_n needs n >= 1, got {n}")
    ensure_within_cap(f"Z{n}", n, cap)
    i = np.arange(n, dtype=np.int64)
    add = (i[:, None] + i[None, :]) % n
    mul = (i[:, None] * i[None, :]) % n
    return make_ring(add, mul, 0, 1 % n, f"Z{n}", codec=ResidueCodec(n))


def direct_product(
    factors: Sequence[FiniteRing], *, label: str | None = None, cap: int | None = None
) -> FiniteRing:
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    radices = tuple(f.order for f in factors)
    label = label or "prod(" + ",".join(f.label for f in factors) + ")"
    order = math.prod(radices)
    ensure_within_cap(label, order, cap)
    log.debug("build: kind=product label=%s order=%d", label, order)

    coords = _coordinates(order, radices)

    def parts(table: str) -> Iterator[np.ndarray]:
        for f, c in zip(factors, coords):
            yield getattr(f, table)[c[:, None], c[None, :]]

    add = _assemble(parts("add"), radices)
    mul = _assemble(parts("mul"), radices)
    codec = ProductCodec(factors)
    zero = codec.compose([f.zero for f in factors])
    one = codec.compose([f.one for f in factors])
    return make_ring(add, mul, zero, one, label, codec=codec)


def matrix_ring(R: FiniteRing, k: int, *, cap: int | None = None) -> FiniteRing:
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_like(R, k, positions, f"M{k}({R.label})", cap)


def upper_triangular_ring(R: FiniteRing, k: int, *, cap: int | None = None) -> FiniteRing:
    positions = [(i, j) for i in range(k) for j in range(k) if i <= j]
    return _matrix_like(R, k, positions, f"T{k}({R.label})", cap)


# ── internals ───────────────────────────────────────────────────


def _coordinates(order: int, radices: Sequence[int]) -> list[np.ndarray]:
    """Mixed-radix digits of every index 0..order-1, most significant first."""
    return [np.asarray(c, dtype=np.int64) for c in np.unravel_index(np.arange(order), tuple(radices))]


def _assemble(parts: Iterable[np.ndarray], radices: Sequence[int]) -> np.ndarray:
    """Fold per-coordinate tables into one table of mixed-radix indices."""
    acc: np.ndarray | None = None
    for part, radix in zip(parts, radices):
        if acc is None:
            acc = part.astype(np.int32)
        else:
            acc *= radix
            acc += part
    assert acc is not None
    return acc


def _matrix_like(
    R: FiniteRing,
    k: int,
    positions: list[tuple[int, int]],
    label: str,
    cap: int | None,
) -> FiniteRing:
    if k < 1:
        raise ValueError(f"matrix size must be >= 1, got {k}")
    radices = (R.order,) * len(positions)
    order = R.order ** len(positions)
    ensure_within_cap(label, order, cap)
    log.debug("build: kind=matrix label=%s order=%d", label, order)

    coords = _coordinates(order, radices)
    slot = {pos: p for p, pos in enumerate(positions)}

    def add_parts() -> Iterator[np.ndarray]:
        for c in coords:
            yield R.add[c[:, None], c[None, :]]

    def mul_parts() -> Iterator[np.ndarray]:
        for i, j in positions:
            acc = None
            for l in range(k):
                if (i, l) not in slot or (l, j) not in slot:
                    continue
                a = coords[slot[(i, l)]]
                b = coords[slot[(l, j)]]
                term = R.mul[a[:, None], b[None, :]]
                acc = term if acc is None else R.add[acc, term]
            yield acc

    add = _assemble(add_parts(), radices)
    mul = _assemble(mul_parts(), radices)
    codec = MatrixCodec(R, k, positions)
    zero = codec.compose({})
    one = codec.compose({(i, i): R.one for i in range(k)})
    return make_ring(add, mul, zero, one, label, codec=codec)
