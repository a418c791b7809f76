"""Generalized matrix rings K_s(R).

Elements are 2×2 arrays (a, b; c, d) over R, added entrywise and multiplied
with the central multiplier s twisting the diagonal terms:

    (a, b; c, d)(a', b'; c', d') = (aa' + s·bc', ab' + bd'; ca' + dc', s·cb' + dd')

Indexing is ((a·n + b)·n + c)·n + d, the same row-major layout as M2(R).
"""

from __future__ import annotations

import logging

import numpy as np

from constructions.base import ensure_index, ensure_within_cap
from constructions.elementary import MatrixCodec, _assemble, _coordinates
from errors import NotCentral
from finite_ring import FiniteRing, ElementRef, center_mask, make_ring

log = logging.getLogger(__name__)

_POSITIONS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def generalized_matrix_ring(R: FiniteRing, s: ElementRef | int, *, cap: int | None = None) -> FiniteRing:
    s_idx = s.index if isinstance(s, ElementRef) else ensure_index(s, R.order, "multiplier")
    if not center_mask(R)[s_idx]:
        raise NotCentral(f"multiplier {R.render(s_idx)} is not central in {R.label}")
    label = f"K({R.label},{s_idx})"
    order = R.order ** 4
    ensure_within_cap(label, order, cap)
    log.debug("build: kind=genmatrix label=%s order=%d", label, order)

    radices = (R.order,) * 4
    a, b, c, d = _coordinates(order, radices)
    add, mul = R.add, R.mul
    s_times = mul[s_idx]            # row of s: r -> s·r

    def col(x):
        return x[None, :]

    def row(x):
        return x[:, None]

    def add_parts():
        for x in (a, b, c, d):
            yield add[row(x), col(x)]

    def mul_parts():
        yield add[mul[row(a), col(a)], mul[s_times[row(b)], col(c)]]
        yield add[mul[row(a), col(b)], mul[row(b), col(d)]]
        yield add[mul[row(c), col(a)], mul[row(d), col(c)]]
        yield add[mul[s_times[row(c)], col(b)], mul[row(d), col(d)]]

    codec = MatrixCodec(R, 2, _POSITIONS)
    ring = make_ring(
        _assemble(add_parts(), radices),
        _assemble(mul_parts(), radices),
        codec.compose({}),
        codec.compose({(0, 0): R.one, (1, 1): R.one}),
        label,
        codec=codec,
    )
    return ring


def quadruple(ring: FiniteRing, index: int) -> tuple[int, int, int, int]:
    """(a, b, c, d) of an element of K_s(R) (or of M2(R))."""
    entries = ring.codec.entries(index)
    return tuple(entries[p] for p in _POSITIONS)


def from_quadruple(ring: FiniteRing, a: int, b: int, c: int, d: int) -> int:
    return ring.codec.compose(dict(zip(_POSITIONS, (a, b, c, d))))


def diagonal_mask(ring: FiniteRing) -> np.ndarray:
    """Elements of K_s(R) with zero off-diagonal entries."""
    n = ring.codec.base.order
    _, b, c, _ = _coordinates(ring.order, (n,) * 4)
    zero = ring.codec.base.zero
    return (b == zero) & (c == zero)
