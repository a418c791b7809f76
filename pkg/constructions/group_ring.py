"""Group rings RG and the augmentation map.

An element of RG is a coefficient vector (x_g) over the group elements,
indexed mixed-radix with the coefficient of group element 0 most
significant.  Multiplication is the convolution (xy)_h = Σ_{g·g' = h} x_g y_g'.
"""

from __future__ import annotations

import logging

import numpy as np

from constructions.base import ElementCodec, ensure_within_cap, split_top_level
from constructions.elementary import _assemble, _coordinates
from constructions.groups import GroupTable
from errors import NotAGroupRing
from finite_ring import ElementRef, FiniteRing, make_ring

log = logging.getLogger(__name__)


class GroupRingCodec(ElementCodec):
    """Coefficient vectors of RG, rendered as ``a*g0 + b*g2``."""

    def __init__(self, base: FiniteRing, group: GroupTable):
        self.base = base
        self.group = group
        self.radices = (base.order,) * group.order

    def coefficients(self, index: int) -> tuple[int, ...]:
        return tuple(int(c) for c in np.unravel_index(int(index), self.radices))

    def compose(self, coefficients) -> int:
        return int(np.ravel_multi_index(tuple(int(c) for c in coefficients), self.radices))

    def render(self, index: int) -> str:
        terms = [
            f"{self.base.render(c)}*{self.group.name(g)}"
            for g, c in enumerate(self.coefficients(index))
            if c != self.base.zero
        ]
        return " + ".join(terms) if terms else self.base.render(self.base.zero)

    def parse(self, text: str) -> int:
        coeffs = [self.base.zero] * self.group.order
        names = {self.group.name(g): g for g in range(self.group.order)}
        text = text.strip()
        if text == self.base.render(self.base.zero):
            return self.compose(coeffs)
        for term in split_top_level(text, "+"):
            coeff_text, _, name = term.rpartition("*")
            if name.strip() not in names or not coeff_text:
                raise ValueError(f"malformed group-ring term {term!r}")
            g = names[name.strip()]
            coeffs[g] = int(self.base.add[coeffs[g], self.base.parse(coeff_text)])
        return self.compose(coeffs)


# ── public API ──────────────────────────────────────────────────


def group_ring(R: FiniteRing, G: GroupTable, *, cap: int | None = None) -> FiniteRing:
    m = G.order
    label = f"GR({R.label},{G.label})"
    order = R.order ** m
    ensure_within_cap(label, order, cap)
    log.debug("build: kind=group_ring label=%s order=%d", label, order)

    radices = (R.order,) * m
    coords = _coordinates(order, radices)
    # partner[g, h] = g' with g·g' = h
    partner = G.op[G.inverse[:, None], np.arange(m)[None, :]]

    def add_parts():
        for c in coords:
            yield R.add[c[:, None], c[None, :]]

    def mul_parts():
        for h in range(m):
            acc = None
            for g in range(m):
                term = R.mul[coords[g][:, None], coords[int(partner[g, h])][None, :]]
                acc = term if acc is None else R.add[acc, term]
            yield acc

    codec = GroupRingCodec(R, G)
    zero = codec.compose([R.zero] * m)
    one_coeffs = [R.zero] * m
    one_coeffs[G.identity] = R.one
    return make_ring(
        _assemble(add_parts(), radices),
        _assemble(mul_parts(), radices),
        zero,
        codec.compose(one_coeffs),
        label,
        codec=codec,
    )


def augmentation_map(RG: FiniteRing) -> np.ndarray:
    """ε for every element of RG, as an array of indices of R."""
    codec = _group_ring_codec(RG)
    base = codec.base
    coords = _coordinates(RG.order, codec.radices)
    acc = coords[0]
    for c in coords[1:]:
        acc = base.add[acc, c]
    return np.asarray(acc, dtype=np.int64)


def augmentation(x: ElementRef) -> int:
    codec = _group_ring_codec(x.ring)
    acc = codec.base.zero
    for c in codec.coefficients(x.index):
        acc = int(codec.base.add[acc, c])
    return acc


def augmentation_ideal(RG: FiniteRing):
    """Δ(RG) = ker ε, verified to be a two-sided ideal."""
    from constructions.ideals import ideal_from_mask

    eps = augmentation_map(RG)
    return ideal_from_mask(RG, eps == _group_ring_codec(RG).base.zero)


def embed_base(RG: FiniteRing, r: int) -> int:
    """r ↦ r·1_G."""
    codec = _group_ring_codec(RG)
    coeffs = [codec.base.zero] * codec.group.order
    coeffs[codec.group.identity] = int(r)
    return codec.compose(coeffs)


def _group_ring_codec(ring: FiniteRing) -> GroupRingCodec:
    if not isinstance(ring.codec, GroupRingCodec):
        raise NotAGroupRing(f"{ring.label} was not built by group_ring")
    return ring.codec
