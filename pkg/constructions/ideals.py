"""Two-sided ideals, quotient rings and corner rings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from config import get_settings
from constructions.base import ElementCodec, ensure_index, strip_brackets
from errors import NotAnIdeal, NotIdempotent
from finite_ring import ElementRef, FiniteRing, make_ring

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class IdealSet:
    ring: FiniteRing
    mask: np.ndarray

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.mask))

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, index: int) -> bool:
        return bool(self.mask[index])


class QuotientRing(NamedTuple):
    ring: FiniteRing
    projection: np.ndarray     # R index -> R/I index
    ideal: IdealSet


class CornerRing(NamedTuple):
    ring: FiniteRing
    embedding: np.ndarray      # eRe index -> R index
    idempotent: int


class CosetCodec(ElementCodec):
    def __init__(self, parent: FiniteRing, representatives: np.ndarray, projection: np.ndarray):
        self.parent = parent
        self.representatives = representatives
        self.projection = projection

    def render(self, index: int) -> str:
        return "[" + self.parent.render(int(self.representatives[index])) + "]"

    def parse(self, text: str) -> int:
        return int(self.projection[self.parent.parse(strip_brackets(text, "[", "]"))])


class CornerCodec(ElementCodec):
    def __init__(self, parent: FiniteRing, embedding: np.ndarray):
        self.parent = parent
        self.embedding = embedding

    def render(self, index: int) -> str:
        return self.parent.render(int(self.embedding[index]))

    def parse(self, text: str) -> int:
        x = self.parent.parse(text)
        pos = int(np.searchsorted(self.embedding, x))
        if pos >= len(self.embedding) or self.embedding[pos] != x:
            raise ValueError(f"{text!r} is not in the corner ring")
        return pos


# ── public API ──────────────────────────────────────────────────


def ideal_generated_by(R: FiniteRing, gens: Iterable[int]) -> IdealSet:
    """Smallest two-sided ideal containing *gens*, by closure to a fixpoint."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        mask[ensure_index(g, R.order, "generator")] = True
    return IdealSet(R, _close(R, mask))


def ideal_from_mask(R: FiniteRing, mask: np.ndarray) -> IdealSet:
    """Wrap *mask* as an ideal after checking the ideal axioms."""
    mask = np.asarray(mask, dtype=bool)
    members = np.flatnonzero(mask)
    if not mask[R.zero]:
        raise NotAnIdeal(f"subset of {R.label} does not contain zero")
    checks = (
        ("addition", R.add[np.ix_(members, members)]),
        ("left multiplication", R.mul[:, members]),
        ("right multiplication", R.mul[members, :]),
    )
    for what, image in checks:
        if not mask[image].all():
            raise NotAnIdeal(f"subset of {R.label} is not closed under {what}")
    return IdealSet(R, mask)


def enumerate_ideals(R: FiniteRing, within: np.ndarray | None = None) -> list[IdealSet]:
    """Ideals generated by elements of *within* (default: all of R).

    Complete (the full lattice) up to ``ideal_lattice_limit``; principal
    ideals of every candidate up to ``principal_ideal_limit``; above that
    the zero ideal, the ideal of all candidates and the principal ideals
    of the first ``principal_ideal_sample`` candidates.
    """
    settings = get_settings()
    candidates = np.flatnonzero(within) if within is not None else np.arange(R.order)
    found: dict[bytes, np.ndarray] = {}

    def register(mask: np.ndarray) -> bool:
        key = np.packbits(mask).tobytes()
        if key in found:
            return False
        found[key] = mask
        return True

    register(ideal_generated_by(R, ()).mask)
    register(ideal_generated_by(R, candidates).mask)
    if R.order > settings.principal_ideal_limit:
        candidates = candidates[: settings.principal_ideal_sample]
    for g in candidates:
        register(ideal_generated_by(R, (int(g),)).mask)

    if R.order <= settings.ideal_lattice_limit:
        grown = True
        while grown:
            grown = False
            current = list(found.values())
            for i, a in enumerate(current):
                for b in current[i + 1:]:
                    grown |= register(_ideal_sum(R, a, b))

    ideals = sorted(found.values(), key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
    log.debug("enumerate_ideals: %s -> %d ideals", R.label, len(ideals))
    return [IdealSet(R, m) for m in ideals]


def quotient_ring(R: FiniteRing, I: IdealSet, *, label: str | None = None) -> QuotientRing:
    ideal = ideal_from_mask(R, I.mask)
    members = np.flatnonzero(ideal.mask)
    reps_of = R.add[:, members].min(axis=1).astype(np.int64)
    representatives = np.unique(reps_of)
    projection = np.searchsorted(representatives, reps_of)
    grid = np.ix_(representatives, representatives)
    add = projection[R.add[grid]]
    mul = projection[R.mul[grid]]
    label = label or f"{R.label}/I{ideal.size}"
    ring = make_ring(
        add, mul, int(projection[R.zero]), int(projection[R.one]), label,
        codec=CosetCodec(R, representatives, projection),
    )
    return QuotientRing(ring, projection, ideal)


def corner_ring(R: FiniteRing, e: ElementRef | int, *, label: str | None = None) -> CornerRing:
    e_idx = e.index if isinstance(e, ElementRef) else ensure_index(e, R.order, "idempotent")
    if R.mul[e_idx, e_idx] != e_idx:
        raise NotIdempotent(f"{R.render(e_idx)} is not idempotent in {R.label}")
    embedding = np.unique(R.mul[R.mul[e_idx, :], e_idx]).astype(np.int64)
    grid = np.ix_(embedding, embedding)
    add = np.searchsorted(embedding, R.add[grid])
    mul = np.searchsorted(embedding, R.mul[grid])
    label = label or f"corner({R.label},{e_idx})"
    ring = make_ring(
        add, mul,
        int(np.searchsorted(embedding, R.zero)), int(np.searchsorted(embedding, e_idx)),
        label, codec=CornerCodec(R, embedding),
    )
    return CornerRing(ring, embedding, e_idx)


# ── internals ───────────────────────────────────────────────────


def _close(R: FiniteRing, mask: np.ndarray) -> np.ndarray:
    while True:
        members = np.flatnonzero(mask)
        grown = mask.copy()
        grown[R.mul[:, members].ravel()] = True
        grown[R.mul[members, :].ravel()] = True
        grown[R.add[np.ix_(members, members)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def _ideal_sum(R: FiniteRing, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    mask = np.zeros(R.order, dtype=bool)
    mask[R.add[np.ix_(np.flatnonzero(a), np.flatnonzero(b))].ravel()] = True
    return mask
