"""Structural subsets of a finite ring: U, Id, Nil, J, J#, QN and ΔN.

Each set is computed exactly by scanning the tables.  Results are kept
per ring (keyed by the content hash) as boolean masks, so the classifiers
and the checks can combine them with numpy without recomputation.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from errors import InternalInconsistency
from finite_ring import FiniteRing, _power_orbit, center_mask

log = logging.getLogger(__name__)

SET_NAMES = (
    "units",
    "idempotents",
    "nilpotents",
    "jacobson",
    "j_sharp",
    "quasi_nilpotents",
    "delta_nilpotents",
)

_SET_SYMBOLS = {
    "units": "U",
    "idempotents": "Id",
    "nilpotents": "Nil",
    "jacobson": "J",
    "j_sharp": "J#",
    "quasi_nilpotents": "QN",
    "delta_nilpotents": "ΔN",
}

# memo eviction budget, in table cells of the rings kept alive
_MEMO_CELLS = 1 << 26


# ─────────────────────────────────────────────────────────────────
# Per-ring lazy masks
# ─────────────────────────────────────────────────────────────────


class RingStructure:
    """Lazily computed masks of one ring. Obtain through :func:`structure`."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        # derived per-ring data owned by other modules (decomposition counts ...);
        # rings with equal tables share this entry, so label-bearing values key on ring.label
        self.extras: dict[Any, Any] = {}

    @cached_property
    def units(self) -> np.ndarray:
        return self._two_sided_inverse.any(axis=1)

    @cached_property
    def inverse(self) -> np.ndarray:
        """u⁻¹ for units, -1 elsewhere."""
        inv = np.argmax(self._two_sided_inverse, axis=1).astype(np.int64)
        inv[~self.units] = -1
        return inv

    @cached_property
    def idempotents(self) -> np.ndarray:
        x = self.ring.elements
        return self.ring.mul[x, x] == x

    @cached_property
    def nilpotents(self) -> np.ndarray:
        R = self.ring
        return self._orbit_meets(R.elements == R.zero)

    @cached_property
    def jacobson(self) -> np.ndarray:
        """{a : 1 - ra is a unit for every r}."""
        R = self.ring
        # column a of one_minus[mul] holds 1 - r·a for every r
        return self.units[R.one_minus[R.mul]].all(axis=0)

    @cached_property
    def jacobson_two_sided(self) -> np.ndarray:
        """{a : 1 - ras is a unit for every r, s}, evaluated as ∀r (∀s 1 - (ra)s ∈ U)."""
        R = self.ring
        right_ok = self.units[R.one_minus[R.mul]].all(axis=1)
        return right_ok[R.mul].all(axis=0)

    @cached_property
    def j_sharp(self) -> np.ndarray:
        return self._orbit_meets(self.jacobson)

    @cached_property
    def commuting(self) -> np.ndarray:
        """commuting[a, x] is ax = xa."""
        return self.ring.mul == self.ring.mul.T

    @cached_property
    def quasi_nilpotents(self) -> np.ndarray:
        R = self.ring
        ok = self.units[R.one_minus[R.mul]]          # [a, x]: 1 - ax ∈ U
        return (~self.commuting | ok).all(axis=1)

    @cached_property
    def delta_nilpotents(self) -> np.ndarray:
        R = self.ring
        u = np.flatnonzero(self.units)
        ok = self.units[R.one_minus[R.mul[:, u]]]    # [a, k]: 1 - a·u_k ∈ U
        return (~self.commuting[:, u] | ok).all(axis=1)

    @cached_property
    def center(self) -> np.ndarray:
        return center_mask(self.ring)

    @cached_property
    def _two_sided_inverse(self) -> np.ndarray:
        left = self.ring.mul == self.ring.one
        return left & left.T

    def mask(self, name: str) -> np.ndarray:
        if name not in SET_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def seed(self, sets: StructuralSets) -> None:
        """Adopt masks from a previously computed (e.g. cached) StructuralSets."""
        for name in SET_NAMES:
            self.__dict__.setdefault(name, sets.mask(name, self.ring.order))

    def _orbit_meets(self, target: np.ndarray) -> np.ndarray:
        mul = self.ring.mul
        out = np.zeros(self.ring.order, dtype=bool)
        for a in range(self.ring.order):
            out[a] = any(target[p] for p in _power_orbit(mul, a))
        return out


_memo: dict[str, RingStructure] = {}
_memo_lock = threading.Lock()


def structure(ring: FiniteRing) -> RingStructure:
    key = ring.content_hash
    found = _memo.get(key)
    if found is not None:
        return found
    with _memo_lock:
        found = _memo.get(key)
        if found is None:
            while _memo and sum(s.ring.order ** 2 for s in _memo.values()) + ring.order ** 2 > _MEMO_CELLS:
                _memo.pop(next(iter(_memo)))
            found = _memo[key] = RingStructure(ring)
    return found


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


# ─────────────────────────────────────────────────────────────────
# Snapshot type
# ─────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class StructuralSets:
    """The seven structural sets of one ring as sorted index tuples."""
    units: tuple[int, ...]
    idempotents: tuple[int, ...]
    nilpotents: tuple[int, ...]
    jacobson: tuple[int, ...]
    j_sharp: tuple[int, ...]
    quasi_nilpotents: tuple[int, ...]
    delta_nilpotents: tuple[int, ...]
    label: str = field(default="", compare=False)

    def mask(self, name: str, order: int) -> np.ndarray:
        out = np.zeros(order, dtype=bool)
        out[list(getattr(self, name))] = True
        return out

    def to_dict(self) -> dict[str, list[int]]:
        return {name: list(getattr(self, name)) for name in SET_NAMES}

    @classmethod
    def from_dict(cls, data: dict[str, Any], label: str = "") -> StructuralSets:
        return cls(**{name: tuple(int(i) for i in data[name]) for name in SET_NAMES}, label=label)

    def summary_line(self, name: str, ring: FiniteRing | None = None, limit: int = 12) -> str:
        members = getattr(self, name)
        shown = [ring.render(i) if ring is not None else str(i) for i in members[:limit]]
        more = "…" if len(members) > limit else ""
        return f"{_SET_SYMBOLS[name]:<4} |{len(members)}|  {{{', '.join(shown)}{more}}}"


# ─────────────────────────────────────────────────────────────────
# Public API
# ─────────────────────────────────────────────────────────────────


def units(ring: FiniteRing) -> frozenset[int]:
    return _as_set(structure(ring).units)


def idempotents(ring: FiniteRing) -> frozenset[int]:
    return _as_set(structure(ring).idempotents)


def nilpotents(ring: FiniteRing) -> frozenset[int]:
    return _as_set(structure(ring).nilpotents)


def jacobson_radical(ring: FiniteRing) -> frozenset[int]:
    s = structure(ring)
    _assert_ideal(ring, s.jacobson)
    return _as_set(s.jacobson)


def jacobson_oracle(ring: FiniteRing) -> frozenset[int]:
    """Two-sided characterization of J(R), kept as a differential check."""
    return _as_set(structure(ring).jacobson_two_sided)


def j_sharp(ring: FiniteRing) -> frozenset[int]:
    return _as_set(structure(ring).j_sharp)


def quasi_nilpotents(ring: FiniteRing) -> frozenset[int]:
    return _as_set(structure(ring).quasi_nilpotents)


def delta_nilpotents(ring: FiniteRing) -> frozenset[int]:
    return _as_set(structure(ring).delta_nilpotents)


def compute_structural_sets(ring: FiniteRing) -> StructuralSets:
    """All seven sets, after asserting the inclusions that always hold."""
    s = structure(ring)
    _assert_ideal(ring, s.jacobson)
    _assert_chain(ring, s)
    return StructuralSets(
        **{name: tuple(int(i) for i in np.flatnonzero(s.mask(name))) for name in SET_NAMES},
        label=ring.label,
    )


def sets_summary_text(ring: FiniteRing, sets: StructuralSets, *, pretty: bool = False) -> str:
    lines = [f"Conjuntos estruturais de {ring.label} (ordem {ring.order}):"]
    for name in SET_NAMES:
        lines.append("  • " + sets.summary_line(name, ring if pretty else None))
    return "\n".join(lines)


# ── internals ───────────────────────────────────────────────────


def _as_set(mask: np.ndarray) -> frozenset[int]:
    return frozenset(int(i) for i in np.flatnonzero(mask))


def _assert_ideal(ring: FiniteRing, mask: np.ndarray) -> None:
    members = np.flatnonzero(mask)
    closed = (
        mask[ring.zero]
        and mask[ring.add[np.ix_(members, members)]].all()
        and mask[ring.mul[:, members]].all()
        and mask[ring.mul[members, :]].all()
    )
    if not closed:
        raise InternalInconsistency(f"computed J({ring.label}) is not a two-sided ideal")


def _assert_chain(ring: FiniteRing, s: RingStructure) -> None:
    inclusions = (
        ("jacobson", "j_sharp"),
        ("nilpotents", "j_sharp"),
        ("jacobson", "quasi_nilpotents"),
        ("nilpotents", "quasi_nilpotents"),
        ("quasi_nilpotents", "delta_nilpotents"),
    )
    for small, big in inclusions:
        stray = np.flatnonzero(s.mask(small) & ~s.mask(big))
        if stray.size:
            raise InternalInconsistency(
                f"{_SET_SYMBOLS[small]} ⊄ {_SET_SYMBOLS[big]} in {ring.label} at {int(stray[0])}"
            )
    if not ring.is_trivial and (s.units & s.j_sharp).any():
        raise InternalInconsistency(f"U ∩ J# is not empty in {ring.label}")
