"""Element decompositions a = e + j and ring-level class predicates."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from finite_ring import FiniteRing, center_mask
from structure_sets import structure

log = logging.getLogger(__name__)


class DecompositionKind(str, Enum):
    """Shape of the decomposition: complement set and commuting requirement."""
    CLEAN = "clean"
    STRONGLY_CLEAN = "strongly-clean"
    NIL_CLEAN = "nil-clean"
    STRONGLY_NIL_CLEAN = "strongly-nil-clean"
    J_CLEAN = "j-clean"
    STRONGLY_J_CLEAN = "strongly-j-clean"
    JSHARP_CLEAN = "jsharp-clean"
    STRONGLY_JSHARP_CLEAN = "strongly-jsharp-clean"
    QN_CLEAN = "qn-clean"
    STRONGLY_QN_CLEAN = "strongly-qn-clean"
    DELTAN_CLEAN = "deltan-clean"
    STRONGLY_DELTAN_CLEAN = "strongly-deltan-clean"

    @property
    def strongly(self) -> bool:
        return self.value.startswith("strongly-")

    @property
    def target(self) -> str:
        base = self.value.removeprefix("strongly-")
        return _TARGETS[base]


_TARGETS = {
    "clean": "units",
    "nil-clean": "nilpotents",
    "j-clean": "jacobson",
    "jsharp-clean": "j_sharp",
    "qn-clean": "quasi_nilpotents",
    "deltan-clean": "delta_nilpotents",
}


def parse_kind(text: str | DecompositionKind) -> DecompositionKind:
    if isinstance(text, DecompositionKind):
        return text
    key = text.strip().lower().replace("_", "-")
    for old, new in (("j#", "jsharp"), ("δ", "delta"), ("quasi-nil", "qn")):
        key = key.replace(old, new)
    try:
        return DecompositionKind(key)
    except ValueError:
        known = ", ".join(k.value for k in DecompositionKind)
        raise ValueError(f"Unknown decomposition kind '{text}'. Known: {known}") from None


@dataclass(frozen=True)
class Decomposition:
    element: int
    idempotent: int
    complement: int
    kind: DecompositionKind
    commuting: bool

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d


# ─────────────────────────────────────────────────────────────────
# Element level
# ─────────────────────────────────────────────────────────────────


def decompositions(R: FiniteRing, a: int, kind: DecompositionKind | str) -> list[Decomposition]:
    """Every (e, j) with a = e + j for the given kind, ordered by e."""
    kind = parse_kind(kind)
    s = structure(R)
    target = s.mask(kind.target)
    found = []
    for e in np.flatnonzero(s.idempotents):
        j = int(R.sub(a, e))
        if not target[j]:
            continue
        commuting = bool(R.mul[e, j] == R.mul[j, e])
        if kind.strongly and not commuting:
            continue
        found.append(Decomposition(int(a), int(e), j, kind, commuting))
    return found


def decomposition_counts(R: FiniteRing, kind: DecompositionKind) -> np.ndarray:
    """Number of idempotents giving a decomposition, for every element."""
    s = structure(R)
    cached = s.extras.get(("counts", kind))
    if cached is not None:
        return cached
    target = s.mask(kind.target)
    x = R.elements
    counts = np.zeros(R.order, dtype=np.int64)
    for e in np.flatnonzero(s.idempotents):
        j = R.sub(x, e)
        ok = target[j]
        if kind.strongly:
            ok &= R.mul[e, j] == R.mul[j, e]
        counts += ok
    counts.setflags(write=False)
    s.extras[("counts", kind)] = counts
    return counts


def clean_mask(R: FiniteRing, kind: DecompositionKind | str) -> np.ndarray:
    return decomposition_counts(R, parse_kind(kind)) > 0


def is_clean(R: FiniteRing, kind: DecompositionKind | str) -> bool:
    return bool(clean_mask(R, kind).all())


def x_witness_mask(R: FiniteRing) -> np.ndarray:
    """[a, x]: x²a = x, ax = xa and a - ax ∈ J#."""
    s = structure(R)
    x = R.elements
    x_sq = R.mul[x, x]
    cond_power = R.mul[x_sq[None, :], x[:, None]] == x[None, :]      # [a, x]: x²·a = x
    ax = R.mul                                                       # [a, x]
    cond_rest = s.j_sharp[R.sub(x[:, None], ax)]
    return cond_power & s.commuting & cond_rest


def is_strongly_jsharp_clean_via_x(R: FiniteRing, a: int) -> int | None:
    """Smallest x with x²a = x, ax = xa and a - ax ∈ J#(R), if any."""
    s = structure(R)
    x = R.elements
    x_sq = R.mul[x, x]
    ok = (R.mul[x_sq, a] == x) & (R.mul[a, x] == R.mul[x, a]) & s.j_sharp[R.sub(a, R.mul[a, x])]
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else None


# ─────────────────────────────────────────────────────────────────
# Ring level
# ─────────────────────────────────────────────────────────────────


@dataclass
class RingClassReport:
    label: str
    order: int
    trivial: bool
    boolean_ring: bool
    abelian: bool
    local: bool
    field: bool
    dedekind_finite: bool
    clean: bool
    strongly_clean: bool
    nil_clean: bool
    strongly_nil_clean: bool
    j_clean: bool
    strongly_j_clean: bool
    jsharp_clean: bool
    strongly_jsharp_clean: bool
    qn_clean: bool
    strongly_qn_clean: bool
    deltan_clean: bool
    strongly_deltan_clean: bool
    uniquely_clean: bool
    uniquely_jsharp_clean: bool
    uu: bool
    uj: bool
    uq: bool
    delta_nu: bool
    trivial_idempotents_only: bool
    two_in_jacobson: bool
    witnesses: dict[str, dict[str, int]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def flags(self) -> dict[str, bool]:
        return {k: v for k, v in asdict(self).items() if isinstance(v, bool)}

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


_KIND_FLAGS = {
    "clean": DecompositionKind.CLEAN,
    "strongly_clean": DecompositionKind.STRONGLY_CLEAN,
    "nil_clean": DecompositionKind.NIL_CLEAN,
    "strongly_nil_clean": DecompositionKind.STRONGLY_NIL_CLEAN,
    "j_clean": DecompositionKind.J_CLEAN,
    "strongly_j_clean": DecompositionKind.STRONGLY_J_CLEAN,
    "jsharp_clean": DecompositionKind.JSHARP_CLEAN,
    "strongly_jsharp_clean": DecompositionKind.STRONGLY_JSHARP_CLEAN,
    "qn_clean": DecompositionKind.QN_CLEAN,
    "strongly_qn_clean": DecompositionKind.STRONGLY_QN_CLEAN,
    "deltan_clean": DecompositionKind.DELTAN_CLEAN,
    "strongly_deltan_clean": DecompositionKind.STRONGLY_DELTAN_CLEAN,
}

_UNIT_SHAPES = {
    "uu": "nilpotents",
    "uj": "jacobson",
    "uq": "quasi_nilpotents",
    "delta_nu": "delta_nilpotents",
}


def ring_class_report(R: FiniteRing) -> RingClassReport:
    s = structure(R)
    witnesses: dict[str, dict[str, int]] = {}
    flags: dict[str, bool] = {}

    def record(name: str, holds: bool, witness: dict[str, int] | None = None) -> None:
        flags[name] = bool(holds)
        if not holds and witness is not None:
            witnesses[name] = witness

    not_idem = first(~s.idempotents)
    record("boolean_ring", not_idem is None, {"element": not_idem} if not_idem is not None else None)

    record_pair = _non_central_idempotent(R)
    record("abelian", record_pair is None,
           {"idempotent": record_pair[0], "element": record_pair[1]} if record_pair else None)

    local, local_witness = _local(R)
    record("local", local, local_witness)
    record("field", local and not s.jacobson[_nonzero(R)].any() and _is_commutative(R))

    pair = first_pair((R.mul == R.one) & (R.mul.T != R.one))
    record("dedekind_finite", pair is None, {"a": pair[0], "b": pair[1]} if pair else None)

    for name, kind in _KIND_FLAGS.items():
        bad = first(~clean_mask(R, kind))
        record(name, bad is None, {"element": bad} if bad is not None else None)

    for name, kind in (("uniquely_clean", DecompositionKind.CLEAN),
                       ("uniquely_jsharp_clean", DecompositionKind.JSHARP_CLEAN)):
        bad = first(decomposition_counts(R, kind) != 1)
        record(name, bad is None, {"element": bad} if bad is not None else None)

    for name, set_name in _UNIT_SHAPES.items():
        bad = unit_shape_witness(R, set_name)
        record(name, bad is None, bad)

    nontrivial = np.flatnonzero(s.idempotents & (R.elements != R.zero) & (R.elements != R.one))
    record("trivial_idempotents_only", nontrivial.size == 0,
           {"idempotent": int(nontrivial[0])} if nontrivial.size else None)

    r = first(~s.units[R.one_minus[R.mul[:, R.two]]])
    record("two_in_jacobson", bool(s.jacobson[R.two]), {"r": r} if r is not None else None)

    notes = []
    if R.is_trivial:
        notes.append("trivial ring: every strongly-X-clean predicate holds vacuously")
    notes.append("uq is evaluated as U(R) = 1 + QN(R)")
    return RingClassReport(
        label=R.label, order=R.order, trivial=R.is_trivial,
        witnesses=witnesses, notes=notes, **flags,
    )


def unit_shape_witness(R: FiniteRing, set_name: str) -> dict[str, int] | None:
    """Counterexample to U(R) = 1 + X, or None when equality holds."""
    s = structure(R)
    shifted = np.zeros(R.order, dtype=bool)
    shifted[R.add[R.one, np.flatnonzero(s.mask(set_name))]] = True
    extra = first(shifted & ~s.units)
    if extra is not None:
        return {"one_plus_x_not_unit": extra}
    missing = first(s.units & ~shifted)
    if missing is not None:
        return {"unit_not_one_plus_x": missing}
    return None


def units_equal_one_plus(R: FiniteRing, set_name: str) -> bool:
    return unit_shape_witness(R, set_name) is None


def is_local(R: FiniteRing) -> bool:
    return _local(R)[0]


def is_abelian(R: FiniteRing) -> bool:
    return _non_central_idempotent(R) is None


def is_boolean(R: FiniteRing) -> bool:
    return bool(structure(R).idempotents.all())


def first(mask: np.ndarray) -> int | None:
    """Index of the first True entry."""
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def first_pair(mask: np.ndarray) -> tuple[int, int] | None:
    hits = np.argwhere(mask)
    return (int(hits[0][0]), int(hits[0][1])) if hits.size else None


# ── internals ───────────────────────────────────────────────────


def _nonzero(R: FiniteRing) -> np.ndarray:
    return R.elements != R.zero


def _is_commutative(R: FiniteRing) -> bool:
    return bool((R.mul == R.mul.T).all())


def _non_central_idempotent(R: FiniteRing) -> tuple[int, int] | None:
    s = structure(R)
    for e in np.flatnonzero(s.idempotents & ~center_mask(R)):
        r = first(~s.commuting[e])
        return int(e), int(r)
    return None


def _local(R: FiniteRing) -> tuple[bool, dict[str, int] | None]:
    """Local iff nontrivial and the nonunits are exactly J(R)."""
    s = structure(R)
    if R.is_trivial:
        return False, {"trivial": 1}
    stray = first(~s.units & ~s.jacobson)
    if stray is None:
        return True, None
    return False, {"nonunit_outside_jacobson": stray}
