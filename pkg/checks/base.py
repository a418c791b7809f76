"""Building blocks of the check registry.

A check is a list of claims plus an applicability filter.  Each claim
knows how to *scan* a subject for its first counterexample (vectorized)
and how to decide the claim on one stored witness (``holds``), so every
failure in a report can be replayed on its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from catalog import Subject
from classifiers import DecompositionKind, clean_mask, decomposition_counts, first, first_pair
from constructions import corner_ring, enumerate_ideals, ideal_from_mask, quotient_ring
from finite_ring import FiniteRing, _power_orbit
from structure_sets import structure

Roles = dict[str, Any]
Scan = Callable[[Subject], "Roles | None"]
Holds = Callable[..., bool]

CORNER_MEMO_LIMIT = 256


@dataclass(frozen=True)
class Claim:
    name: str
    scan: Scan
    holds: Holds


@dataclass(frozen=True)
class Check:
    check_id: str
    statement: str
    claims: tuple[Claim, ...]
    applies: Callable[[Subject], str | None] = field(default=lambda subject: None)
    note: Callable[[Subject], str] | None = None

    def claim(self, name: str) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(f"{self.check_id} has no claim '{name}'")


# ── claim constructors ──────────────────────────────────────────


def ring_claim(name: str, predicate: Callable[[Subject], bool]) -> Claim:
    """A claim about the whole ring; its witness carries no elements."""
    return Claim(name, lambda s: None if predicate(s) else {}, lambda s: bool(predicate(s)))


def element_claim(
    name: str,
    violations: Callable[[Subject], np.ndarray],
    holds: Callable[[Subject, int], bool],
    role: str = "element",
) -> Claim:
    """∀x claim: *violations* is the mask of counterexamples."""
    def scan(s: Subject) -> Roles | None:
        hit = first(violations(s))
        return None if hit is None else {role: hit}

    return Claim(name, scan, lambda s, **roles: bool(holds(s, roles[role])))


def pair_claim(
    name: str,
    violations: Callable[[Subject], np.ndarray],
    holds: Callable[[Subject, int, int], bool],
    roles: tuple[str, str] = ("a", "b"),
) -> Claim:
    """∀x,y claim over a 2-d violation mask."""
    def scan(s: Subject) -> Roles | None:
        hit = first_pair(violations(s))
        return None if hit is None else dict(zip(roles, hit))

    return Claim(name, scan, lambda s, **r: bool(holds(s, r[roles[0]], r[roles[1]])))


def implication(name: str, premise: Callable[[Subject], bool], conclusion: Callable[[Subject], bool]) -> Claim:
    return ring_claim(name, lambda s: (not premise(s)) or conclusion(s))


def equivalence(name: str, left: Callable[[Subject], bool], right: Callable[[Subject], bool]) -> Claim:
    return ring_claim(name, lambda s: left(s) == right(s))


# ── small helpers shared by the check modules ───────────────────


def sjsharp_mask(R: FiniteRing) -> np.ndarray:
    return clean_mask(R, DecompositionKind.STRONGLY_JSHARP_CLEAN)


def is_sjsharp(R: FiniteRing) -> bool:
    return bool(sjsharp_mask(R).all())


def is_sjsharp_element(R: FiniteRing, a: int) -> bool:
    """Scalar decision by direct search over the idempotents."""
    s = structure(R)
    for e in np.flatnonzero(s.idempotents):
        j = int(R.sub(a, e))
        if s.j_sharp[j] and R.mul[e, j] == R.mul[j, e]:
            return True
    return False


def is_kind(R: FiniteRing, kind: DecompositionKind) -> bool:
    return bool(clean_mask(R, kind).all())


def unique_count(R: FiniteRing, kind: DecompositionKind) -> bool:
    return bool((decomposition_counts(R, kind) == 1).all())


def set_mask(R: FiniteRing, name: str) -> np.ndarray:
    return structure(R).mask(name)


def sets_equal(R: FiniteRing, left: str, right: str) -> bool:
    return bool((set_mask(R, left) == set_mask(R, right)).all())


def one_plus(R: FiniteRing, mask: np.ndarray) -> np.ndarray:
    out = np.zeros(R.order, dtype=bool)
    out[R.add[R.one, np.flatnonzero(mask)]] = True
    return out


def require_sjsharp(subject: Subject) -> str | None:
    return None if is_sjsharp(subject.ring) else "not strongly J#-clean"


def require_nontrivial(subject: Subject) -> str | None:
    return "trivial ring" if subject.ring.is_trivial else None


def all_of(*filters: Callable[[Subject], str | None]) -> Callable[[Subject], str | None]:
    def combined(subject: Subject) -> str | None:
        for f in filters:
            reason = f(subject)
            if reason:
                return reason
        return None

    return combined


def corner_of(R: FiniteRing, e: int):
    """eRe for an idempotent e, memoized on the ring's structure entry."""
    extras = structure(R).extras
    key = ("corner", int(e), R.label)
    found = extras.get(key)
    if found is None:
        found = corner_ring(R, int(e))
        if found.ring.order <= CORNER_MEMO_LIMIT:
            extras[key] = found
    return found


def idempotent_indices(R: FiniteRing) -> np.ndarray:
    return np.flatnonzero(structure(R).idempotents)


def in_jsharp(R: FiniteRing, z: int) -> bool:
    """Scalar J# membership straight from the power orbit of z."""
    jac = structure(R).jacobson
    return any(jac[p] for p in _power_orbit(R.mul, int(z)))


def ideals_of(R: FiniteRing, within: str | None = None) -> list:
    """Ideals of R generated inside the named set (all of R by default)."""
    extras = structure(R).extras
    key = ("ideals", within, R.label)
    if key not in extras:
        mask = None if within is None else set_mask(R, within)
        extras[key] = enumerate_ideals(R, within=mask)
    return extras[key]


def radical_quotient(R: FiniteRing) -> FiniteRing:
    """R/J(R)."""
    extras = structure(R).extras
    key = ("radical_quotient", R.label)
    if key not in extras:
        J = ideal_from_mask(R, set_mask(R, "jacobson"))
        extras[key] = quotient_ring(R, J, label=f"{R.label}/J").ring
    return extras[key]


def quotient_order(R: FiniteRing) -> int:
    """|R/J(R)|."""
    return R.order // int(set_mask(R, "jacobson").sum())


def has_trivial_idempotents(R: FiniteRing) -> bool:
    return int(structure(R).idempotents.sum()) == (1 if R.is_trivial else 2)


def is_field(R: FiniteRing) -> bool:
    """Finite division ring: nontrivial and every nonzero element a unit."""
    units = structure(R).units
    return not R.is_trivial and bool(units[R.elements != R.zero].all())
