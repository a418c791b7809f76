"""Generalized matrix rings K_s(R) over local rings, and conjugation
invariance of strong J#-cleanness (checked in every ring)."""

from __future__ import annotations

import numpy as np

from catalog import Subject
from checks.base import (
    Check,
    Claim,
    all_of,
    element_claim,
    first,
    in_jsharp,
    is_sjsharp_element,
    set_mask,
    sjsharp_mask,
)
from classifiers import is_local
from constructions.generalized_matrix import diagonal_mask, from_quadruple, quadruple
from finite_ring import FiniteRing
from structure_sets import structure


def require_generalized_matrix(s: Subject) -> str | None:
    return None if s.is_generalized_matrix else "not a generalized matrix ring"


def require_local_base(s: Subject) -> str | None:
    return None if is_local(s.base) else f"{s.base.label} is not local"


def _entries(s: Subject) -> tuple[np.ndarray, ...]:
    """Entry arrays (a, b, c, d) over every element of K_s(R)."""
    n = s.base.order
    return np.unravel_index(np.arange(s.ring.order), (n,) * 4)


def _multiplier_in_radical(s: Subject) -> bool:
    return bool(set_mask(s.base, "jacobson")[s.multiplier])


def similar_to(R: FiniteRing, target: np.ndarray, elements: np.ndarray | None = None) -> np.ndarray:
    """Mask over *elements*: some unit P puts P x P⁻¹ into *target*."""
    st = structure(R)
    xs = R.elements if elements is None else elements
    reached = np.zeros(len(xs), dtype=bool)
    for p in np.flatnonzero(st.units):
        reached |= target[R.mul[R.mul[p, xs], st.inverse[p]]]
        if reached.all():
            break
    return reached


# ── radical and units of K_s(R) ─────────────────────────────────


def _block_radical(s: Subject) -> np.ndarray:
    """(J, (s:J); (s:J), J) with (s:J) = {r : rs ∈ J}."""
    jac = set_mask(s.base, "jacobson")
    colon = jac[s.base.mul[:, s.multiplier]]
    a, b, c, d = _entries(s)
    return jac[a] & colon[b] & colon[c] & jac[d]


def _local_radical_violations(s: Subject) -> np.ndarray:
    if not (is_local(s.base) and _multiplier_in_radical(s)):
        return np.zeros(s.ring.order, dtype=bool)
    jac = set_mask(s.base, "jacobson")
    a, _, _, d = _entries(s)
    return set_mask(s.ring, "jacobson") != (jac[a] & jac[d])


def _unit_criterion_violations(s: Subject) -> np.ndarray:
    if not (is_local(s.base) and _multiplier_in_radical(s)):
        return np.zeros(s.ring.order, dtype=bool)
    units = set_mask(s.base, "units")
    a, _, _, d = _entries(s)
    return set_mask(s.ring, "units") != (units[a] & units[d])


def _replay(violations):
    return lambda s, element: not violations(s)[element]


KS_RADICAL = Check(
    "CHK-Ks-radical",
    "J(K_s(R)) = (J, (s:J); (s:J), J); for local R with s ∈ J it is (J, R; R, J) "
    "and (a, x; y, b) is a unit iff a, b ∈ U(R)",
    (
        element_claim(
            "block formula",
            lambda s: set_mask(s.ring, "jacobson") != _block_radical(s),
            lambda s, element: bool(set_mask(s.ring, "jacobson")[element]) == bool(_block_radical(s)[element]),
        ),
        element_claim("local base with s in J", _local_radical_violations, _replay(_local_radical_violations)),
        element_claim("unit criterion", _unit_criterion_violations, _replay(_unit_criterion_violations)),
    ),
    applies=require_generalized_matrix,
)


# ── conjugation ─────────────────────────────────────────────────


def _conjugation_scan(s: Subject):
    R = s.ring
    st = structure(R)
    sj = sjsharp_mask(R)
    for p in np.flatnonzero(st.units):
        image = R.mul[R.mul[p, R.elements], st.inverse[p]]
        bad = first(sj & ~sj[image])
        if bad is not None:
            return {"element": bad, "unit": int(p)}
    return None


def _conjugation_holds(s: Subject, element: int, unit: int) -> bool:
    R = s.ring
    inv = int(structure(R).inverse[unit])
    if inv < 0 or not is_sjsharp_element(R, element):
        return True
    return is_sjsharp_element(R, int(R.mul[R.mul[unit, element], inv]))


KS_CONJUGATION = Check(
    "CHK-Ks-conjugation",
    "A strongly J#-clean implies P A P⁻¹ strongly J#-clean for every unit P",
    (Claim("conjugates stay strongly J#-clean", _conjugation_scan, _conjugation_holds),),
)


# ── idempotents, diagonals and the local structure theorem ──────


def _standard_idempotents(s: Subject) -> np.ndarray:
    """diag(1, 0), plus diag(0, 1) when s ∈ J(R)."""
    R, base = s.ring, s.base
    target = np.zeros(R.order, dtype=bool)
    target[from_quadruple(R, base.one, base.zero, base.zero, base.zero)] = True
    if _multiplier_in_radical(s):
        target[from_quadruple(R, base.zero, base.zero, base.zero, base.one)] = True
    return target


def _nontrivial_idempotents(R: FiniteRing) -> np.ndarray:
    idem = structure(R).idempotents.copy()
    idem[[R.zero, R.one]] = False
    return np.flatnonzero(idem)


def _ks_idempotent_scan(s: Subject):
    idem = _nontrivial_idempotents(s.ring)
    reached = similar_to(s.ring, _standard_idempotents(s), idem)
    bad = first(~reached)
    return None if bad is None else {"idempotent": int(idem[bad])}


def _ks_idempotent_holds(s: Subject, idempotent: int) -> bool:
    R = s.ring
    if R.mul[idempotent, idempotent] != idempotent or idempotent in (R.zero, R.one):
        return True
    return bool(similar_to(R, _standard_idempotents(s), np.array([idempotent]))[0])


KS_IDEMPOTENTS = Check(
    "CHK-Ks-idempotents",
    "over local R a nontrivial idempotent of K_s(R) is similar to diag(1, 0), "
    "or when s ∈ J(R) to diag(1, 0) or diag(0, 1)",
    (Claim("nontrivial idempotents are standard up to similarity", _ks_idempotent_scan, _ks_idempotent_holds),),
    applies=all_of(require_generalized_matrix, require_local_base),
)


def _diagonal_violations(s: Subject) -> np.ndarray:
    jac = set_mask(s.base, "jacobson")
    a, _, _, d = _entries(s)
    return diagonal_mask(s.ring) & set_mask(s.ring, "j_sharp") & ~(jac[a] & jac[d])


def _diagonal_holds(s: Subject, element: int) -> bool:
    R = s.ring
    a, b, c, d = quadruple(R, element)
    if b != s.base.zero or c != s.base.zero or not in_jsharp(R, element):
        return True
    jac = set_mask(s.base, "jacobson")
    return bool(jac[a] and jac[d])


KS_DIAGONAL = Check(
    "CHK-Ks-diagonal",
    "over local R, diag(a, b) ∈ J#(K_s(R)) forces a, b ∈ J(R)",
    (element_claim("diagonal J# entries lie in J(R)", _diagonal_violations, _diagonal_holds),),
    applies=all_of(require_generalized_matrix, require_local_base),
)


def _split_diagonals(s: Subject) -> np.ndarray:
    """diag(a, b) with one entry in J(R) and the other in 1 + J(R)."""
    base = s.base
    jac = set_mask(base, "jacobson")
    shifted = jac[base.one_minus]
    a, _, _, d = _entries(s)
    split = (jac[a] & shifted[d]) | (shifted[a] & jac[d])
    return diagonal_mask(s.ring) & split


def _structure_theorem(s: Subject, elements: np.ndarray | None = None) -> np.ndarray:
    R = s.ring
    xs = R.elements if elements is None else elements
    js = set_mask(R, "j_sharp")
    return js[xs] | js[R.sub(xs, R.one)] | similar_to(R, _split_diagonals(s), xs)


LOCSTR = Check(
    "CHK-locstr",
    "over local R, A is strongly J#-clean iff A ∈ J#, A ∈ I + J#, or A ~ diag(a, b) "
    "with one entry in J(R) and the other in 1 + J(R)",
    (
        element_claim(
            "strongly J#-clean iff one of the three shapes",
            lambda s: sjsharp_mask(s.ring) != _structure_theorem(s),
            lambda s, element: is_sjsharp_element(s.ring, element)
            == bool(_structure_theorem(s, np.array([element]))[0]),
        ),
    ),
    applies=all_of(require_generalized_matrix, require_local_base),
)


CHECKS = (KS_RADICAL, KS_CONJUGATION, KS_IDEMPOTENTS, KS_DIAGONAL, LOCSTR)
