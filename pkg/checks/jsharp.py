"""Strongly J#-clean rings: products, quotients, units, corners, matrices,
the reverse-product theorem and the clean / local characterizations."""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from catalog import Subject
from checks.base import (
    Check,
    Claim,
    all_of,
    corner_of,
    element_claim,
    equivalence,
    first,
    first_pair,
    has_trivial_idempotents,
    ideals_of,
    idempotent_indices,
    implication,
    in_jsharp,
    is_field,
    is_kind,
    is_sjsharp,
    is_sjsharp_element,
    one_plus,
    pair_claim,
    quotient_order,
    radical_quotient,
    require_nontrivial,
    require_sjsharp,
    ring_claim,
    set_mask,
    sets_equal,
    sjsharp_mask,
    unique_count,
)
from checks.structure import product_factor_sets, product_of
from classifiers import (
    DecompositionKind as K,
    decomposition_counts,
    decompositions,
    is_abelian,
    is_boolean,
    is_local,
    is_strongly_jsharp_clean_via_x,
    units_equal_one_plus,
    x_witness_mask,
)
from constructions import matrix_ring, quotient_ring
from constructions.base import resolve_cap
from finite_ring import FiniteRing, center_mask
from structure_sets import structure

log = logging.getLogger(__name__)


def _sj(s: Subject) -> bool:
    return is_sjsharp(s.ring)


def _units_one_plus_jsharp(s: Subject) -> bool:
    return units_equal_one_plus(s.ring, "j_sharp")


# ── products and quotients ──────────────────────────────────────


def _product_scan(s: Subject):
    for k in range(len(product_factor_sets(s))):
        if not _product_holds(s, k):
            return {"factors": k}
    return None


def _product_holds(s: Subject, factors: int) -> bool:
    fs, P = product_of(s, factors)
    return is_sjsharp(P) == all(is_sjsharp(f) for f in fs)


PRODUCT = Check(
    "CHK-product",
    "R1 × R2 is strongly J#-clean iff both factors are",
    (Claim("product iff factors", _product_scan, _product_holds),),
)


def _quotient_scan(s: Subject):
    for k, ideal in enumerate(ideals_of(s.ring, "jacobson")):
        if not is_sjsharp(quotient_ring(s.ring, ideal).ring):
            return {"ideal": k}
    return None


def _quotient_holds(s: Subject, ideal: int) -> bool:
    return is_sjsharp(quotient_ring(s.ring, ideals_of(s.ring, "jacobson")[ideal]).ring)


QUOTIENT = Check(
    "CHK-quotient",
    "R/I is strongly J#-clean for every ideal I ⊆ J(R) of a strongly J#-clean R",
    (Claim("quotients by ideals in J(R)", _quotient_scan, _quotient_holds),),
    applies=require_sjsharp,
    note=lambda s: f"{len(ideals_of(s.ring, 'jacobson'))} ideal(s) inside J(R) examined",
)


# ── units ───────────────────────────────────────────────────────


def _foreign_idempotent_units(s: Subject) -> np.ndarray:
    """Units with a strongly J#-clean decomposition whose idempotent is not 1."""
    R = s.ring
    st = structure(R)
    out = np.zeros(R.order, dtype=bool)
    for e in idempotent_indices(R):
        if e == R.one:
            continue
        j = R.sub(R.elements, e)
        out |= st.units & st.j_sharp[j] & (R.mul[e, j] == R.mul[j, e])
    return out


UNIT_DECOMP = Check(
    "CHK-unit-decomp",
    "a unit u is strongly J#-clean iff 1 - u ∈ J#(R), and then e = 1",
    (
        element_claim(
            "unit decomposes iff 1 - u in J#",
            lambda s: set_mask(s.ring, "units")
            & (sjsharp_mask(s.ring) != set_mask(s.ring, "j_sharp")[s.ring.one_minus]),
            lambda s, u: not set_mask(s.ring, "units")[u]
            or is_sjsharp_element(s.ring, u) == in_jsharp(s.ring, int(s.ring.one_minus[u])),
        ),
        element_claim(
            "idempotent of a unit is 1",
            _foreign_idempotent_units,
            lambda s, u: not set_mask(s.ring, "units")[u]
            or all(d.idempotent == s.ring.one for d in decompositions(s.ring, u, K.STRONGLY_JSHARP_CLEAN)),
        ),
    ),
)

U_EQ_1_PLUS_JSHARP = Check(
    "CHK-U-eq-1-plus-Jsharp",
    "U(R) = 1 + J#(R) in a strongly J#-clean ring",
    (
        element_claim(
            "U = 1 + J#",
            lambda s: set_mask(s.ring, "units") != one_plus(s.ring, set_mask(s.ring, "j_sharp")),
            lambda s, x: bool(set_mask(s.ring, "units")[x]) == in_jsharp(s.ring, int(s.ring.sub(x, s.ring.one))),
        ),
    ),
    applies=require_sjsharp,
)


def _two_in_j_note(s: Subject) -> str:
    R = s.ring
    if set_mask(R, "jacobson")[R.two] or is_sjsharp(R):
        return ""
    return f"contrapositive: 2 ∉ J({R.label}), so {R.label} is not strongly J#-clean"


TWO_IN_J = Check(
    "CHK-two-in-J",
    "2 ∈ J(R) in a strongly J#-clean ring",
    (ring_claim("2 in J(R)", lambda s: bool(set_mask(s.ring, "jacobson")[s.ring.two])),),
    applies=require_sjsharp,
    note=_two_in_j_note,
)


# ── corners eRe ─────────────────────────────────────────────────


def _corner_position(C, element: int) -> int | None:
    pos = int(np.searchsorted(C.embedding, element))
    if pos < len(C.embedding) and C.embedding[pos] == element:
        return pos
    return None


def _sandwiches(R: FiniteRing, e: int, members: np.ndarray) -> np.ndarray:
    return R.mul[R.mul[e, members], e]


def _corner_trace_scan(s: Subject):
    R = s.ring
    js = set_mask(R, "j_sharp")
    for e in idempotent_indices(R):
        C = corner_of(R, e)
        bad = first(set_mask(C.ring, "j_sharp") != js[C.embedding])
        if bad is not None:
            return {"idempotent": int(e), "element": int(C.embedding[bad])}
    return None


def _corner_trace_holds(s: Subject, idempotent: int, element: int) -> bool:
    C = corner_of(s.ring, idempotent)
    pos = _corner_position(C, element)
    return pos is None or in_jsharp(C.ring, pos) == in_jsharp(s.ring, element)


def _trace_in_sandwich_scan(s: Subject):
    R = s.ring
    js = set_mask(R, "j_sharp")
    js_idx = np.flatnonzero(js)
    for e in idempotent_indices(R):
        emb = corner_of(R, e).embedding
        sandwich = np.zeros(R.order, dtype=bool)
        sandwich[_sandwiches(R, e, js_idx)] = True
        bad = first(js[emb] & ~sandwich[emb])
        if bad is not None:
            return {"idempotent": int(e), "element": int(emb[bad])}
    return None


def _trace_in_sandwich_holds(s: Subject, idempotent: int, element: int) -> bool:
    R = s.ring
    if _corner_position(corner_of(R, idempotent), element) is None or not in_jsharp(R, element):
        return True
    js_idx = np.flatnonzero(set_mask(R, "j_sharp"))
    return bool((_sandwiches(R, idempotent, js_idx) == element).any())


def _central_sandwich_scan(s: Subject):
    R = s.ring
    js = set_mask(R, "j_sharp")
    js_idx = np.flatnonzero(js)
    for e in np.flatnonzero(structure(R).idempotents & center_mask(R)):
        bad = first(~js[_sandwiches(R, e, js_idx)])
        if bad is not None:
            return {"idempotent": int(e), "element": int(js_idx[bad])}
    return None


def _central_sandwich_holds(s: Subject, idempotent: int, element: int) -> bool:
    R = s.ring
    if not center_mask(R)[idempotent] or not in_jsharp(R, element):
        return True
    return in_jsharp(R, int(R.mul[R.mul[idempotent, element], idempotent]))


def _corner_jsharp_note(s: Subject) -> str:
    R = s.ring
    js = set_mask(R, "j_sharp")
    js_idx = np.flatnonzero(js)
    loose = [
        int(e) for e in np.flatnonzero(structure(R).idempotents & ~center_mask(R))
        if (~js[_sandwiches(R, e, js_idx)]).any()
    ]
    if not loose:
        return ""
    return (
        f"eJ#(R)e ⊄ J#(R) for {len(loose)} non-central idempotent(s), e.g. e = {R.render(loose[0])}; "
        "there only eRe ∩ J#(R) ⊆ eJ#(R)e holds"
    )


CORNER_JSHARP = Check(
    "CHK-corner-Jsharp",
    "J#(eRe) = eRe ∩ J#(R) ⊆ eJ#(R)e, with equality for central e",
    (
        Claim("J#(eRe) = eRe ∩ J#(R)", _corner_trace_scan, _corner_trace_holds),
        Claim("eRe ∩ J#(R) ⊆ eJ#(R)e", _trace_in_sandwich_scan, _trace_in_sandwich_holds),
        Claim("eJ#(R)e ⊆ J#(R) for central e", _central_sandwich_scan, _central_sandwich_holds),
    ),
    note=_corner_jsharp_note,
)


def _annihilator_scan(side: str):
    def scan(s: Subject):
        R = s.ring
        st = structure(R)
        x = R.elements
        for e in idempotent_indices(R):
            j = R.sub(x, e)
            clean = np.flatnonzero(st.j_sharp[j] & (R.mul[e, j] == R.mul[j, e]))
            if not clean.size:
                continue
            f = R.one_minus[e]
            if side == "left":
                kills = R.mul[:, clean] == R.zero                # [x, k]: x·a_k = 0
                inside = R.mul[:, f] == x                         # x ∈ R(1-e)
            else:
                kills = (R.mul[clean, :] == R.zero).T             # [x, k]: a_k·x = 0
                inside = R.mul[f, :] == x                         # x ∈ (1-e)R
            hit = first_pair(kills & ~inside[:, None])
            if hit is not None:
                return {"element": int(clean[hit[1]]), "idempotent": int(e), "x": hit[0]}
        return None

    return scan


def _annihilator_holds(side: str):
    def holds(s: Subject, element: int, idempotent: int, x: int) -> bool:
        R = s.ring
        e, a = idempotent, element
        j = int(R.sub(a, e))
        if R.mul[e, e] != e or R.mul[e, j] != R.mul[j, e] or not in_jsharp(R, j):
            return True
        f = int(R.one_minus[e])
        if side == "left":
            return R.mul[x, a] != R.zero or R.mul[x, f] == x
        return R.mul[a, x] != R.zero or R.mul[f, x] == x

    return holds


ANNIHILATOR = Check(
    "CHK-annihilator",
    "for a = e + j strongly J#-clean, ℓ(a) ⊆ R(1 - e) and r(a) ⊆ (1 - e)R",
    (
        Claim("left annihilator", _annihilator_scan("left"), _annihilator_holds("left")),
        Claim("right annihilator", _annihilator_scan("right"), _annihilator_holds("right")),
    ),
)


def _corner_element_scan(s: Subject):
    R = s.ring
    sj = sjsharp_mask(R)
    for e in idempotent_indices(R):
        C = corner_of(R, e)
        bad = first(sjsharp_mask(C.ring) != sj[C.embedding])
        if bad is not None:
            return {"idempotent": int(e), "element": int(C.embedding[bad])}
    return None


def _corner_element_holds(s: Subject, idempotent: int, element: int) -> bool:
    C = corner_of(s.ring, idempotent)
    pos = _corner_position(C, element)
    return pos is None or is_sjsharp_element(C.ring, pos) == is_sjsharp_element(s.ring, element)


CORNER_ELEMENT = Check(
    "CHK-corner-element",
    "a ∈ eRe is strongly J#-clean in R iff it is in eRe",
    (Claim("strongly J#-clean in R iff in eRe", _corner_element_scan, _corner_element_holds),),
)


def _corner_ring_scan(s: Subject):
    for e in idempotent_indices(s.ring):
        if not is_sjsharp(corner_of(s.ring, e).ring):
            return {"idempotent": int(e)}
    return None


CORNER_RING = Check(
    "CHK-corner-ring",
    "every corner eRe of a strongly J#-clean ring is strongly J#-clean",
    (
        Claim(
            "corners are strongly J#-clean",
            _corner_ring_scan,
            lambda s, idempotent: is_sjsharp(corner_of(s.ring, idempotent).ring),
        ),
    ),
    applies=require_sjsharp,
)


def _corner_commuting_scan(s: Subject):
    R = s.ring
    st = structure(R)
    js_idx = np.flatnonzero(st.j_sharp)
    for e in idempotent_indices(R):
        C = corner_of(R, e)
        js_c = js_idx[st.commuting[e, js_idx]]
        pos = np.searchsorted(C.embedding, R.mul[e, js_c])
        bad = first(~set_mask(C.ring, "j_sharp")[pos])
        if bad is not None:
            return {"idempotent": int(e), "element": int(js_c[bad])}
    return None


def _corner_commuting_holds(s: Subject, idempotent: int, element: int) -> bool:
    R = s.ring
    e, j = idempotent, element
    if R.mul[e, j] != R.mul[j, e] or not in_jsharp(R, j):
        return True
    C = corner_of(R, e)
    return in_jsharp(C.ring, _corner_position(C, int(R.mul[e, j])))


CORNER_COMMUTING = Check(
    "CHK-corner-commuting",
    "e ∈ Id(R), j ∈ J#(R) and ej = je give ej ∈ J#(eRe)",
    (Claim("ej in J#(eRe)", _corner_commuting_scan, _corner_commuting_holds),),
)


# ── 2×2 matrices ────────────────────────────────────────────────


@lru_cache(maxsize=2)
def _matrix_double(R: FiniteRing) -> FiniteRing:
    return matrix_ring(R, 2)


def _displayed_units(R: FiniteRing) -> tuple[FiniteRing, int, int]:
    """M2(R) with (1, -1; -1, 0) and (0, 1; 1, 1)."""
    M = _matrix_double(R)
    minus_one = int(R.neg[R.one])
    u = M.codec.compose({(0, 0): R.one, (0, 1): minus_one, (1, 0): minus_one})
    v = M.codec.compose({(0, 1): R.one, (1, 0): R.one, (1, 1): R.one})
    return M, u, v


def _matrix_fits(s: Subject) -> str | None:
    cap = resolve_cap(None)
    if s.ring.order ** 4 > cap:
        return f"M2({s.label}) has order {s.ring.order ** 4} > cap {cap}"
    return None


def _units_sum_to_idempotent(R: FiniteRing, e: int) -> bool:
    C = corner_of(R, e).ring
    u = np.flatnonzero(set_mask(C, "units"))
    return bool((C.add[np.ix_(u, u)] == C.one).any())


def _idempotent_sum_scan(s: Subject):
    R = s.ring
    if not is_sjsharp(R):
        return None
    for e in idempotent_indices(R):
        if e != R.zero and _units_sum_to_idempotent(R, e):
            return {"idempotent": int(e)}
    return None


def _unit_pair(s: Subject) -> bool:
    M, u, v = _displayed_units(s.ring)
    units = set_mask(M, "units")
    return bool(units[u] and units[v])


MATRIX_NEGATIVE = Check(
    "CHK-matrix-negative",
    "M2(R) is never strongly J#-clean: (1, -1; -1, 0) + (0, 1; 1, 1) = I with both units",
    (
        ring_claim("displayed matrices are units", _unit_pair),
        ring_claim(
            "displayed matrices sum to the identity",
            lambda s: (lambda M, u, v: int(M.add[u, v]) == M.one)(*_displayed_units(s.ring)),
        ),
        ring_claim(
            "M2(R) is not strongly J#-clean",
            lambda s: (lambda M, u, v: not is_sjsharp_element(M, u))(*_displayed_units(s.ring)),
        ),
        Claim(
            "nonzero idempotent is no sum of two corner units",
            _idempotent_sum_scan,
            lambda s, idempotent: not is_sjsharp(s.ring) or not _units_sum_to_idempotent(s.ring, idempotent),
        ),
    ),
    applies=all_of(require_nontrivial, _matrix_fits),
)


# ── element-level characterizations ─────────────────────────────


DEDEKIND = Check(
    "CHK-dedekind",
    "ab = 1 implies ba = 1",
    (
        pair_claim(
            "one-sided inverses are two-sided",
            lambda s: (s.ring.mul == s.ring.one) & (s.ring.mul.T != s.ring.one),
            lambda s, a, b: s.ring.mul[a, b] != s.ring.one or s.ring.mul[b, a] == s.ring.one,
        ),
    ),
    note=lambda s: "finite rings are Dedekind-finite; expected to hold for every subject",
)


def _x_characterization_holds(s: Subject, element: int) -> bool:
    found = is_strongly_jsharp_clean_via_x(s.ring, element) is not None
    return found == is_sjsharp_element(s.ring, element)


X_CHARACTERIZATION = Check(
    "CHK-x-characterization",
    "a is strongly J#-clean iff some x has x²a = x, ax = xa and a - ax ∈ J#(R)",
    (
        element_claim(
            "x witness iff decomposition",
            lambda s: x_witness_mask(s.ring).any(axis=1) != sjsharp_mask(s.ring),
            _x_characterization_holds,
        ),
    ),
)


def _reverse_claim(name: str, mask_of, scalar) -> Claim:
    """∀a,b: P(ab) ⟹ P(ba) for a property given as mask and scalar test."""
    def violations(s: Subject) -> np.ndarray:
        m = mask_of(s.ring)
        return m[s.ring.mul] & ~m[s.ring.mul.T]

    def holds(s: Subject, a: int, b: int) -> bool:
        R = s.ring
        return not scalar(R, int(R.mul[a, b])) or scalar(R, int(R.mul[b, a]))

    return pair_claim(name, violations, holds)


REVERSE = Check(
    "CHK-reverse",
    "ab strongly J#-clean implies ba strongly J#-clean; likewise for 1 - ab and for ab ∈ J#",
    (
        _reverse_claim("ab to ba", sjsharp_mask, is_sjsharp_element),
        _reverse_claim(
            "1 - ab to 1 - ba",
            lambda R: sjsharp_mask(R)[R.one_minus],
            lambda R, z: is_sjsharp_element(R, int(R.one_minus[z])),
        ),
        _reverse_claim("J# membership", lambda R: set_mask(R, "j_sharp"), in_jsharp),
    ),
)


def _complement_counts_holds(s: Subject, element: int) -> bool:
    R = s.ring
    here = decompositions(R, element, K.STRONGLY_JSHARP_CLEAN)
    there = decompositions(R, int(R.one_minus[element]), K.STRONGLY_JSHARP_CLEAN)
    return len(here) == len(there)


def _complement_map_violations(s: Subject) -> np.ndarray:
    """[a, e]: a = e + j is strongly J#-clean but (1 - e, -j) does not decompose 1 - a."""
    R = s.ring
    st = structure(R)
    x = R.elements
    out = np.zeros((R.order, R.order), dtype=bool)
    for e in idempotent_indices(R):
        j = R.sub(x, e)
        clean = st.j_sharp[j] & (R.mul[e, j] == R.mul[j, e])
        f = R.one_minus[e]
        mj = R.neg[j]
        image = (
            st.idempotents[f]
            & st.j_sharp[mj]
            & (R.mul[f, mj] == R.mul[mj, f])
            & (R.add[f, mj] == R.one_minus[x])
        )
        out[:, e] = clean & ~image
    return out


def _complement_map_holds(s: Subject, element: int, idempotent: int) -> bool:
    R = s.ring
    a, e = element, idempotent
    j = int(R.sub(a, e))
    if R.mul[e, e] != e or not in_jsharp(R, j) or R.mul[e, j] != R.mul[j, e]:
        return True
    f, mj = int(R.one_minus[e]), int(R.neg[j])
    return (
        R.mul[f, f] == f
        and in_jsharp(R, mj)
        and R.mul[f, mj] == R.mul[mj, f]
        and R.add[f, mj] == R.one_minus[a]
    )


COMPLEMENT = Check(
    "CHK-complement",
    "J#(R) is strongly J#-clean, and a is strongly J#-clean iff 1 - a is (via (e, j) ↦ (1 - e, -j))",
    (
        element_claim(
            "J# elements are strongly J#-clean",
            lambda s: set_mask(s.ring, "j_sharp") & ~sjsharp_mask(s.ring),
            lambda s, a: not in_jsharp(s.ring, a) or is_sjsharp_element(s.ring, a),
        ),
        element_claim(
            "a iff 1 - a",
            lambda s: sjsharp_mask(s.ring) != sjsharp_mask(s.ring)[s.ring.one_minus],
            lambda s, a: is_sjsharp_element(s.ring, a) == is_sjsharp_element(s.ring, int(s.ring.one_minus[a])),
        ),
        element_claim(
            "decomposition counts of a and 1 - a agree",
            lambda s: (lambda c: c != c[s.ring.one_minus])(decomposition_counts(s.ring, K.STRONGLY_JSHARP_CLEAN)),
            _complement_counts_holds,
        ),
        pair_claim(
            "(e, j) maps to (1 - e, -j)",
            _complement_map_violations,
            _complement_map_holds,
            roles=("element", "idempotent"),
        ),
    ),
)


# ── ring-level characterizations ────────────────────────────────


def _clean_with_units(s: Subject) -> bool:
    return is_kind(s.ring, K.CLEAN) and _units_one_plus_jsharp(s)


def _jsharp_clean_with_units(s: Subject) -> bool:
    return is_kind(s.ring, K.JSHARP_CLEAN) and _units_one_plus_jsharp(s)


def _jsharp_clean(s: Subject) -> bool:
    return is_kind(s.ring, K.JSHARP_CLEAN)


def _clean_equiv_note(s: Subject) -> str:
    if _jsharp_clean(s) and not _units_one_plus_jsharp(s):
        return "J#-clean with U(R) ≠ 1 + J#(R): J#-cleanness alone does not give U(R) = 1 + J#(R)"
    return ""


CLEAN_EQUIV = Check(
    "CHK-clean-equiv",
    "clean with U = 1 + J# ⟺ J#-clean with U = 1 + J#; these imply J#-clean",
    (
        equivalence("clean with U = 1 + J# iff J#-clean with U = 1 + J#", _clean_with_units, _jsharp_clean_with_units),
        implication("J#-clean with U = 1 + J# implies J#-clean", _jsharp_clean_with_units, _jsharp_clean),
        implication(
            "J#-clean and strongly J#-clean imply clean with U = 1 + J#",
            lambda s: _jsharp_clean(s) and _sj(s),
            _clean_with_units,
        ),
    ),
    note=_clean_equiv_note,
)

STRONGLY_CLEAN = Check(
    "CHK-strongly-clean",
    "a strongly J#-clean ring is strongly clean",
    (ring_claim("strongly clean", lambda s: is_kind(s.ring, K.STRONGLY_CLEAN)),),
    applies=require_sjsharp,
)

IFF_SPLIT = Check(
    "CHK-iff-split",
    "R is strongly J#-clean iff R is strongly clean and U(R) = 1 + J#(R)",
    (
        equivalence(
            "strongly J#-clean iff strongly clean with U = 1 + J#",
            _sj,
            lambda s: is_kind(s.ring, K.STRONGLY_CLEAN) and _units_one_plus_jsharp(s),
        ),
    ),
)

UU_QUOTIENT = Check(
    "CHK-UU-quotient",
    "U(R) = 1 + J#(R) implies R/J(R) is a UU ring",
    (ring_claim("R/J(R) is UU", lambda s: units_equal_one_plus(radical_quotient(s.ring), "nilpotents")),),
    applies=lambda s: None if _units_one_plus_jsharp(s) else "U(R) ≠ 1 + J#(R)",
)

BOOLEAN_QUOTIENT = Check(
    "CHK-boolean-quotient",
    "R/J(R) is Boolean when R is strongly J#-clean",
    (ring_claim("R/J(R) is Boolean", lambda s: is_boolean(radical_quotient(s.ring))),),
    applies=require_sjsharp,
)

J_EQ = Check(
    "CHK-J-eq",
    "strongly J-clean ⟺ strongly J#-clean with J#(R) = J(R)",
    (
        equivalence(
            "strongly J-clean iff strongly J#-clean and J# = J",
            lambda s: is_kind(s.ring, K.STRONGLY_J_CLEAN),
            lambda s: _sj(s) and sets_equal(s.ring, "j_sharp", "jacobson"),
        ),
    ),
)

NIL_EQ = Check(
    "CHK-nil-eq",
    "strongly nil-clean ⟺ strongly J#-clean with J#(R) = Nil(R)",
    (
        equivalence(
            "strongly nil-clean iff strongly J#-clean and J# = Nil",
            lambda s: is_kind(s.ring, K.STRONGLY_NIL_CLEAN),
            lambda s: _sj(s) and sets_equal(s.ring, "j_sharp", "nilpotents"),
        ),
    ),
)

UNIQUE = Check(
    "CHK-unique",
    "abelian J#-clean ⟺ uniquely J#-clean ⟺ uniquely clean",
    (
        equivalence(
            "abelian J#-clean iff uniquely J#-clean",
            lambda s: is_abelian(s.ring) and _jsharp_clean(s),
            lambda s: unique_count(s.ring, K.JSHARP_CLEAN),
        ),
        equivalence(
            "uniquely J#-clean iff uniquely clean",
            lambda s: unique_count(s.ring, K.JSHARP_CLEAN),
            lambda s: unique_count(s.ring, K.CLEAN),
        ),
    ),
)


def _residue_field_z2(s: Subject) -> bool:
    return quotient_order(s.ring) == 2


LOCAL_FAMILY = Check(
    "CHK-local-family",
    "fields: strongly J#-clean iff Z2; local: strongly J#-clean iff R/J(R) ≅ Z2; "
    "J = 0 with strongly J#-clean gives Boolean",
    (
        implication(
            "a field is strongly J#-clean iff it has two elements",
            lambda s: is_field(s.ring),
            lambda s: _sj(s) == (s.ring.order == 2),
        ),
        equivalence(
            "local and strongly J#-clean iff R/J(R) ≅ Z2",
            lambda s: is_local(s.ring) and _sj(s),
            _residue_field_z2,
        ),
        implication(
            "J(R) = 0 and strongly J#-clean imply Boolean",
            lambda s: _sj(s) and int(set_mask(s.ring, "jacobson").sum()) == 1,
            lambda s: is_boolean(s.ring),
        ),
        equivalence(
            "local J#-clean iff J#-clean with trivial idempotents",
            lambda s: is_local(s.ring) and _jsharp_clean(s),
            lambda s: _jsharp_clean(s) and has_trivial_idempotents(s.ring),
        ),
        equivalence(
            "J#-clean with trivial idempotents iff R/J(R) ≅ Z2",
            lambda s: _jsharp_clean(s) and has_trivial_idempotents(s.ring),
            _residue_field_z2,
        ),
    ),
    applies=require_nontrivial,
)

LOCAL_IDEM = Check(
    "CHK-local-idem",
    "for strongly J#-clean R: local ⟺ trivial idempotents ⟺ R = J#(R) ∪ U(R)",
    (
        equivalence("local iff trivial idempotents", lambda s: is_local(s.ring), lambda s: has_trivial_idempotents(s.ring)),
        equivalence(
            "local iff R = J# ∪ U",
            lambda s: is_local(s.ring),
            lambda s: bool((set_mask(s.ring, "j_sharp") | set_mask(s.ring, "units")).all()),
        ),
    ),
    applies=all_of(require_nontrivial, require_sjsharp),
)


CHECKS = (
    PRODUCT,
    QUOTIENT,
    UNIT_DECOMP,
    U_EQ_1_PLUS_JSHARP,
    TWO_IN_J,
    CORNER_JSHARP,
    ANNIHILATOR,
    CORNER_ELEMENT,
    CORNER_RING,
    CORNER_COMMUTING,
    MATRIX_NEGATIVE,
    DEDEKIND,
    X_CHARACTERIZATION,
    REVERSE,
    COMPLEMENT,
    CLEAN_EQUIV,
    STRONGLY_CLEAN,
    IFF_SPLIT,
    UU_QUOTIENT,
    BOOLEAN_QUOTIENT,
    J_EQ,
    NIL_EQ,
    UNIQUE,
    LOCAL_FAMILY,
    LOCAL_IDEM,
)
