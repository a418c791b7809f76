"""Checks on the structural sets themselves: axioms, the radical oracle,
the inclusion chain and the closure properties of J#."""

from __future__ import annotations

import math

import numpy as np

from catalog import Subject
from checks.base import (
    Check,
    Claim,
    element_claim,
    first,
    in_jsharp,
    pair_claim,
    set_mask,
)
from constructions import direct_product, ring_Zn
from errors import AxiomViolation
from finite_ring import _validate_axioms, check_triple
from structure_sets import structure

PRODUCT_CHECK_LIMIT = 256


# ── ring axioms ─────────────────────────────────────────────────


def _axiom_scan(s: Subject):
    R = s.ring
    try:
        _validate_axioms(R.add, R.mul, R.zero, R.one)
    except AxiomViolation as exc:
        return {"law": exc.kind, "triple": list(exc.witness)}
    return None


def _axiom_holds(s: Subject, law: str, triple: list[int]) -> bool:
    if len(triple) == 3:
        return law not in check_triple(s.ring, *triple)
    return _axiom_scan(s) is None


AXIOMS = Check(
    "CHK-axioms",
    "the addition and multiplication tables satisfy the unital ring axioms",
    (Claim("ring axioms", _axiom_scan, _axiom_holds),),
)


# ── radical oracle and inclusion chain ──────────────────────────


def _oracle_holds(s: Subject, element: int) -> bool:
    R = s.ring
    units = structure(R).units
    one_sided = bool(units[R.one_minus[R.mul[:, element]]].all())
    ra = R.mul[:, element]
    two_sided = bool(units[R.one_minus[R.mul[ra]]].all())
    return one_sided == two_sided


RADICAL_ORACLE = Check(
    "CHK-radical-oracle",
    "{a : 1 - ra ∈ U for all r} equals {a : 1 - ras ∈ U for all r, s}",
    (
        element_claim(
            "one-sided and two-sided radical agree",
            lambda s: structure(s.ring).jacobson != structure(s.ring).jacobson_two_sided,
            _oracle_holds,
        ),
    ),
)


def _inclusion(small: str, big: str) -> Claim:
    return element_claim(
        f"{small} ⊆ {big}",
        lambda s: set_mask(s.ring, small) & ~set_mask(s.ring, big),
        lambda s, x: (not set_mask(s.ring, small)[x]) or bool(set_mask(s.ring, big)[x]),
    )


CHAIN = Check(
    "CHK-chain",
    "J ⊆ QN ⊆ ΔN, Nil ⊆ QN, J ⊆ J#, Nil ⊆ J#, and U ∩ J# = ∅ in nontrivial rings",
    (
        _inclusion("jacobson", "quasi_nilpotents"),
        _inclusion("quasi_nilpotents", "delta_nilpotents"),
        _inclusion("nilpotents", "quasi_nilpotents"),
        _inclusion("jacobson", "j_sharp"),
        _inclusion("nilpotents", "j_sharp"),
        element_claim(
            "units avoid J#",
            lambda s: set_mask(s.ring, "units") & set_mask(s.ring, "j_sharp") & (not s.ring.is_trivial),
            lambda s, x: s.ring.is_trivial
            or not (set_mask(s.ring, "units")[x] and set_mask(s.ring, "j_sharp")[x]),
        ),
    ),
)


# ── closure properties of J# ────────────────────────────────────


def _closeprod1_violations(s: Subject) -> np.ndarray:
    R = s.ring
    js = set_mask(R, "j_sharp")
    jac = np.flatnonzero(set_mask(R, "jacobson"))
    out = np.zeros((R.order, R.order), dtype=bool)
    a = np.flatnonzero(js)
    out[np.ix_(a, jac)] = ~js[R.add[np.ix_(a, jac)]]
    return out


CLOSEPROD_1 = Check(
    "CHK-closeprod-1",
    "a ∈ J#(R) and b ∈ J(R) give a + b ∈ J#(R)",
    (
        pair_claim(
            "J# + J ⊆ J#",
            _closeprod1_violations,
            lambda s, a, b: not (in_jsharp(s.ring, a) and set_mask(s.ring, "jacobson")[b])
            or in_jsharp(s.ring, int(s.ring.add[a, b])),
        ),
    ),
)

CLOSEPROD_2 = Check(
    "CHK-closeprod-2",
    "a ∈ J#(R) if and only if -a ∈ J#(R)",
    (
        element_claim(
            "J# = -J#",
            lambda s: set_mask(s.ring, "j_sharp") != set_mask(s.ring, "j_sharp")[s.ring.neg],
            lambda s, a: in_jsharp(s.ring, a) == in_jsharp(s.ring, int(s.ring.neg[a])),
        ),
    ),
)


def product_factor_sets(s: Subject) -> list[tuple]:
    """Factor lists to test product statements on."""
    sets: list[tuple] = []
    if s.factors:
        sets.append(tuple(s.factors))
    for extra in ((2,), (3,), (2, 2)):
        if s.ring.order * math.prod(extra) <= PRODUCT_CHECK_LIMIT:
            sets.append((s.ring, *(ring_Zn(m) for m in extra)))
    return sets


def product_of(s: Subject, k: int):
    factors = product_factor_sets(s)[k]
    return factors, direct_product(factors)


def _componentwise_jsharp(factors, P) -> np.ndarray:
    coords = np.unravel_index(np.arange(P.order), tuple(f.order for f in factors))
    expected = np.ones(P.order, dtype=bool)
    for f, c in zip(factors, coords):
        expected &= set_mask(f, "j_sharp")[c]
    return expected


def _closeprod3_scan(s: Subject):
    for k in range(len(product_factor_sets(s))):
        factors, P = product_of(s, k)
        bad = first(_componentwise_jsharp(factors, P) != set_mask(P, "j_sharp"))
        if bad is not None:
            return {"factors": k, "element": bad}
    return None


def _closeprod3_holds(s: Subject, factors: int, element: int) -> bool:
    fs, P = product_of(s, factors)
    comps = P.codec.components(element)
    return in_jsharp(P, element) == all(in_jsharp(f, c) for f, c in zip(fs, comps))


CLOSEPROD_3 = Check(
    "CHK-closeprod-3",
    "J#(R1 × R2) = J#(R1) × J#(R2) under the product codec",
    (Claim("J# of a product is componentwise", _closeprod3_scan, _closeprod3_holds),),
)


def _closeprod4_scan(s: Subject):
    R = s.ring
    st = structure(R)
    js = np.flatnonzero(st.j_sharp)
    for u in np.flatnonzero(st.units):
        conj = R.mul[R.mul[u, js], st.inverse[u]]
        bad = first(~st.j_sharp[conj])
        if bad is not None:
            return {"element": int(js[bad]), "unit": int(u)}
    return None


def _closeprod4_holds(s: Subject, element: int, unit: int) -> bool:
    R = s.ring
    inv = int(structure(R).inverse[unit])
    if inv < 0 or not in_jsharp(R, element):
        return True
    return in_jsharp(R, int(R.mul[R.mul[unit, element], inv]))


CLOSEPROD_4 = Check(
    "CHK-closeprod-4",
    "u a u⁻¹ ∈ J#(R) for every a ∈ J#(R) and unit u",
    (Claim("J# is closed under conjugation", _closeprod4_scan, _closeprod4_holds),),
)


CHECKS = (AXIOMS, RADICAL_ORACLE, CHAIN, CLOSEPROD_1, CLOSEPROD_2, CLOSEPROD_3, CLOSEPROD_4)

__all__ = ["CHECKS", "PRODUCT_CHECK_LIMIT", "product_factor_sets", "product_of"]
