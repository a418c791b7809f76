"""ΔN(R) and QN(R) variants of cleanness, and their coincidence with
strong J-cleanness."""

from __future__ import annotations

from catalog import Subject
from checks.base import (
    Check,
    Claim,
    equivalence,
    ideals_of,
    is_kind,
    ring_claim,
    unique_count,
)
from classifiers import DecompositionKind as K, is_abelian, units_equal_one_plus
from constructions import quotient_ring


def _kind(kind: K):
    return lambda s: is_kind(s.ring, kind)


def _abelian_and(kind: K):
    return lambda s: is_abelian(s.ring) and is_kind(s.ring, kind)


def _uniquely_clean(s: Subject) -> bool:
    return unique_count(s.ring, K.CLEAN)


DELTANU = Check(
    "CHK-deltanu",
    "a strongly ΔN-clean ring is ΔNU and strongly clean",
    (
        ring_claim("U = 1 + ΔN", lambda s: units_equal_one_plus(s.ring, "delta_nilpotents")),
        ring_claim("strongly clean", _kind(K.STRONGLY_CLEAN)),
    ),
    applies=lambda s: None if is_kind(s.ring, K.STRONGLY_DELTAN_CLEAN) else "not strongly ΔN-clean",
)

MAIN_EQUIV = Check(
    "CHK-main-equiv",
    "strongly J-clean ⟺ strongly QN-clean ⟺ strongly ΔN-clean",
    (
        equivalence("strongly J-clean iff strongly QN-clean", _kind(K.STRONGLY_J_CLEAN), _kind(K.STRONGLY_QN_CLEAN)),
        equivalence(
            "strongly QN-clean iff strongly ΔN-clean", _kind(K.STRONGLY_QN_CLEAN), _kind(K.STRONGLY_DELTAN_CLEAN)
        ),
    ),
)

COR8 = Check(
    "CHK-cor8",
    "uniquely clean ⟺ abelian ΔN-clean",
    (equivalence("uniquely clean iff abelian ΔN-clean", _uniquely_clean, _abelian_and(K.DELTAN_CLEAN)),),
)

QN_SPLIT = Check(
    "CHK-qn-split",
    "strongly QN-clean ⟺ strongly clean with U(R) = 1 + QN(R)",
    (
        equivalence(
            "strongly QN-clean iff strongly clean and UQ",
            _kind(K.STRONGLY_QN_CLEAN),
            lambda s: is_kind(s.ring, K.STRONGLY_CLEAN) and units_equal_one_plus(s.ring, "quasi_nilpotents"),
        ),
    ),
)


def _quotient_flags(s: Subject) -> list[bool]:
    return [unique_count(quotient_ring(s.ring, I).ring, K.CLEAN) for I in ideals_of(s.ring)]


def _images_scan(s: Subject):
    flags = _quotient_flags(s)
    if _uniquely_clean(s) == all(flags):
        return None
    return {"ideal": flags.index(False) if False in flags else -1}


def _images_holds(s: Subject, ideal: int) -> bool:
    return _uniquely_clean(s) == all(_quotient_flags(s))


SIX_EQUIV = Check(
    "CHK-six-equiv",
    "abelian J-clean ⟺ abelian J#-clean ⟺ abelian QN-clean ⟺ abelian ΔN-clean "
    "⟺ uniquely clean ⟺ every homomorphic image is uniquely clean",
    (
        equivalence("abelian J-clean iff uniquely clean", _abelian_and(K.J_CLEAN), _uniquely_clean),
        equivalence("abelian J#-clean iff uniquely clean", _abelian_and(K.JSHARP_CLEAN), _uniquely_clean),
        equivalence("abelian QN-clean iff uniquely clean", _abelian_and(K.QN_CLEAN), _uniquely_clean),
        equivalence("abelian ΔN-clean iff uniquely clean", _abelian_and(K.DELTAN_CLEAN), _uniquely_clean),
        Claim("uniquely clean iff every quotient is", _images_scan, _images_holds),
    ),
    note=lambda s: f"{len(ideals_of(s.ring))} ideal(s) examined for homomorphic images",
)

THEOREM_J = Check(
    "CHK-theorem-j",
    "strongly J-clean ⟺ strongly J#-clean",
    (
        equivalence(
            "strongly J-clean iff strongly J#-clean",
            _kind(K.STRONGLY_J_CLEAN),
            _kind(K.STRONGLY_JSHARP_CLEAN),
        ),
    ),
)


CHECKS = (DELTANU, MAIN_EQUIV, COR8, QN_SPLIT, SIX_EQUIV, THEOREM_J)
