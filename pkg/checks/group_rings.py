"""Group rings RG: when they are strongly J#-clean, and the augmentation map."""

from __future__ import annotations

import numpy as np

from catalog import Subject
from checks.base import (
    Check,
    Claim,
    all_of,
    element_claim,
    equivalence,
    implication,
    is_sjsharp,
    pair_claim,
    radical_quotient,
    ring_claim,
    set_mask,
)
from classifiers import is_abelian, is_boolean
from constructions import augmentation_ideal, augmentation_map


def require_group_ring(s: Subject) -> str | None:
    return None if s.is_group_ring else "not a group ring"


def _require_base_and_2group(s: Subject) -> str | None:
    if not is_sjsharp(s.base):
        return f"{s.base.label} is not strongly J#-clean"
    if not s.group.is_2_group:
        return f"{s.group.label} is not a 2-group"
    return None


def _augmentation_mask(s: Subject) -> np.ndarray:
    return augmentation_ideal(s.ring).mask


def _pulled_back_radical(s: Subject) -> np.ndarray:
    return set_mask(s.base, "jacobson")[augmentation_map(s.ring)]


GROUP_LEMMA = Check(
    "CHK-grouplemma",
    "for strongly J#-clean R and a 2-group G: Δ(RG) ⊆ J(RG), RG/J(RG) is Boolean, "
    "J(RG) = {x : ε(x) ∈ J(R)}",
    (
        element_claim(
            "Δ(RG) ⊆ J(RG)",
            lambda s: _augmentation_mask(s) & ~set_mask(s.ring, "jacobson"),
            lambda s, x: not _augmentation_mask(s)[x] or bool(set_mask(s.ring, "jacobson")[x]),
        ),
        ring_claim("RG/J(RG) is Boolean", lambda s: is_boolean(radical_quotient(s.ring))),
        element_claim(
            "J(RG) is the preimage of J(R)",
            lambda s: set_mask(s.ring, "jacobson") != _pulled_back_radical(s),
            lambda s, x: bool(set_mask(s.ring, "jacobson")[x]) == bool(_pulled_back_radical(s)[x]),
        ),
    ),
    applies=all_of(require_group_ring, _require_base_and_2group),
)

GROUPRING_NECESSITY = Check(
    "CHK-groupring-necessity",
    "RG strongly J#-clean implies R strongly J#-clean and G a 2-group",
    (
        implication(
            "RG strongly J#-clean gives R strongly J#-clean and G a 2-group",
            lambda s: is_sjsharp(s.ring),
            lambda s: is_sjsharp(s.base) and s.group.is_2_group,
        ),
    ),
    applies=require_group_ring,
)

GROUPRING_ABELIAN = Check(
    "CHK-groupring-abelian",
    "for abelian R: RG strongly J#-clean ⟺ R strongly J#-clean and G a 2-group",
    (
        equivalence(
            "RG iff R and 2-group",
            lambda s: is_sjsharp(s.ring),
            lambda s: is_sjsharp(s.base) and s.group.is_2_group,
        ),
    ),
    applies=all_of(
        require_group_ring,
        lambda s: None if is_abelian(s.base) else f"{s.base.label} is not abelian",
    ),
)

ODD_GROUP = Check(
    "CHK-odd-group",
    "RG is not strongly J#-clean for a nontrivial group G of odd order",
    (ring_claim("RG is not strongly J#-clean", lambda s: not is_sjsharp(s.ring)),),
    applies=all_of(
        require_group_ring,
        lambda s: None if s.group.order > 1 and s.group.order % 2 else f"{s.group.label} is not a nontrivial odd group",
    ),
)


def _homomorphism_claim(name: str, table: str) -> Claim:
    def violations(s: Subject) -> np.ndarray:
        eps = augmentation_map(s.ring)
        image = eps[getattr(s.ring, table)]
        return image != getattr(s.base, table)[eps[:, None], eps[None, :]]

    def holds(s: Subject, a: int, b: int) -> bool:
        eps = augmentation_map(s.ring)
        return eps[getattr(s.ring, table)[a, b]] == getattr(s.base, table)[eps[a], eps[b]]

    return pair_claim(name, violations, holds)


AUGMENTATION = Check(
    "CHK-augmentation",
    "ε : RG → R is a unital ring homomorphism onto R whose kernel Δ(RG) is an ideal",
    (
        _homomorphism_claim("ε respects addition", "add"),
        _homomorphism_claim("ε respects multiplication", "mul"),
        ring_claim("ε(1) = 1", lambda s: int(augmentation_map(s.ring)[s.ring.one]) == s.base.one),
        ring_claim(
            "ε is onto",
            lambda s: np.unique(augmentation_map(s.ring)).size == s.base.order,
        ),
        ring_claim(
            "|Δ(RG)| = |RG| / |R|",
            lambda s: augmentation_ideal(s.ring).size * s.base.order == s.ring.order,
        ),
    ),
    applies=require_group_ring,
)


CHECKS = (GROUP_LEMMA, GROUPRING_NECESSITY, GROUPRING_ABELIAN, ODD_GROUP, AUGMENTATION)
