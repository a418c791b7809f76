"""Registry of every check, keyed by id, in report order."""

from __future__ import annotations

from checks import delta_nil, generalized_matrix, group_rings, jsharp, structure
from checks.base import Check, Claim
from errors import UnknownCheck

REGISTRY: dict[str, Check] = {
    check.check_id: check
    for module in (structure, jsharp, group_rings, generalized_matrix, delta_nil)
    for check in module.CHECKS
}


def get_check(check_id: str) -> Check:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(check_id, REGISTRY) from None


__all__ = ["REGISTRY", "Check", "Claim", "get_check"]
