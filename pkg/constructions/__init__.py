"""Ring builders and the AST evaluator that dispatches to them."""

from __future__ import annotations

import logging
from typing import Callable

from constructions.base import ConstructionAST, ElementCodec, NodeKind, ensure_index
from constructions.elementary import direct_product, matrix_ring, ring_Zn, upper_triangular_ring
from constructions.generalized_matrix import generalized_matrix_ring
from constructions.group_ring import augmentation, augmentation_ideal, augmentation_map, group_ring
from constructions.groups import BUILTIN_GROUPS, GroupTable, builtin_group, group_from_cayley
from constructions.ideals import (
    CornerRing,
    IdealSet,
    QuotientRing,
    corner_ring,
    enumerate_ideals,
    ideal_from_mask,
    ideal_generated_by,
    quotient_ring,
)
from finite_ring import FiniteRing

log = logging.getLogger(__name__)


def resolve_group(name: str) -> GroupTable:
    """Builtin group by name, or ``@path`` for a Cayley table file."""
    if name.startswith("@"):
        from table_loader import load_cayley_table

        return load_cayley_table(name[1:])
    return builtin_group(name)


def _build_zn(node: ConstructionAST, cap: int | None) -> FiniteRing:
    return ring_Zn(node.params[0], cap=cap)


def _build_product(node: ConstructionAST, cap: int | None) -> FiniteRing:
    factors = [eval_ast(c, cap=cap) for c in node.children]
    return direct_product(factors, label=node.to_expr(), cap=cap)


def _build_matrix(node: ConstructionAST, cap: int | None) -> FiniteRing:
    return matrix_ring(eval_ast(node.children[0], cap=cap), node.params[0], cap=cap)


def _build_triangular(node: ConstructionAST, cap: int | None) -> FiniteRing:
    return upper_triangular_ring(eval_ast(node.children[0], cap=cap), node.params[0], cap=cap)


def _build_gen_matrix(node: ConstructionAST, cap: int | None) -> FiniteRing:
    return generalized_matrix_ring(eval_ast(node.children[0], cap=cap), node.params[0], cap=cap)


def _build_quotient(node: ConstructionAST, cap: int | None) -> FiniteRing:
    R = eval_ast(node.children[0], cap=cap)
    ideal = ideal_generated_by(R, node.params)
    return quotient_ring(R, ideal, label=node.to_expr()).ring


def _build_corner(node: ConstructionAST, cap: int | None) -> FiniteRing:
    R = eval_ast(node.children[0], cap=cap)
    return corner_ring(R, ensure_index(node.params[0], R.order, "idempotent"), label=node.to_expr()).ring


def _build_group_ring(node: ConstructionAST, cap: int | None) -> FiniteRing:
    return group_ring(eval_ast(node.children[0], cap=cap), resolve_group(node.group), cap=cap)


BUILDERS: dict[NodeKind, Callable[[ConstructionAST, int | None], FiniteRing]] = {
    NodeKind.ZN: _build_zn,
    NodeKind.PRODUCT: _build_product,
    NodeKind.MATRIX: _build_matrix,
    NodeKind.TRIANGULAR: _build_triangular,
    NodeKind.GEN_MATRIX: _build_gen_matrix,
    NodeKind.QUOTIENT: _build_quotient,
    NodeKind.CORNER: _build_corner,
    NodeKind.GROUP_RING: _build_group_ring,
}


def eval_ast(ast: ConstructionAST, *, cap: int | None = None) -> FiniteRing:
    """Build the ring an AST describes; identical ASTs give identical tables."""
    log.debug("eval_ast: %s", ast.to_expr())
    return BUILDERS[ast.kind](ast, cap)


__all__ = [
    "BUILDERS",
    "BUILTIN_GROUPS",
    "ConstructionAST",
    "CornerRing",
    "ElementCodec",
    "GroupTable",
    "IdealSet",
    "NodeKind",
    "QuotientRing",
    "augmentation",
    "augmentation_ideal",
    "augmentation_map",
    "builtin_group",
    "corner_ring",
    "direct_product",
    "enumerate_ideals",
    "eval_ast",
    "generalized_matrix_ring",
    "group_from_cayley",
    "group_ring",
    "ideal_from_mask",
    "ideal_generated_by",
    "matrix_ring",
    "quotient_ring",
    "resolve_group",
    "ring_Zn",
    "upper_triangular_ring",
]
