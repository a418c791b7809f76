"""Verification subjects: rings built from DSL expressions, with the parts
(base ring, group, multiplier, factors) the checks need."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from constructions import GroupTable, NodeKind, eval_ast, resolve_group
from constructions.base import ConstructionAST
from dsl import DslSource, parse_ring_expr, read_catalog
from errors import EmptyCatalog
from finite_ring import FiniteRing

log = logging.getLogger(__name__)

DEFAULT_CATALOG = Path(__file__).parent / "catalog" / "default.txt"


@dataclass(frozen=True, eq=False)
class Subject:
    expr: str
    ring: FiniteRing
    ast: ConstructionAST | None = None
    base: FiniteRing | None = None          # R of RG or K_s(R)
    group: GroupTable | None = None
    multiplier: int | None = None           # s of K_s(R)
    factors: tuple[FiniteRing, ...] = ()
    build_seconds: float = field(default=0.0, compare=False)

    @property
    def label(self) -> str:
        return self.ring.label

    @property
    def is_group_ring(self) -> bool:
        return self.group is not None

    @property
    def is_generalized_matrix(self) -> bool:
        return self.multiplier is not None


def build_subject(expr: str | DslSource, *, cap: int | None = None) -> Subject:
    text = expr.text if isinstance(expr, DslSource) else expr
    ast = parse_ring_expr(text)
    started = time.perf_counter()
    ring = eval_ast(ast, cap=cap)
    parts: dict = {}
    if ast.kind is NodeKind.GROUP_RING:
        parts["base"] = eval_ast(ast.children[0], cap=cap)
        parts["group"] = resolve_group(ast.group)
    elif ast.kind is NodeKind.GEN_MATRIX:
        parts["base"] = eval_ast(ast.children[0], cap=cap)
        parts["multiplier"] = ast.params[0]
    elif ast.kind is NodeKind.PRODUCT:
        parts["factors"] = tuple(eval_ast(c, cap=cap) for c in ast.children)
    elapsed = time.perf_counter() - started
    log.debug("subject: %s order=%d built in %.3fs", ring.label, ring.order, elapsed)
    return Subject(text.strip(), ring, ast, build_seconds=elapsed, **parts)


def subject_from_ring(ring: FiniteRing) -> Subject:
    """Wrap an already built ring (no DSL source) as a subject."""
    return Subject(ring.label, ring)


def load_catalog(
    path: str | Path | None = None,
    *,
    expressions: Iterable[str] | None = None,
    cap: int | None = None,
) -> list[Subject]:
    if expressions is not None:
        sources = [DslSource(e) for e in expressions]
    else:
        sources = read_catalog(path or DEFAULT_CATALOG)
    if not sources:
        raise EmptyCatalog(f"catalog {path or DEFAULT_CATALOG} has no expressions")
    return [build_subject(src, cap=cap) for src in sources]
