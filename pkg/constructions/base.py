"""Shared pieces of the ring builders: element codecs, the construction AST
and the order cap."""

from __future__ import annotations

import abc
from dataclasses import dataclass
from enum import Enum

from config import get_settings
from errors import ElementOutOfRange, SizeExceeded


class ElementCodec(abc.ABC):
    """Maps element indices of one ring to text and back.

    Subclass this for every construction whose elements have a readable
    form (residues, tuples, matrices, group-ring sums ...).
    """

    @abc.abstractmethod
    def render(self, index: int) -> str:
        ...

    @abc.abstractmethod
    def parse(self, text: str) -> int:
        """Inverse of :meth:`render`; raises ValueError on malformed text."""
        ...


class NodeKind(str, Enum):
    ZN = "Zn"
    PRODUCT = "Product"
    MATRIX = "Matrix"
    TRIANGULAR = "Triangular"
    GEN_MATRIX = "GenMatrix"
    QUOTIENT = "Quotient"
    CORNER = "Corner"
    GROUP_RING = "GroupRing"


# kind -> (number of children or None for "one or more", number of params or None)
_ARITY: dict[NodeKind, tuple[int | None, int | None]] = {
    NodeKind.ZN: (0, 1),
    NodeKind.PRODUCT: (None, 0),
    NodeKind.MATRIX: (1, 1),
    NodeKind.TRIANGULAR: (1, 1),
    NodeKind.GEN_MATRIX: (1, 1),
    NodeKind.QUOTIENT: (1, None),
    NodeKind.CORNER: (1, 1),
    NodeKind.GROUP_RING: (1, 0),
}

# kinds whose parameter is a size (must be >= 1); the rest are element indices
_SIZE_PARAMS = {NodeKind.ZN, NodeKind.MATRIX, NodeKind.TRIANGULAR}


@dataclass(frozen=True)
class ConstructionAST:
    kind: NodeKind
    children: tuple[ConstructionAST, ...] = ()
    params: tuple[int, ...] = ()
    group: str | None = None

    def __post_init__(self) -> None:
        n_children, n_params = _ARITY[self.kind]
        if n_children is None:
            if not self.children:
                raise ValueError(f"{self.kind.value} needs at least one child")
        elif len(self.children) != n_children:
            raise ValueError(f"{self.kind.value} takes {n_children} children, got {len(self.children)}")
        if n_params is not None and len(self.params) != n_params:
            raise ValueError(f"{self.kind.value} takes {n_params} parameters, got {len(self.params)}")
        floor = 1 if self.kind in _SIZE_PARAMS else 0
        if any(p < floor for p in self.params):
            raise ValueError(f"{self.kind.value} parameters must be >= {floor}: {self.params}")
        if (self.kind is NodeKind.GROUP_RING) != (self.group is not None):
            raise ValueError("a group name is required for GroupRing nodes and only there")

    def to_expr(self) -> str:
        """Canonical DSL text for this node; used as the ring label."""
        k = self.kind
        if k is NodeKind.ZN:
            return f"Z{self.params[0]}"
        inner = [c.to_expr() for c in self.children]
        if k is NodeKind.PRODUCT:
            return f"prod({','.join(inner)})"
        if k is NodeKind.MATRIX:
            return f"M{self.params[0]}({inner[0]})"
        if k is NodeKind.TRIANGULAR:
            return f"T{self.params[0]}({inner[0]})"
        if k is NodeKind.GEN_MATRIX:
            return f"K({inner[0]},{self.params[0]})"
        if k is NodeKind.QUOTIENT:
            return f"quot({inner[0]},{{{','.join(str(p) for p in self.params)}}})"
        if k is NodeKind.CORNER:
            return f"corner({inner[0]},{self.params[0]})"
        return f"GR({inner[0]},{self.group})"


# ── order cap ───────────────────────────────────────────────────


def resolve_cap(cap: int | None) -> int:
    return get_settings().order_cap if cap is None else cap


def ensure_within_cap(what: str, order: int, cap: int | None) -> None:
    limit = resolve_cap(cap)
    if order > limit:
        raise SizeExceeded(what, order, limit)


def ensure_index(index: int, order: int, role: str) -> int:
    if not 0 <= int(index) < order:
        raise ElementOutOfRange(int(index), order, role)
    return int(index)


# ── text helpers for codecs ─────────────────────────────────────


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on *sep* outside any (), [] or {} nesting."""
    parts: list[str] = []
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i].strip())
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:].strip())
    return parts


def strip_brackets(text: str, open_: str, close: str) -> str:
    text = text.strip()
    if not (text.startswith(open_) and text.endswith(close)):
        raise ValueError(f"expected {open_}...{close}, got {text!r}")
    return text[len(open_):-len(close)]
