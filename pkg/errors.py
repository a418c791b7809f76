"""Exception hierarchy for ring construction, parsing and verification."""

from __future__ import annotations

from typing import Any


class AneloError(Exception):
    """Base class for every error raised by this package."""


class AxiomViolation(AneloError, ValueError):
    def __init__(self, kind: str, witness: tuple[int, ...]):
        self.kind = kind
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"ring axiom '{kind}' fails at {self.witness}")


class GroupAxiomViolation(AneloError, ValueError):
    def __init__(self, kind: str, witness: tuple[int, ...]):
        self.kind = kind
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"group axiom '{kind}' fails at {self.witness}")


class IndexOutOfRange(AneloError, ValueError):
    """Malformed tables: wrong shape or entries outside [0, n)."""


class ElementOutOfRange(AneloError, ValueError):
    def __init__(self, index: int, order: int, role: str = "element"):
        self.index = index
        self.order = order
        super().__init__(f"{role} index {index} out of range for ring of order {order}")


class SizeExceeded(AneloError):
    def __init__(self, what: str, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} would have order {order}, above the cap {cap}")


class NotCentral(AneloError, ValueError):
    pass


class NotAnIdeal(AneloError, ValueError):
    pass


class NotIdempotent(AneloError, ValueError):
    pass


class NotAGroupRing(AneloError, TypeError):
    pass


class InternalInconsistency(AneloError, AssertionError):
    """A computed object broke an invariant that always holds; indicates a bug."""


class ParseError(AneloError, ValueError):
    def __init__(self, offset: int, expected: tuple[str, ...] | list[str], text: str = ""):
        self.offset = offset
        self.expected = tuple(expected)
        self.text = text
        shown = ", ".join(repr(e) for e in self.expected)
        super().__init__(f"parse error at offset {offset}: expected {shown}")


class EmptyCatalog(AneloError, ValueError):
    pass


class UnknownCheck(AneloError, KeyError):
    def __init__(self, check_id: str, known: Any = ()):
        self.check_id = check_id
        super().__init__(f"unknown check '{check_id}'" + (f"; known: {', '.join(known)}" if known else ""))

    def __str__(self) -> str:
        return self.args[0]
