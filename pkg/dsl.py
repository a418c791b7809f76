"""Recursive-descent parser for ring-construction expressions.

    expr    := zn | "M" INT "(" expr ")" | "T" INT "(" expr ")"
             | "K" "(" expr "," INT ")"
             | "prod" "(" expr { "," expr } ")"
             | "quot" "(" expr "," "{" [ INT { "," INT } ] "}" ")"
             | "corner" "(" expr "," INT ")"
             | "GR" "(" expr "," group ")"
    zn      := "Z" INT
    group   := "C" INT | "C2xC2" | "S3" | "D4" | "Q8" | "@" FILEPATH

Whitespace between tokens is ignored.  Errors carry the byte offset and
the set of tokens that would have been accepted there.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from constructions.base import ConstructionAST, NodeKind
from errors import ParseError

_EXPR_STARTS = ("Z", "M", "T", "K", "prod", "quot", "corner", "GR")
_NAMED_GROUPS = ("C2xC2", "S3", "D4", "Q8")


@dataclass(frozen=True)
class DslSource:
    text: str
    origin: str = "<inline>"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # ── tokens ──

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def fail(self, *expected: str) -> ParseError:
        return ParseError(self.offset(), expected, self.text)

    def peek(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            raise self.fail(token)
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("INT")
        return int(self.text[start:self.pos])

    # ── grammar ──

    def expr(self) -> ConstructionAST:
        self.skip_ws()
        # longest keywords first so "corner" is not read as "C..." etc.
        if self.peek("prod"):
            self.pos += 4
            self.expect("(")
            children = [self.expr()]
            while self.peek(","):
                self.pos += 1
                children.append(self.expr())
            self.expect(")")
            return ConstructionAST(NodeKind.PRODUCT, tuple(children))
        if self.peek("quot"):
            self.pos += 4
            self.expect("(")
            child = self.expr()
            self.expect(",")
            self.expect("{")
            gens: list[int] = []
            if not self.peek("}"):
                gens.append(self.integer())
                while self.peek(","):
                    self.pos += 1
                    gens.append(self.integer())
            self.expect("}")
            self.expect(")")
            return ConstructionAST(NodeKind.QUOTIENT, (child,), tuple(gens))
        if self.peek("corner"):
            self.pos += 6
            child, e = self._expr_comma_int()
            return ConstructionAST(NodeKind.CORNER, (child,), (e,))
        if self.peek("GR"):
            self.pos += 2
            self.expect("(")
            child = self.expr()
            self.expect(",")
            group = self.group()
            self.expect(")")
            return ConstructionAST(NodeKind.GROUP_RING, (child,), group=group)
        if self.peek("K"):
            self.pos += 1
            child, s = self._expr_comma_int()
            return ConstructionAST(NodeKind.GEN_MATRIX, (child,), (s,))
        for token, kind in (("M", NodeKind.MATRIX), ("T", NodeKind.TRIANGULAR)):
            if self.peek(token):
                self.pos += 1
                k = self._positive()
                self.expect("(")
                child = self.expr()
                self.expect(")")
                return ConstructionAST(kind, (child,), (k,))
        if self.peek("Z"):
            self.pos += 1
            return ConstructionAST(NodeKind.ZN, (), (self._positive(),))
        raise self.fail(*_EXPR_STARTS)

    def group(self) -> str:
        self.skip_ws()
        for name in _NAMED_GROUPS:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return name
        if self.peek("@"):
            start = self.pos
            depth = 0
            while self.pos < len(self.text):
                ch = self.text[self.pos]
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    if depth == 0:
                        break
                    depth -= 1
                elif ch == "," and depth == 0:
                    break
                self.pos += 1
            path = self.text[start:self.pos].strip()
            if path == "@":
                raise self.fail("FILEPATH")
            return path
        if self.peek("C"):
            self.pos += 1
            return f"C{self._positive()}"
        raise self.fail("C", *_NAMED_GROUPS, "@")

    def _positive(self) -> int:
        before = self.offset()
        value = self.integer()
        if value < 1:
            raise ParseError(before, ("positive INT",), self.text)
        return value

    def _expr_comma_int(self) -> tuple[ConstructionAST, int]:
        self.expect("(")
        child = self.expr()
        self.expect(",")
        value = self.integer()
        self.expect(")")
        return child, value


# ── public API ──────────────────────────────────────────────────


def parse_ring_expr(text: str | DslSource) -> ConstructionAST:
    source = text.text if isinstance(text, DslSource) else text
    parser = _Parser(source)
    ast = parser.expr()
    parser.skip_ws()
    if parser.pos != len(source):
        raise parser.fail("end of input")
    return ast


def catalog_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty manifest lines with '#' comments removed, as (line_no, expr)."""
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((line_no, body))
    return out


def read_catalog(path: str | Path) -> list[DslSource]:
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    return [DslSource(expr, f"{p}:{line_no}") for line_no, expr in catalog_lines(text)]
