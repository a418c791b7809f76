"""Table-based finite unital rings.

A ring of order n is stored as two n×n numpy tables over the dense element
indices 0..n-1, plus the indices of zero and one.  Tables are validated once
(:func:`make_ring`) and frozen; every other operation is a pure read.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Any, Iterable

import numpy as np

from config import get_settings
from errors import AxiomViolation, ElementOutOfRange, IndexOutOfRange

if TYPE_CHECKING:
    from constructions.base import ElementCodec

log = logging.getLogger(__name__)

INDEX_DTYPE = np.uint16
MAX_ORDER = int(np.iinfo(INDEX_DTYPE).max) + 1

# Laws checked on triples (a, b, c), in reporting order.
TRIPLE_LAWS = (
    "additive associativity",
    "multiplicative associativity",
    "left distributivity",
    "right distributivity",
)


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A validated finite unital ring. Build it with :func:`make_ring`."""
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    label: str
    codec: ElementCodec | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return int(self.add.shape[0])

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def neg(self) -> np.ndarray:
        """Additive inverse of every element, located once by table scan."""
        return np.argmax(self.add == self.zero, axis=1).astype(np.int64)

    @cached_property
    def one_minus(self) -> np.ndarray:
        """``1 - a`` for every element ``a``."""
        return self.add[self.one, self.neg].astype(np.int64)

    @cached_property
    def two(self) -> int:
        return int(self.add[self.one, self.one])

    @cached_property
    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.order}:{self.zero}:{self.one}:".encode())
        h.update(np.ascontiguousarray(self.add, dtype="<u2").tobytes())
        h.update(np.ascontiguousarray(self.mul, dtype="<u2").tobytes())
        return h.hexdigest()

    def element(self, index: int) -> ElementRef:
        return ElementRef(self, int(index))

    def sub(self, a, b):
        """``a - b``; works elementwise on index arrays."""
        return self.add[a, self.neg[b]]

    def commutes(self, a, b):
        return self.mul[a, b] == self.mul[b, a]

    def render(self, index: int) -> str:
        if self.codec is None:
            return f"#{int(index)}"
        return self.codec.render(int(index))

    def parse(self, text: str) -> int:
        if self.codec is None:
            return int(text.strip().lstrip("#"))
        return self.codec.parse(text)

    def __str__(self) -> str:
        return f"{self.label} (order {self.order})"


@dataclass(frozen=True)
class ElementRef:
    ring: FiniteRing
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.ring.order:
            raise ElementOutOfRange(self.index, self.ring.order)


# ── public API ──────────────────────────────────────────────────


def make_ring(
    add: Any,
    mul: Any,
    zero: int,
    one: int,
    label: str,
    *,
    codec: ElementCodec | None = None,
    validate: bool = True,
) -> FiniteRing:
    """Validate the tables and return a frozen :class:`FiniteRing`.

    ``validate=False`` skips the axiom checks (shape and range are still
    checked); it exists for mutation tests only.
    """
    add_t = _as_table(add, "add")
    mul_t = _as_table(mul, "mul")
    n = add_t.shape[0]
    if mul_t.shape != add_t.shape:
        raise IndexOutOfRange(f"add is {add_t.shape} but mul is {mul_t.shape}")
    for name, idx in (("zero", zero), ("one", one)):
        if not 0 <= int(idx) < n:
            raise IndexOutOfRange(f"{name}={idx} outside [0, {n})")

    if validate:
        _validate_axioms(add_t, mul_t, int(zero), int(one))
    add_t.setflags(write=False)
    mul_t.setflags(write=False)
    log.debug("make_ring: label=%s order=%d validated=%s", label, n, validate)
    return FiniteRing(add_t, mul_t, int(zero), int(one), label, codec)


def power_orbit(a: ElementRef) -> list[int]:
    """Return a, a², a³, ... stopping before the first power already seen."""
    return _power_orbit(a.ring.mul, a.index)


def left_annihilator(a: ElementRef) -> frozenset[int]:
    """ℓ(a) = {x : xa = 0}."""
    ring = a.ring
    return _index_set(ring.mul[:, a.index] == ring.zero)


def right_annihilator(a: ElementRef) -> frozenset[int]:
    """r(a) = {x : ax = 0}."""
    ring = a.ring
    return _index_set(ring.mul[a.index, :] == ring.zero)


def center(ring: FiniteRing) -> frozenset[int]:
    return _index_set(center_mask(ring))


def center_mask(ring: FiniteRing) -> np.ndarray:
    return (ring.mul == ring.mul.T).all(axis=1)


def check_triple(ring: FiniteRing, a: int, b: int, c: int) -> list[str]:
    """Names of the triple laws that fail at (a, b, c); empty when all hold."""
    return [
        law for law, ok in zip(TRIPLE_LAWS, _triple_laws(ring.add, ring.mul, a, b, c))
        if not bool(ok)
    ]


# ── internals ───────────────────────────────────────────────────


def _as_table(table: Any, name: str) -> np.ndarray:
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise IndexOutOfRange(f"{name} table must be a non-empty square grid, got shape {arr.shape}")
    n = arr.shape[0]
    if n > MAX_ORDER:
        raise IndexOutOfRange(f"{name} table of order {n} exceeds {MAX_ORDER}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise IndexOutOfRange(f"{name} table must hold integers, got {arr.dtype}")
    bad = np.argwhere((arr < 0) | (arr >= n))
    if bad.size:
        i, j = bad[0]
        raise IndexOutOfRange(f"{name}[{i}][{j}] = {arr[i, j]} outside [0, {n})")
    return np.array(arr, dtype=INDEX_DTYPE, copy=True)


def _power_orbit(mul: np.ndarray, a: int) -> list[int]:
    orbit = [int(a)]
    seen = {int(a)}
    p = int(mul[a, a])
    while p not in seen:
        orbit.append(p)
        seen.add(p)
        p = int(mul[p, a])
    return orbit


def _index_set(mask: np.ndarray) -> frozenset[int]:
    return frozenset(int(i) for i in np.flatnonzero(mask))


_LAW_TESTS = (
    lambda add, mul, a, b, c: add[add[a, b], c] == add[a, add[b, c]],
    lambda add, mul, a, b, c: mul[mul[a, b], c] == mul[a, mul[b, c]],
    lambda add, mul, a, b, c: mul[a, add[b, c]] == add[mul[a, b], mul[a, c]],
    lambda add, mul, a, b, c: mul[add[a, b], c] == add[mul[a, c], mul[b, c]],
)


def _triple_laws(add, mul, a, b, c) -> Iterable[np.ndarray]:
    return (test(add, mul, a, b, c) for test in _LAW_TESTS)


def _validate_axioms(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> None:
    n = add.shape[0]
    idx = np.arange(n)

    bad = np.flatnonzero((add[zero] != idx) | (add[:, zero] != idx))
    if bad.size:
        raise AxiomViolation("additive identity", (int(bad[0]),))
    bad = np.argwhere(add != add.T)
    if bad.size:
        raise AxiomViolation("additive commutativity", tuple(bad[0]))
    bad = np.flatnonzero(~(add == zero).any(axis=1))
    if bad.size:
        raise AxiomViolation("additive inverse", (int(bad[0]),))
    bad = np.flatnonzero((mul[one] != idx) | (mul[:, one] != idx))
    if bad.size:
        raise AxiomViolation("multiplicative identity", (int(bad[0]),))
    if zero == one and n > 1:
        raise AxiomViolation("zero equals one", (zero,))

    settings = get_settings()
    if n <= settings.exhaustive_limit:
        _check_all_triples(add, mul)
    else:
        _check_sampled_triples(add, mul, settings.validation_sample, settings.seed)


def _check_all_triples(add: np.ndarray, mul: np.ndarray, chunk_cells: int = 1 << 21) -> None:
    n = add.shape[0]
    idx = np.arange(n)
    rows = max(1, chunk_cells // (n * n))
    b = idx[None, :, None]
    c = idx[None, None, :]
    for law_no, law in enumerate(TRIPLE_LAWS):
        for start in range(0, n, rows):
            a = idx[start:start + rows, None, None]
            ok = _LAW_TESTS[law_no](add, mul, a, b, c)
            bad = np.argwhere(~ok)
            if bad.size:
                i, j, k = bad[0]
                raise AxiomViolation(law, (start + int(i), int(j), int(k)))


def _check_sampled_triples(add: np.ndarray, mul: np.ndarray, sample: int, seed: int) -> None:
    n = add.shape[0]
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, sample))
    log.debug("validate: order=%d sampling %d triples (seed=%d)", n, sample, seed)
    for law, ok in zip(TRIPLE_LAWS, _triple_laws(add, mul, a, b, c)):
        bad = np.flatnonzero(~ok)
        if bad.size:
            t = int(bad[0])
            raise AxiomViolation(law, (int(a[t]), int(b[t]), int(c[t])))
