"""Finite groups given by Cayley tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Sequence

import numpy as np

from errors import GroupAxiomViolation

BUILTIN_GROUPS = ("C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8")


@dataclass(frozen=True, eq=False)
class GroupTable:
    op: np.ndarray
    identity: int
    label: str
    names: tuple[str, ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        return int(self.op.shape[0])

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.op == self.identity, axis=1)

    def element_order(self, g: int) -> int:
        k, p = 1, int(g)
        while p != self.identity:
            p = int(self.op[p, g])
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(g) for g in range(self.order))

    @property
    def is_2_group(self) -> bool:
        return all(o & (o - 1) == 0 for o in self.element_orders)

    @property
    def is_abelian(self) -> bool:
        return bool((self.op == self.op.T).all())

    def name(self, g: int) -> str:
        return self.names[g] if self.names else f"g{g}"


# ── public API ──────────────────────────────────────────────────


def builtin_group(name: str) -> GroupTable:
    key = name.strip()
    if key.upper() == "C2XC2":
        key = "C2xC2"
    if key in ("C2xC2",):
        return group_from_cayley(_klein_table(), 0, label="C2xC2")
    if key.startswith("C") and key[1:].isdigit() and int(key[1:]) >= 1:
        m = int(key[1:])
        i = np.arange(m)
        return group_from_cayley((i[:, None] + i[None, :]) % m, 0, label=key)
    factories: dict[str, Callable[[], Any]] = {
        "S3": lambda: _permutation_table(list(itertools.permutations(range(3)))),
        "D4": lambda: _permutation_table(_square_symmetries()),
        "Q8": _quaternion_table,
    }
    factory = factories.get(key)
    if factory is None:
        raise ValueError(f"Unknown group '{name}'. Builtin: {', '.join(BUILTIN_GROUPS)} (or any Cn)")
    return group_from_cayley(factory(), 0, label=key)


def group_from_cayley(
    table: Any, identity: int, *, label: str = "G", names: Sequence[str] = ()
) -> GroupTable:
    """Validate a Cayley table (closure, identity, inverses, associativity)."""
    op = np.asarray(table)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
        raise GroupAxiomViolation("shape", tuple(op.shape))
    op = _integral(op)
    m = op.shape[0]
    bad = np.argwhere((op < 0) | (op >= m))
    if bad.size:
        raise GroupAxiomViolation("closure", tuple(bad[0]))
    if not 0 <= identity < m:
        raise GroupAxiomViolation("identity", (identity,))
    idx = np.arange(m)
    bad = np.flatnonzero((op[identity] != idx) | (op[:, identity] != idx))
    if bad.size:
        raise GroupAxiomViolation("identity", (int(bad[0]),))
    bad = np.flatnonzero(~(op == identity).any(axis=1))
    if bad.size:
        raise GroupAxiomViolation("inverse", (int(bad[0]),))
    assoc = op[op[:, :, None], idx[None, None, :]] == op[idx[:, None, None], op[None, :, :]]
    bad = np.argwhere(~assoc)
    if bad.size:
        raise GroupAxiomViolation("associativity", tuple(int(x) for x in bad[0]))
    op.setflags(write=False)
    return GroupTable(op, int(identity), label, tuple(names))


def _integral(op: np.ndarray) -> np.ndarray:
    """Entries as int64; floats must be finite whole numbers, anything else is rejected."""
    if np.issubdtype(op.dtype, np.integer):
        return op.astype(np.int64)
    if not np.issubdtype(op.dtype, np.floating):
        raise GroupAxiomViolation("integrality", ())
    bad = np.argwhere(~np.isfinite(op) | (op != np.floor(op)))
    if bad.size:
        raise GroupAxiomViolation("integrality", tuple(bad[0]))
    return op.astype(np.int64)


# ── builtin tables ──────────────────────────────────────────────


def _klein_table() -> np.ndarray:
    i = np.arange(4)
    return i[:, None] ^ i[None, :]


def _permutation_table(perms: list[tuple[int, ...]]) -> np.ndarray:
    """Cayley table of a permutation group; (p*q)(x) = p(q(x)), identity first."""
    pos = {p: k for k, p in enumerate(perms)}
    return np.array([[pos[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms])


def _square_symmetries() -> list[tuple[int, ...]]:
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    compose = lambda p, q: tuple(p[q[x]] for x in range(4))  # noqa: E731
    rotations = [(0, 1, 2, 3)]
    for _ in range(3):
        rotations.append(compose(r, rotations[-1]))
    return rotations + [compose(rot, s) for rot in rotations]


# Q8 as signed units: element (sign, unit) with unit in 1, i, j, k
_QUAT_UNITS = ("1", "i", "j", "k")
_QUAT_PRODUCT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternion_table() -> np.ndarray:
    elements = [(sign, u) for u in _QUAT_UNITS for sign in (1, -1)]
    pos = {e: k for k, e in enumerate(elements)}
    table = np.zeros((8, 8), dtype=np.int64)
    for (s1, u1), p in pos.items():
        for (s2, u2), q in pos.items():
            s3, u3 = _QUAT_PRODUCT[(u1, u2)]
            table[p, q] = pos[(s1 * s2 * s3, u3)]
    return table
