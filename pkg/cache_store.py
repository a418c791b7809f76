"""Structural-set cache: persist computed sets as versioned JSON records."""

from __future__ import annotations

import json
import logging
import os
import tempfile
import time
from dataclasses import replace
from pathlib import Path
from typing import Any

from config import get_settings
from finite_ring import FiniteRing
from structure_sets import SET_NAMES, StructuralSets, compute_structural_sets, structure

log = logging.getLogger(__name__)

CACHE_VERSION = 1


def _cache_dir() -> Path:
    return Path(get_settings().cache_dir)


def _record_path(content_hash: str) -> Path:
    return _cache_dir() / f"{content_hash}.json"


def cache_get(content_hash: str, order: int | None = None) -> StructuralSets | None:
    """Stored sets for a ring hash, or None when absent, stale or unreadable."""
    if not get_settings().cache_enabled:
        return None
    path = _record_path(content_hash)
    if not path.exists():
        return None
    try:
        record: dict[str, Any] = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        log.warning("cache: unreadable record %s (%s); recomputing", path.name, exc)
        return None
    if not isinstance(record, dict) or record.get("version") != CACHE_VERSION or record.get("hash") != content_hash:
        log.warning("cache: stale record %s (version %r); recomputing", path.name, record.get("version") if isinstance(record, dict) else None)
        return None
    try:
        sets = StructuralSets.from_dict(record["sets"], label=str(record.get("label", "")))
    except (KeyError, TypeError, ValueError) as exc:
        log.warning("cache: malformed record %s (%s); recomputing", path.name, exc)
        return None
    if order is not None and any(i < 0 or i >= order for name in SET_NAMES for i in getattr(sets, name)):
        log.warning("cache: record %s holds indices outside [0, %d); recomputing", path.name, order)
        return None
    return sets


def cache_put(content_hash: str, sets: StructuralSets, order: int) -> Path | None:
    """Write a record atomically (temp file, then rename); last writer wins."""
    if not get_settings().cache_enabled:
        return None
    path = _record_path(content_hash)
    record = {
        "version": CACHE_VERSION,
        "hash": content_hash,
        "label": sets.label,
        "order": order,
        "created_at": time.strftime("%Y-%m-%d %H:%M:%S"),
        "sets": sets.to_dict(),
    }
    tmp_name = None
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{content_hash[:12]}-", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(record, fh)
        os.replace(tmp_name, path)
    except OSError as exc:
        log.warning("cache: could not write %s (%s)", path.name, exc)
        if tmp_name and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        return None
    log.debug("cache: stored %s (%s)", path.name, sets.label)
    return path


def load_or_compute(ring: FiniteRing) -> StructuralSets:
    """Sets of *ring*, from the cache when possible; fresh results are stored."""
    cached = cache_get(ring.content_hash, ring.order)
    if cached is not None:
        log.debug("cache: hit for %s", ring.label)
        structure(ring).seed(cached)
        return replace(cached, label=ring.label)
    sets = compute_structural_sets(ring)
    cache_put(ring.content_hash, sets, ring.order)
    return sets
