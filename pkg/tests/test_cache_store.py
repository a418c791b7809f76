import json
import logging

import pytest

from cache_store import CACHE_VERSION, cache_get, cache_put, load_or_compute
from catalog import build_subject
from config import configure, get_settings
from structure_sets import clear_memo, compute_structural_sets, structure


def _record_path(ring):
    return get_settings().cache_dir / f"{ring.content_hash}.json"


def test_load_or_compute_stores_a_record(z4):
    sets = load_or_compute(z4)
    record = json.loads(_record_path(z4).read_text(encoding="utf-8"))
    assert record["version"] == CACHE_VERSION
    assert record["hash"] == z4.content_hash
    assert record["order"] == 4
    assert record["sets"]["jacobson"] == [0, 2]
    assert cache_get(z4.content_hash, z4.order) == sets


def test_cached_sets_seed_the_structure(z4):
    sets = compute_structural_sets(z4)
    cache_put(z4.content_hash, sets, z4.order)
    clear_memo()
    assert load_or_compute(z4) == sets
    assert "units" in vars(structure(z4))


def test_stale_version_is_ignored(z4, caplog):
    path = cache_put(z4.content_hash, compute_structural_sets(z4), z4.order)
    record = json.loads(path.read_text(encoding="utf-8"))
    record["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(record), encoding="utf-8")
    with caplog.at_level(logging.WARNING, logger="cache_store"):
        assert cache_get(z4.content_hash, z4.order) is None
    assert "stale record" in caplog.text


def test_corrupt_record_is_recomputed(z4):
    path = _record_path(z4)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("{not json", encoding="utf-8")
    assert cache_get(z4.content_hash) is None
    assert load_or_compute(z4).units == (1, 3)
    assert json.loads(path.read_text(encoding="utf-8"))["sets"]["units"] == [1, 3]


def test_indices_outside_the_ring_are_rejected(z2, z4):
    cache_put(z2.content_hash, compute_structural_sets(z4), z2.order)
    assert cache_get(z2.content_hash, z2.order) is None


def test_disabled_cache_neither_reads_nor_writes(z4):
    configure(cache_enabled=False)
    assert cache_put(z4.content_hash, compute_structural_sets(z4), z4.order) is None
    load_or_compute(z4)
    assert not _record_path(z4).exists()


@pytest.mark.parametrize("expr", ["Z8", "prod(Z2,Z4)", "M2(Z2)", "T2(Z4)", "K(Z4,2)", "GR(Z2,S3)"])
def test_cached_sets_match_fresh_computation(expr):
    ring = build_subject(expr).ring
    stored = load_or_compute(ring)
    clear_memo()
    fresh = compute_structural_sets(ring)
    assert _record_path(ring).exists()
    assert cache_get(ring.content_hash, ring.order) == fresh == stored
    assert json.loads(_record_path(ring).read_text(encoding="utf-8"))["sets"] == fresh.to_dict()
