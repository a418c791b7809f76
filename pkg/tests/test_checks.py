import numpy as np
import pytest

from catalog import subject_from_ring
from checks import REGISTRY, get_check
from checks.base import Check, Claim, element_claim, first, first_pair, ideals_of, radical_quotient, ring_claim
from checks.structure import PRODUCT_CHECK_LIMIT, product_factor_sets
from classifiers import decompositions
from constructions import matrix_ring, ring_Zn
from errors import SizeExceeded, UnknownCheck
from finite_ring import make_ring
from harness import replay_witness, run_check


def test_registry_ids():
    assert len(REGISTRY) == 48
    assert all(check_id.startswith("CHK-") for check_id in REGISTRY)
    assert list(REGISTRY)[0] == "CHK-axioms"


def test_claim_names_are_unique_within_a_check():
    for check in REGISTRY.values():
        names = [c.name for c in check.claims]
        assert len(names) == len(set(names)), check.check_id
        assert check.statement


def test_unknown_check():
    with pytest.raises(UnknownCheck) as err:
        get_check("CHK-nope")
    assert isinstance(err.value, KeyError)
    assert str(err.value).startswith("unknown check 'CHK-nope'")


@pytest.mark.parametrize(
    "check_id, expr, status",
    [
        ("CHK-axioms", "Z4", "pass"),
        ("CHK-radical-oracle", "M2(Z2)", "pass"),
        ("CHK-chain", "T2(Z2)", "pass"),
        ("CHK-two-in-J", "Z4", "pass"),
        ("CHK-two-in-J", "Z3", "skipped"),
        ("CHK-matrix-negative", "Z2", "pass"),
        ("CHK-matrix-negative", "Z1", "skipped"),
        ("CHK-theorem-j", "Z4", "pass"),
        ("CHK-dedekind", "M2(Z2)", "pass"),
        ("CHK-augmentation", "GR(Z2,C2)", "pass"),
        ("CHK-augmentation", "Z4", "skipped"),
        ("CHK-Ks-radical", "K(Z2,1)", "pass"),
        ("CHK-Ks-conjugation", "K(Z2,0)", "pass"),
        ("CHK-Ks-radical", "Z4", "skipped"),
    ],
)
def test_check_status(subject, check_id, expr, status):
    result = run_check(check_id, subject(expr))
    assert result.status == status, result.witness


def test_skipped_two_in_j_carries_contrapositive(subject):
    result = run_check("CHK-two-in-J", subject("Z3"))
    assert result.reason == "not strongly J#-clean"
    assert "contrapositive" in result.note


@pytest.mark.parametrize("expr", ["Z1", "Z2", "Z4", "Z6", "T2(Z2)", "M2(Z2)", "GR(Z2,C2)", "K(Z2,1)"])
def test_no_check_fails_on_small_rings(subject, expr):
    s = subject(expr)
    failures = [r for r in (run_check(c, s) for c in REGISTRY.values()) if r.failed]
    assert failures == []


def test_broken_ring_fails_axioms_and_replays():
    z4 = ring_Zn(4)
    mul = z4.mul.astype(np.int64)
    mul[2, 2] = 1
    broken = subject_from_ring(make_ring(z4.add, mul, 0, 1, "Z4*", validate=False))
    result = run_check("CHK-axioms", broken)
    assert result.failed
    assert result.witness == {
        "claim": "ring axioms",
        "law": "multiplicative associativity",
        "triple": [2, 2, 3],
    }
    assert replay_witness(result, broken)
    assert not replay_witness(result, subject_from_ring(z4))


def test_element_witness_replays(z4):
    odd_is_even = Check(
        "CHK-test-odd",
        "every element is even",
        (element_claim("even", lambda s: s.ring.elements % 2 == 1, lambda s, x: x % 2 == 0),),
    )
    s = subject_from_ring(z4)
    result = run_check(odd_is_even, s)
    assert result.witness == {"claim": "even", "element": 1}
    assert not odd_is_even.claim("even").holds(s, element=1)
    assert odd_is_even.claim("even").holds(s, element=2)


def test_crashing_claim_becomes_fail(z2):
    def boom(s):
        raise RuntimeError("kaput")

    check = Check("CHK-test-crash", "crashes", (Claim("boom", boom, lambda s: True),))
    result = run_check(check, subject_from_ring(z2))
    assert result.failed
    assert result.witness == {"error": "RuntimeError: kaput"}


def test_oversized_construction_is_skipped(z2):
    def too_big(s):
        raise SizeExceeded("M9(Z2)", 2 ** 81, 4096)

    check = Check("CHK-test-size", "too big", (ring_claim("big", too_big),))
    result = run_check(check, subject_from_ring(z2))
    assert result.status == "skipped"
    assert "above the cap" in result.reason


def test_product_factor_sets(subject):
    s = subject("prod(Z2,Z3)")
    sets = product_factor_sets(s)
    assert sets[0] == s.factors
    assert [len(f) for f in sets] == [2, 2, 2, 3]
    assert all(np.prod([f.order for f in factors]) <= PRODUCT_CHECK_LIMIT for factors in sets)


def test_product_factor_sets_drop_oversized_products(subject):
    assert product_factor_sets(subject("K(Z4,2)")) == []


def test_complement_map_sends_decompositions_to_decompositions(subject):
    s = subject("T2(Z4)")
    R = s.ring
    claim = get_check("CHK-complement").claim("(e, j) maps to (1 - e, -j)")
    assert claim.scan(s) is None
    seen = 0
    for a in range(R.order):
        image_side = {
            (d.idempotent, d.complement)
            for d in decompositions(R, int(R.one_minus[a]), "strongly_jsharp_clean")
        }
        for d in decompositions(R, a, "strongly_jsharp_clean"):
            assert claim.holds(s, element=a, idempotent=d.idempotent)
            assert (int(R.one_minus[d.idempotent]), int(R.neg[d.complement])) in image_side
            seen += 1
    assert seen >= R.order


def test_complement_map_is_vacuous_off_decompositions(subject):
    s = subject("Z3")
    claim = get_check("CHK-complement").claim("(e, j) maps to (1 - e, -j)")
    # 2 = 1 + 1 and 1 is not in J#(Z3)
    assert claim.holds(s, element=2, idempotent=1)


def test_memoized_constructions_keep_their_own_label(z4):
    m1 = matrix_ring(z4, 1)
    assert m1.content_hash == z4.content_hash
    assert radical_quotient(z4).label == "Z4/J"
    assert radical_quotient(m1).label == "M1(Z4)/J"
    assert ideals_of(z4)[0].ring is z4
    assert ideals_of(m1)[0].ring is m1


def test_first_hit_helpers():
    assert first(np.array([False, True, True])) == 1
    assert first(np.zeros(3, dtype=bool)) is None
    assert first_pair(np.array([[False, False], [False, True]])) == (1, 1)
