import itertools

import numpy as np
import pytest

from powersums.difference_sets import (
    DifferenceSet,
    bose,
    certificate_matches_kind,
    certify,
    ruzsa,
    singer,
)
from powersums.errors import NotPrime, NotPrimePower, ParamViolation


def naive_difference_counts(residues, modulus):
    """Independent recount of the pairwise-difference multiset."""
    counts = {}
    for a, b in itertools.permutations(residues, 2):
        d = (a - b) % modulus
        counts[d] = counts.get(d, 0) + 1
    return counts


def brute_force_perfect_sets(n, modulus):
    """All n-subsets of Z_modulus whose differences cover every nonzero residue once."""
    out = []
    for subset in itertools.combinations(range(modulus), n):
        counts = naive_difference_counts(subset, modulus)
        if all(counts.get(r, 0) == 1 for r in range(1, modulus)):
            out.append(subset)
    return out


def test_singer_n3_is_a_perfect_set_by_brute_force():
    perfect = brute_force_perfect_sets(3, 7)
    assert tuple(singer(3).residues) in perfect
    assert certify(singer(3)).verdict == "perfect"


def test_singer_n4_is_a_perfect_set_by_brute_force():
    perfect = brute_force_perfect_sets(4, 13)
    assert (0, 1, 3, 9) in perfect  # known representative
    assert tuple(singer(4).residues) in perfect


def test_singer_rejects_non_prime_power():
    with pytest.raises(NotPrimePower) as exc:
        singer(7)
    assert exc.value.value == 6


def test_bose_n3_by_brute_force():
    valid = []
    for subset in itertools.combinations(range(8), 3):
        counts = naive_difference_counts(subset, 8)
        ok = all(counts.get(r, 0) == (0 if r % 4 == 0 else 1) for r in range(8))
        if ok:
            valid.append(subset)
    assert tuple(bose(3).residues) in valid


def test_bose_certificates():
    for n in (3, 4, 5, 7, 8, 9):
        ds = bose(n)
        assert ds.modulus == n * n - 1
        cert = certify(ds)
        assert cert.verdict == "sidon-avoiding"
        assert cert.divisor == n + 1
        assert len(cert.counts) == n * n - n
        # cross-check against the naive recount
        naive = naive_difference_counts(ds.residues, ds.modulus)
        assert naive == dict(cert.counts)


def test_bose_rejects_non_prime_power():
    with pytest.raises(NotPrimePower):
        bose(6)


def test_bose_degenerate_n2_is_perfect():
    # mod 3 there is no multiple of n+1=3 to avoid, so the set is perfect
    cert = certify(bose(2))
    assert cert.verdict == "perfect"
    assert certificate_matches_kind(bose(2), cert)


def test_ruzsa_p3_crt_by_hand():
    # t=1: i = 1 (mod 2), i = 2 (mod 3) -> 5; t=2: i = 0 (mod 2), i = 1 (mod 3) -> 4
    ds = ruzsa(3)
    assert ds.residues == (4, 5)
    assert ds.modulus == 6


def test_ruzsa_all_differences_distinct():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        ds = ruzsa(p)
        assert ds.n == p - 1
        assert ds.modulus == p * p - p
        counts = naive_difference_counts(ds.residues, ds.modulus)
        assert all(c == 1 for c in counts.values())
        cert = certify(ds)
        assert certificate_matches_kind(ds, cert)


def test_ruzsa_rejects_bad_input():
    with pytest.raises(NotPrime):
        ruzsa(4)
    with pytest.raises(ParamViolation):
        ruzsa(2)


def test_certify_examples():
    assert certify(DifferenceSet("singer", (0, 1, 3), 7)).verdict == "perfect"
    cert = certify(DifferenceSet("bose", (0, 1, 3), 8))
    assert cert.verdict == "sidon-avoiding"
    assert cert.divisor == 4
    cert = certify(DifferenceSet("singer", (0, 1, 2), 7))
    assert cert.verdict == "failed"
    assert cert.witness == 1
    assert cert.count_of(1) == 2


def test_certificate_multiplicity_sum():
    for ds in (singer(5), bose(4), ruzsa(7)):
        cert = certify(ds)
        assert sum(c for _, c in cert.counts) == ds.n * (ds.n - 1)


def test_translation_preserves_certificates():
    rng = np.random.default_rng(11)
    for ds in (singer(4), bose(5), ruzsa(7)):
        base = certify(ds)
        for _ in range(5):
            shift = int(rng.integers(1, ds.modulus))
            moved = certify(ds.translate(shift))
            assert moved.verdict == base.verdict
            assert moved.divisor == base.divisor


def test_json_round_trip():
    ds = singer(6)
    assert DifferenceSet.from_json_dict(ds.to_json_dict()) == ds


def test_difference_set_validation():
    with pytest.raises(ValueError):
        DifferenceSet("singer", (0, 0, 3), 7)
    with pytest.raises(ValueError):
        DifferenceSet("singer", (0, 9), 7)
    with pytest.raises(ValueError):
        DifferenceSet("weird", (0, 1), 7)
