"""Infinitude certificate chain: rank bounds, thresholds, augmentation
verification, genus-ratio limits, and archimedean density intervals."""

import math

import mpmath
import pytest

from conftest import AUG1, DELTA2, ETA1, ETA2, PI3, PI125, PI13_2, PI41_2, PRIMES1
from towerbounds.exact_arith import intpoly
from towerbounds.number_field import (
    FieldOrder,
    OrderElement,
    build_quadratic_extension,
    element_of,
    element_product,
)
from towerbounds.tower_certificates import (
    GenusLimit,
    PhiInterval,
    RamificationData,
    dGT_lower_bound,
    genus_ratio_limit,
    gs_certificate,
    gs_threshold,
    phi_intervals,
    ramification_data,
    real_place_compatible,
    verify_tame_augmentation,
)


@pytest.fixture(scope="module")
def aug1_result(k1):
    aug = element_of(k1, AUG1)
    factors = [element_of(k1, PI3), element_of(k1, PRIMES1[2][1])]
    return verify_tame_augmentation(aug, element_of(k1, ETA1), k1, factors)


@pytest.fixture(scope="module")
def aug2_result(k2):
    aug = element_of(k2, DELTA2)
    factors = [element_of(k2, c) for c in (PI125, PI13_2, PI41_2)]
    return verify_tame_augmentation(aug, element_of(k2, ETA2), k2, factors)


# ---------------------------------------------------------------------------
# Rank bound and threshold
# ---------------------------------------------------------------------------

def test_ramification_data_first_field(spec1):
    ram = ramification_data(spec1)
    assert (ram.t, ram.rho, ram.r1, ram.r2, ram.delta_ell) == (8, 4, 4, 1, 1)
    assert dGT_lower_bound(ram) == 8 - 4 - 1 + 4 - 1 == 6


def test_ramification_data_second_field(spec2):
    ram = ramification_data(spec2)
    assert (ram.t, ram.rho, ram.r1, ram.r2, ram.delta_ell) == (15, 0, 6, 0, 1)
    assert dGT_lower_bound(ram) == 8


def test_rank_bound_empty_ramification():
    ram = RamificationData(t=0, rho=0, r1=1, r2=0, delta_ell=0)
    assert dGT_lower_bound(ram) == -1


def test_ramification_data_invariants():
    with pytest.raises(ValueError):
        RamificationData(t=3, rho=2, r1=1, r2=0, delta_ell=1)
    with pytest.raises(ValueError):
        RamificationData(t=3, rho=0, r1=1, r2=0, delta_ell=2)
    with pytest.raises(ValueError):
        RamificationData(t=-1, rho=0, r1=1, r2=0, delta_ell=1)


def test_ramification_data_requires_witness():
    zi = FieldOrder.from_poly(intpoly(1, 0, 1))
    spec = build_quadratic_extension(element_of(zi, [0, 1]), zi)
    with pytest.raises(ValueError):
        ramification_data(spec)


def test_threshold_values():
    assert float(gs_threshold(0, 0, 0)) == 2.0
    assert abs(float(gs_threshold(0, 6, 0)) - 6.8989) <= 1e-4
    assert abs(float(gs_threshold(0, 6, 0)) - (2 + 2 * math.sqrt(6))) < 1e-12
    assert abs(float(gs_threshold(12, 0, 0)) - (2 + 2 * math.sqrt(12))) < 1e-12
    assert abs(float(gs_threshold(0, 6, 1)) - (2 + 2 * math.sqrt(7))) < 1e-12
    assert abs(float(gs_threshold(12, 0, 1)) - (2 + 2 * math.sqrt(13))) < 1e-12
    with pytest.raises(ValueError):
        gs_threshold(0, 6, 2)


# ---------------------------------------------------------------------------
# Augmentation
# ---------------------------------------------------------------------------

def test_augmentation_first_field_valid(aug1_result):
    assert aug1_result.valid
    assert all(c.passed for c in aug1_result.checks)
    assert aug1_result.d_increment == 1
    # The place over 3 stays inert, giving one T-place of norm 9.
    assert len(aug1_result.new_places) == 1
    assert aug1_result.new_places[0][1] == 9


def test_augmentation_second_field_valid(aug2_result):
    # The old part factors through two already-ramified places here.
    assert aug2_result.valid
    assert aug2_result.d_increment == 1
    assert len(aug2_result.new_places) == 1
    assert aug2_result.new_places[0][1] == 125**2


def test_augmentation_rejects_two_old_factors(k1):
    pi7 = element_of(k1, PRIMES1[0][1])
    pi13 = element_of(k1, PRIMES1[1][1])
    aug = element_product([pi7, pi13], k1)
    res = verify_tame_augmentation(aug, element_of(k1, ETA1), k1, [pi7, pi13])
    assert not res.valid
    failed = {c.name for c in res.checks if not c.passed}
    assert "exactly one new place" in failed
    assert res.new_places == () and res.d_increment == 0


def test_augmentation_rejects_wrong_product(k1):
    aug = element_of(k1, AUG1)
    factors = [element_of(k1, PI3), element_of(k1, PRIMES1[1][1])]
    res = verify_tame_augmentation(aug, element_of(k1, ETA1), k1, factors)
    assert not res.valid
    assert any(c.name == "product identity" and not c.passed for c in res.checks)


def test_augmentation_rejects_composite_factor(k1):
    aug = element_of(k1, AUG1)
    res = verify_tame_augmentation(aug, element_of(k1, ETA1), k1, [aug])
    assert not res.valid
    assert any(c.name == "factor primality" and not c.passed for c in res.checks)


def test_real_place_compatibility(k1, k2):
    delta = element_of(k2, DELTA2)
    eta2 = element_of(k2, ETA2)
    assert real_place_compatible(delta, eta2, k2)
    neg_delta = OrderElement(tuple(-c for c in DELTA2))
    assert not real_place_compatible(neg_delta, eta2, k2)
    # eta1 is negative at every real embedding, so the condition is vacuous.
    assert real_place_compatible(element_of(k1, PRIMES1[0][1]), element_of(k1, ETA1), k1)


# ---------------------------------------------------------------------------
# Assembled certificates
# ---------------------------------------------------------------------------

def test_certificate_chain_first_field(spec1, aug1_result):
    ram = ramification_data(spec1)

    base = gs_certificate(ram, spec1, None, theta=0)
    assert base.d_lower == 6 and base.verdict == "inconclusive" and base.T == ()

    cert = gs_certificate(ram, spec1, aug1_result, theta=0)
    assert cert.d_lower == 7
    assert abs(float(cert.threshold) - 6.8989) <= 1e-4
    assert cert.verdict == "infinite"
    assert cert.T == aug1_result.new_places

    cert1 = gs_certificate(ram, spec1, aug1_result, theta=1)
    assert abs(float(cert1.threshold) - 7.2915) <= 1e-4
    assert cert1.verdict == "inconclusive"


def test_certificate_chain_second_field(spec2, aug2_result):
    ram = ramification_data(spec2)
    cert = gs_certificate(ram, spec2, aug2_result, theta=0)
    assert cert.d_lower == 9
    assert abs(float(cert.threshold) - 8.9282) <= 1e-4
    assert cert.verdict == "infinite"

    cert1 = gs_certificate(ram, spec2, aug2_result, theta=1)
    assert abs(float(cert1.threshold) - 9.2111) <= 1e-4
    assert cert1.verdict == "inconclusive"


# ---------------------------------------------------------------------------
# Genus-ratio limit and phi intervals
# ---------------------------------------------------------------------------

def test_genus_ratio_limit_worked_value():
    limit = genus_ratio_limit(25.3490, 12, [9])
    assert abs(float(limit.ratio_bound) - (25.3490 / 12 + math.log(9) / 24)) < 1e-12
    assert abs(float(limit.ratio_bound) - 2.2040) <= 1e-4


def test_genus_ratio_limit_empty_t():
    limit = genus_ratio_limit(25, 12, [])
    assert limit.t_norm_log_sum == 0
    assert abs(float(limit.ratio_bound) - 25 / 12) < 1e-15


def test_genus_ratio_limit_monotone():
    base = genus_ratio_limit(25.349, 12, [9])
    for extra in (2, 9, 15625):
        bigger = genus_ratio_limit(25.349, 12, [9, extra])
        assert bigger.ratio_bound > base.ratio_bound


def test_genus_ratio_limit_rejects_bad_input():
    with pytest.raises(ValueError):
        genus_ratio_limit(25, 0, [9])
    with pytest.raises(ValueError):
        genus_ratio_limit(25, 12, [1])


def test_phi_intervals_first_field(spec1):
    limit = genus_ratio_limit(spec1.genus, 12, [9])
    phi_r, phi_c = phi_intervals(limit, "totally_complex")
    assert phi_r.alpha == "R" and float(phi_r.lo) == float(phi_r.hi) == 0.0
    assert phi_c.alpha == "C"
    assert abs(float(phi_c.lo) - 0.22687) <= 1e-5
    assert abs(float(phi_c.hi) - 0.23669) <= 1e-5
    assert 0 < phi_c.lo <= phi_c.hi


def test_phi_intervals_second_field(spec2):
    g2 = spec2.genus
    for t_norms in ([13], [125**2]):
        limit = genus_ratio_limit(g2, 12, t_norms)
        phi_r, phi_c = phi_intervals(limit, "totally_real")
        assert float(phi_c.lo) == float(phi_c.hi) == 0.0
        assert abs(float(phi_r.hi) - 12 / float(g2)) < 1e-12
        assert abs(float(phi_r.lo) - 1 / float(limit.ratio_bound)) < 1e-12
        assert 0 < phi_r.lo < phi_r.hi


def test_phi_interval_degenerates_without_ramification():
    limit = genus_ratio_limit(12, 12, [])
    phi_r, phi_c = phi_intervals(limit, "totally_complex")
    assert float(phi_c.lo) == float(phi_c.hi) == 0.5
    phi_r, phi_c = phi_intervals(limit, "totally_real")
    assert float(phi_r.lo) == float(phi_r.hi) == 1.0


def test_phi_intervals_rejects_mixed_kind():
    limit = genus_ratio_limit(25, 12, [9])
    with pytest.raises(ValueError):
        phi_intervals(limit, "mixed")


def test_phi_interval_invariant():
    with pytest.raises(ValueError):
        PhiInterval("C", mpmath.mpf(2), mpmath.mpf(1))
