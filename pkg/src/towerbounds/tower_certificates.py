"""Certificates for infinite tamely ramified quadratic towers.

The pieces: a presentation-rank lower bound computed from verified
ramification data, the threshold test d >= 2 + 2 sqrt(r1(K) + r2(K) +
theta), an augmentation step that adds exactly one new tame place to the
ramification set, and the genus-ratio limit along the tower together with
the density intervals it forces on the archimedean places.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import mpmath

from .number_field import (
    FieldOrder,
    OrderElement,
    QuadraticExtensionSpec,
    GENUS_DPS,
    build_quadratic_extension,
    divisor_certificate,
    element_divide_exact,
    element_is_unit,
    element_product,
    extension_signature,
    place_tally,
    prime_element_residue_factors,
    real_embedding_signs,
    relative_quadratic_discriminant,
    verify_prime_element,
)


@dataclass(frozen=True)
class RamificationData:
    """Inputs to the presentation-rank bound for the 2-tower over k.

    t counts the primes of k ramified in K, rho the real places of k that
    become complex in K, (r1, r2) is the signature of k, and delta_ell
    records whether k contains a primitive ell-th root of unity.
    """

    t: int
    rho: int
    r1: int
    r2: int
    delta_ell: int
    ell: int = 2

    def __post_init__(self) -> None:
        if not 0 <= self.rho <= self.r1:
            raise ValueError("rho must lie in [0, r1]")
        if self.delta_ell not in (0, 1):
            raise ValueError("delta_ell must be 0 or 1")
        if self.t < 0:
            raise ValueError("t must be nonnegative")


def ramification_data(spec: QuadraticExtensionSpec) -> RamificationData:
    """Verified ramification inputs for K = k(sqrt(eta)) at ell = 2.

    t is recounted from the certified divisor of (eta), never taken on
    faith from input data; rho comes from the signature change k -> K.
    delta is 1 because -1 lies in every base field.
    """
    if spec.disc_witness is None:
        raise ValueError("requires a square witness so the relative discriminant is (eta)")
    k = spec.base
    cert = divisor_certificate(spec.eta, k)
    if not cert.squarefree:
        raise ValueError("(eta) must be squarefree")
    r1, r2 = k.signature
    rho = extension_signature(spec)[2]
    return RamificationData(t=cert.t, rho=rho, r1=r1, r2=r2, delta_ell=1, ell=2)


def dGT_lower_bound(r: RamificationData) -> int:
    """Generator-rank lower bound t - r1 - r2 + rho - delta_ell.

    Holds already for the empty ramification set on top of K, hence for
    every T containing it.
    """
    return r.t - r.r1 - r.r2 + r.rho - r.delta_ell


def gs_threshold(r1_K: int, r2_K: int, theta: int):
    """Infinitude threshold 2 + 2 sqrt(r1(K) + r2(K) + theta)."""
    if theta not in (0, 1):
        raise ValueError("theta must be 0 or 1")
    if r1_K < 0 or r2_K < 0:
        raise ValueError("signature counts must be nonnegative")
    with mpmath.workdps(GENUS_DPS):
        return 2 + 2 * mpmath.sqrt(r1_K + r2_K + theta)


# ---------------------------------------------------------------------------
# Tame augmentation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AugmentationCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AugmentationVerdict:
    valid: bool
    checks: tuple[AugmentationCheck, ...]
    new_places: tuple[tuple[str, int], ...]
    d_increment: int


def real_place_compatible(aug: OrderElement, eta: OrderElement, k: FieldOrder) -> bool:
    """aug must be positive at every real embedding of k where eta is.

    Those embeddings stay real in K = k(sqrt(eta)); a sign change of aug
    there would ramify an infinite place of the augmented tower.
    """
    r1, _ = k.signature
    if r1 == 0:
        return True
    eta_signs = real_embedding_signs(eta, k)
    aug_signs = real_embedding_signs(aug, k)
    return all(a > 0 for e, a in zip(eta_signs, aug_signs) if e > 0)


def verify_tame_augmentation(
    aug: OrderElement,
    eta: OrderElement,
    k: FieldOrder,
    factors: Sequence[OrderElement],
) -> AugmentationVerdict:
    """Validate an augmentation element extending the ramification set by
    exactly one new tame place.

    factors are the prime elements with aug = unit * product(factors).
    Checks: each factor is certified prime; the product identity holds; aug
    has a beta^2 + 4 gamma witness, so the relative discriminant of
    k(sqrt(aug))/k is (aug) and ramification is exactly at the factors'
    places; every old factor's place already divides (eta); exactly one
    factor's place is new; and aug is positive wherever eta is at the real
    embeddings.  The new place is unramified in K, so its K-places join T
    and the generator rank satisfies d(G_T) >= d(G_empty) + 1.
    """
    checks: list[AugmentationCheck] = []

    certs = [verify_prime_element(x, k) for x in factors]
    all_prime = all(c.certified for c in certs)
    checks.append(AugmentationCheck(
        "factor primality", all_prime,
        ", ".join(f"norm {c.norm}" for c in certs)))

    prod = element_product(list(factors), k)
    quotient = element_divide_exact(aug, prod, k)
    prod_ok = quotient is not None and element_is_unit(quotient, k)
    checks.append(AugmentationCheck(
        "product identity", prod_ok,
        "aug = unit * product of factors" if prod_ok
        else "factors do not multiply to aug up to a unit"))

    try:
        rel = relative_quadratic_discriminant(aug, k)
        witness_ok = rel.kind == "eta"
        detail = ("relative discriminant of k(sqrt(aug))/k is (aug)" if witness_ok
                  else "no square witness: relative discriminant is (4 aug)")
    except ValueError as exc:
        witness_ok = False
        detail = str(exc)
    checks.append(AugmentationCheck("square witness", witness_ok, detail))

    eta_places = {(pl.p, pl.factor_coeffs) for pl in divisor_certificate(eta, k).places}
    old: list[tuple] = []
    new: list[tuple] = []
    if all_prime:
        for x, c in zip(factors, certs):
            gs = [g for g in prime_element_residue_factors(x, k, c.p)
                  if g.degree == c.residue_degree]
            dividing = any((c.p, g.coeffs) in eta_places for g in gs)
            (old if dividing else new).append((x, c, gs[0]))
    checks.append(AugmentationCheck(
        "old places already ramified", all_prime and len(old) >= 1,
        f"{len(old)} factor place(s) divide (eta)"))
    checks.append(AugmentationCheck(
        "exactly one new place", all_prime and len(new) == 1,
        f"{len(new)} factor place(s) outside (eta)"))

    signs_ok = real_place_compatible(aug, eta, k)
    checks.append(AugmentationCheck(
        "real place compatibility", signs_ok,
        "aug is positive at every real embedding where eta is"))

    valid = all(ch.passed for ch in checks)
    new_places: tuple[tuple[str, int], ...] = ()
    if valid:
        _, cert_new, g_new = new[0]
        new_places = _extension_places_over(eta, k, cert_new.p, g_new.coeffs)
    return AugmentationVerdict(valid=valid, checks=tuple(checks),
                               new_places=new_places,
                               d_increment=1 if valid else 0)


def _extension_places_over(eta: OrderElement, k: FieldOrder, p: int,
                           factor_coeffs: tuple[int, ...]) -> tuple[tuple[str, int], ...]:
    """K-places over the k-place (p, g).  The place does not divide (eta),
    so it splits or stays inert; a ramified outcome would contradict the
    divisor certificate."""
    spec = build_quadratic_extension(eta, k)
    places = [pl for pl in place_tally(spec, p).places_by_p[p]
              if pl.base_factor == factor_coeffs]
    if any(pl.kind == "ramified" for pl in places):
        raise AssertionError("new place unexpectedly divides (eta)")
    return tuple((f"place over {p} ({pl.kind}, residue degree {pl.f})", pl.norm)
                 for pl in places)


# ---------------------------------------------------------------------------
# Certificate assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GSCertificate:
    """Infinitude verdict at a fixed theta.

    verdict is infinite iff d_lower >= threshold (non-strict); T lists the
    (description, norm) of the tame places added by the augmentation.
    """

    d_lower: int
    theta: int
    threshold: object
    verdict: str
    T: tuple[tuple[str, int], ...]


def gs_certificate(ram: RamificationData, spec: QuadraticExtensionSpec,
                   augmentation: Optional[AugmentationVerdict],
                   theta: int) -> GSCertificate:
    d = dGT_lower_bound(ram)
    T: tuple[tuple[str, int], ...] = ()
    if augmentation is not None and augmentation.valid:
        d += augmentation.d_increment
        T = augmentation.new_places
    r1_K, r2_K, _ = extension_signature(spec)
    threshold = gs_threshold(r1_K, r2_K, theta)
    verdict = "infinite" if mpmath.mpf(d) >= threshold else "inconclusive"
    return GSCertificate(d_lower=d, theta=theta, threshold=threshold,
                         verdict=verdict, T=T)


# ---------------------------------------------------------------------------
# Genus-ratio limit and density intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenusLimit:
    g_K: object
    n_K: int
    t_norm_log_sum: object
    ratio_bound: object


def genus_ratio_limit(g_K, n_K: int, t_norms: Sequence[int]) -> GenusLimit:
    """Limit of genus/degree along the tower: g/n + sum(log q)/(2n) over
    the norms q of the places in T.  Strictly monotone in T."""
    if n_K <= 0:
        raise ValueError("degree must be positive")
    if any(q < 2 for q in t_norms):
        raise ValueError("place norms must be at least 2")
    with mpmath.workdps(GENUS_DPS):
        g = mpmath.mpf(g_K)
        log_sum = mpmath.fsum(mpmath.log(q) for q in t_norms)
        ratio = g / n_K + log_sum / (2 * n_K)
    return GenusLimit(g_K=g, n_K=n_K, t_norm_log_sum=log_sum, ratio_bound=ratio)


@dataclass(frozen=True)
class PhiInterval:
    alpha: str  # "R" or "C"
    lo: object
    hi: object

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi:
            raise ValueError("need 0 <= lo <= hi")


def phi_intervals(limit: GenusLimit, kind: str) -> list[PhiInterval]:
    """Density intervals of the archimedean places along the tower.

    totally_complex: phi_R = 0 and n/(2 n ratio) <= phi_C <= n/(2 g).
    totally_real:    phi_C = 0 and n/(n ratio) <= phi_R <= n/g.
    The lower endpoints use the full ratio bound, the upper ones only g/n,
    so lo <= hi always holds.
    """
    with mpmath.workdps(GENUS_DPS):
        n = limit.n_K
        zero = mpmath.mpf(0)
        if kind == "totally_complex":
            lo = n / (2 * n * limit.ratio_bound)
            hi = n / (2 * limit.g_K)
            return [PhiInterval("R", zero, zero), PhiInterval("C", lo, hi)]
        if kind == "totally_real":
            lo = n / (n * limit.ratio_bound)
            hi = n / limit.g_K
            return [PhiInterval("R", lo, hi), PhiInterval("C", zero, zero)]
    raise ValueError("kind must be totally_complex or totally_real")
