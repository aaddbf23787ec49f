"""Arithmetic of monogenic orders Z[xi] and their quadratic extensions.

A base field k = Q(xi) is described by a monic irreducible defining
polynomial whose root generates the full ring of integers; the claim
O_k = Z[xi] is not taken on faith but verified with Dedekind's criterion at
every prime dividing disc(f), and construction hard-fails otherwise.

On top of k the module handles K = k(sqrt(eta)): the relative discriminant
by exhaustive beta search mod 2 (eta = beta^2 + 4*gamma witnesses), the
absolute discriminant and genus, certified embedding signs (totally real or
totally complex), and the tally N_q(K) of places of norm q <= Q built from
splitting data of f mod p plus residue-field square tests (Artin-Schreier
trace tests in characteristic 2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath

from .exact_arith import (
    IntPoly,
    ModPoly,
    factor_mod_p,
    intpoly,
    is_square_in_residue_field,
    isolate_real_roots,
    mp_add,
    mp_divmod,
    mp_is_irreducible,
    mp_mod,
    mp_mul,
    mp_pow_mod,
    mp_sub,
    refine_root,
    resultant,
    sturm_real_root_count,
)

GENUS_DPS = 60
SIGN_REFINE_CAP = Fraction(1, 2**256)


# ---------------------------------------------------------------------------
# Integer factorization helpers (norms and discriminants are small here, but
# Pollard rho keeps randomized test inputs cheap too)
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Deterministic Miller-Rabin witness set for n < 3.3e24.
    for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    import math

    while True:
        c = rng.randrange(1, n)
        x = rng.randrange(2, n)
        y = x
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division plus Pollard rho."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict[int, int] = {}
    for p in range(2, 100000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        rng = random.Random(0xFAC7)
        while stack:
            m = stack.pop()
            if is_probable_prime(m):
                out[m] = out.get(m, 0) + 1
            else:
                d = _pollard_rho(m, rng)
                stack.extend([d, m // d])
    return out


# ---------------------------------------------------------------------------
# FieldOrder
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldOrder:
    """Monogenic order Z[xi] for xi a root of the monic defining polynomial.

    Construction via from_poly verifies irreducibility, computes the
    signature by Sturm counting, and checks maximality (index 1) with
    Dedekind's criterion at each prime dividing disc(f).
    """

    defining_poly: IntPoly
    signature: tuple[int, int]
    disc: int

    @property
    def degree(self) -> int:
        return self.defining_poly.degree

    @staticmethod
    def from_poly(f: IntPoly) -> "FieldOrder":
        n = f.degree
        if n < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if f.lc != 1:
            raise ValueError("defining polynomial must be monic")
        if not _is_irreducible_over_q(f):
            raise ValueError("defining polynomial is not irreducible over Q")
        r1 = sturm_real_root_count(f)
        r2 = (n - r1) // 2
        d = _field_discriminant_with_dedekind(f)
        return FieldOrder(defining_poly=f, signature=(r1, r2), disc=d)


def _is_irreducible_over_q(f: IntPoly) -> bool:
    """Degree-pattern sieve: a rational factorization must induce a subset
    partition of the factor degrees mod every good prime; if the patterns'
    common achievable proper-degree set is empty, f is irreducible."""
    n = f.degree
    if n == 1:
        return True
    candidates = set(range(1, n))
    p = 2
    tried = 0
    while tried < 25 and candidates:
        if f.coeffs[-1] % p != 0 and f.coeffs[0] % p != 0:
            fac = factor_mod_p(f, p)
            if all(m == 1 for _, m in fac):
                degrees = [g.degree for g, _ in fac]
                if len(degrees) == 1:
                    return True
                achievable = {0}
                for d in degrees:
                    achievable |= {s + d for s in achievable}
                candidates &= achievable
                tried += 1
        p = _next_prime(p)
    if not candidates:
        return True
    raise ValueError("could not certify irreducibility by degree patterns")


def _next_prime(p: int) -> int:
    q = p + 1
    while not is_probable_prime(q):
        q += 1
    return q


def _field_discriminant_with_dedekind(f: IntPoly) -> int:
    from .exact_arith import discriminant

    d = discriminant(f)
    for p in sorted(factorize(d)):
        if not dedekind_index_one(f, p):
            raise ValueError(f"order not maximal at {p}")
    return d


def dedekind_index_one(f: IntPoly, p: int) -> bool:
    """Dedekind's criterion: p does not divide the index [O_k : Z[xi]].

    With fbar = prod gbar_i^{e_i}, set g* = prod g_i (lift of the radical),
    h* a lift of fbar/g*, M = (f - g* h*)/p; the criterion is
    gcd(Mbar, gbar*, hbar*) = 1.
    """
    factors = factor_mod_p(f, p)
    gstar_bar = ModPoly.of(p, [1])
    for g, _ in factors:
        gstar_bar = mp_mul(gstar_bar, g)
    hstar_bar = mp_divmod(ModPoly.from_intpoly(f, p), gstar_bar)[0]
    g_lift = _lift(gstar_bar)
    h_lift = _lift(hstar_bar)
    diff = f - g_lift * h_lift
    m_coeffs = []
    for c in diff.coeffs:
        q, r = divmod(c, p)
        if r != 0:
            raise ArithmeticError("lift product mismatch in Dedekind criterion")
        m_coeffs.append(q)
    mbar = ModPoly.of(p, m_coeffs)
    from .exact_arith import mp_gcd

    g1 = mp_gcd(gstar_bar, hstar_bar)
    return mp_gcd(g1, mbar).degree == 0


def _lift(a: ModPoly) -> IntPoly:
    return IntPoly.of(a.coeffs)


# ---------------------------------------------------------------------------
# OrderElement and basic arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderElement:
    """Element of Z[xi] in power-basis coordinates (1, xi, ..., xi^(n-1))."""

    coords: tuple[int, ...]

    @staticmethod
    def of(coords: Iterable[int]) -> "OrderElement":
        return OrderElement(tuple(int(c) for c in coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_poly(self) -> IntPoly:
        return IntPoly.of(self.coords)

    def __neg__(self) -> "OrderElement":
        return OrderElement(tuple(-c for c in self.coords))


def element_of(k: FieldOrder, coords: Iterable[int]) -> OrderElement:
    cs = tuple(int(c) for c in coords)
    if len(cs) != k.degree:
        raise ValueError("coordinate vector length must equal the field degree")
    return OrderElement(cs)


def _reduce_mod_f(poly: IntPoly, f: IntPoly) -> IntPoly:
    # f monic, so reduction stays integral.
    cs = list(poly.coeffs)
    n = f.degree
    while len(cs) - 1 >= n:
        k = cs[-1]
        d = len(cs) - 1 - n
        for i, fc in enumerate(f.coeffs):
            cs[d + i] -= k * fc
        while cs and cs[-1] == 0:
            cs.pop()
    return IntPoly.of(cs)


def _from_poly(k: FieldOrder, poly: IntPoly) -> OrderElement:
    reduced = _reduce_mod_f(poly, k.defining_poly)
    coords = list(reduced.coeffs) + [0] * (k.degree - len(reduced.coeffs))
    return OrderElement(tuple(coords))


def element_norm(e: OrderElement, k: FieldOrder) -> int:
    """Norm_{k/Q}(e) = Res(f, e(x)); f monic makes this the embedding product."""
    if e.is_zero:
        raise ValueError("norm of the zero element is not certified")
    return resultant(k.defining_poly, e.as_poly())


def element_product(es: Sequence[OrderElement], k: FieldOrder) -> OrderElement:
    if not es:
        raise ValueError("empty product")
    acc = es[0].as_poly()
    for e in es[1:]:
        acc = _reduce_mod_f(acc * e.as_poly(), k.defining_poly)
    return _from_poly(k, acc)


def element_add(a: OrderElement, b: OrderElement) -> OrderElement:
    return OrderElement(tuple(x + y for x, y in zip(a.coords, b.coords)))


def element_sub(a: OrderElement, b: OrderElement) -> OrderElement:
    return OrderElement(tuple(x - y for x, y in zip(a.coords, b.coords)))


def element_divide_exact(a: OrderElement, b: OrderElement, k: FieldOrder) -> Optional[OrderElement]:
    """a / b inside Z[xi] if the quotient is integral, else None.

    Solves the linear system M_b x = a over Q, where M_b is the
    multiplication-by-b matrix in the power basis.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by the zero element")
    n = k.degree
    cols = []
    for j in range(n):
        shifted = _reduce_mod_f(b.as_poly() * IntPoly.of([0] * j + [1]), k.defining_poly)
        col = list(shifted.coeffs) + [0] * (n - len(shifted.coeffs))
        cols.append(col)
    # Solve sum_j x_j * cols[j] = a.coords with Fractions.
    mat = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(a.coords[i])] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if mat[r][c] != 0), None)
        if piv is None:
            return None
        mat[c], mat[piv] = mat[piv], mat[c]
        pv = mat[c][c]
        mat[c] = [v / pv for v in mat[c]]
        for r in range(n):
            if r != c and mat[r][c] != 0:
                factor = mat[r][c]
                mat[r] = [v - factor * w for v, w in zip(mat[r], mat[c])]
    xs = [mat[i][n] for i in range(n)]
    if any(x.denominator != 1 for x in xs):
        return None
    return OrderElement(tuple(int(x) for x in xs))


def element_is_unit(e: OrderElement, k: FieldOrder) -> bool:
    return not e.is_zero and abs(element_norm(e, k)) == 1


# ---------------------------------------------------------------------------
# Prime element certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeCertificate:
    certified: bool
    norm: int
    p: int
    residue_degree: int
    reason: str


def verify_prime_element(e: OrderElement, k: FieldOrder) -> PrimeCertificate:
    """Certify that (e) is a prime ideal of Z[xi].

    Sufficient checks: |Norm(e)| is a rational prime; or |Norm(e)| = p^m and
    f mod p has an irreducible degree-m factor under which e reduces to zero
    (so (e) is contained in that degree-m prime, and the norms match).
    """
    if e.is_zero:
        raise ValueError("zero element")
    nrm = element_norm(e, k)
    a = abs(nrm)
    if a == 1:
        return PrimeCertificate(False, nrm, 0, 0, "unit (norm +-1), not a prime element")
    fac = factorize(a)
    if len(fac) != 1:
        return PrimeCertificate(False, nrm, 0, 0, "norm is not a prime power")
    (p, m), = fac.items()
    if m == 1:
        return PrimeCertificate(True, nrm, p, 1, "norm is a rational prime")
    for g, _ in factor_mod_p(k.defining_poly, p):
        if g.degree == m and mp_mod(ModPoly.from_intpoly(e.as_poly(), p), g).is_zero:
            return PrimeCertificate(True, nrm, p, m, f"norm p^{m} with a matching degree-{m} residue factor")
    return PrimeCertificate(False, nrm, p, 0, "not certified prime: no matching residue factor")


def prime_element_residue_factors(e: OrderElement, k: FieldOrder, p: int) -> list[ModPoly]:
    """Irreducible factors g of f mod p with e = 0 mod (p, g): the primes of
    Z[xi] above p containing e.  Used for place distinctness and divisor
    membership checks."""
    ep = ModPoly.from_intpoly(e.as_poly(), p)
    out = []
    for g, _ in factor_mod_p(k.defining_poly, p):
        if mp_mod(ep, g).is_zero:
            out.append(g)
    return out


def same_prime_place(e1: OrderElement, e2: OrderElement, k: FieldOrder) -> bool:
    """Whether two certified prime elements generate the same prime ideal."""
    c1 = verify_prime_element(e1, k)
    c2 = verify_prime_element(e2, k)
    if not (c1.certified and c2.certified):
        raise ValueError("both elements must be certified prime")
    if c1.p != c2.p or c1.residue_degree != c2.residue_degree:
        return False
    f1 = {g.coeffs for g in prime_element_residue_factors(e1, k, c1.p) if g.degree == c1.residue_degree}
    f2 = {g.coeffs for g in prime_element_residue_factors(e2, k, c2.p) if g.degree == c2.residue_degree}
    return bool(f1 & f2)


# ---------------------------------------------------------------------------
# Divisor data of a principal ideal (eta)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorPlace:
    p: int
    factor_coeffs: tuple[int, ...]
    residue_degree: int
    ramification_in_k: int  # e_i of the place over p inside k itself
    valuation: int


@dataclass(frozen=True)
class DivisorCertificate:
    places: tuple[DivisorPlace, ...]
    squarefree: bool

    @property
    def t(self) -> int:
        return len(self.places)


def divisor_certificate(eta: OrderElement, k: FieldOrder) -> DivisorCertificate:
    """The places dividing (eta), with a proof that each valuation is 1.

    For each rational prime p with p^j || |Norm(eta)|: the dividing places
    above p are exactly those residue factors g with eta = 0 mod (p, g), and
    j = sum f_w * v_w over them.  When j equals sum f_w of the dividing
    places, every v_w = 1, so (eta) is squarefree at p; any excess means a
    repeated place and the certificate reports squarefree=False.
    """
    if eta.is_zero:
        raise ValueError("zero element has no divisor certificate")
    nrm = abs(element_norm(eta, k))
    places: list[DivisorPlace] = []
    squarefree = True
    for p, j in sorted(factorize(nrm).items()):
        ep = ModPoly.from_intpoly(eta.as_poly(), p)
        dividing = []
        for g, e_in_k in factor_mod_p(k.defining_poly, p):
            if mp_mod(ep, g).is_zero:
                dividing.append((g, e_in_k))
        fsum = sum(g.degree for g, _ in dividing)
        if fsum == j:
            vals = {g.coeffs: 1 for g, _ in dividing}
        else:
            squarefree = False
            vals = {g.coeffs: 0 for g, _ in dividing}  # valuations unresolved
        for g, e_in_k in dividing:
            places.append(DivisorPlace(p, g.coeffs, g.degree, e_in_k, vals[g.coeffs]))
    return DivisorCertificate(places=tuple(places), squarefree=squarefree)


# ---------------------------------------------------------------------------
# Relative quadratic discriminant of k(sqrt(eta))/k
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelDisc:
    kind: str  # "eta" (disc = (eta)) or "four_eta" (disc = (4 eta))
    norm: int
    witness: Optional[tuple[OrderElement, OrderElement]]


def relative_quadratic_discriminant(eta: OrderElement, k: FieldOrder) -> RelDisc:
    """Discriminant of k(sqrt(eta))/k for squarefree (eta).

    Searches all 2^n residues beta mod 2Z[xi]; eta = beta^2 + 4 gamma forces
    the discriminant down to (eta), otherwise it is (4 eta).  The witness
    search is complete because beta^2 mod 4 depends only on beta mod 2.
    """
    if eta.is_zero:
        raise ValueError("eta must be nonzero")
    cert = divisor_certificate(eta, k)
    if not cert.squarefree:
        raise ValueError("eta is not squarefree as an ideal")
    n = k.degree
    abs_norm = abs(element_norm(eta, k))
    for mask in range(2**n):
        beta = OrderElement(tuple((mask >> i) & 1 for i in range(n)))
        diff = element_sub(eta, element_product([beta, beta], k))
        if all(c % 4 == 0 for c in diff.coords):
            gamma = OrderElement(tuple(c // 4 for c in diff.coords))
            return RelDisc(kind="eta", norm=abs_norm, witness=(beta, gamma))
    return RelDisc(kind="four_eta", norm=(4**n) * abs_norm, witness=None)


# ---------------------------------------------------------------------------
# Quadratic extension data, signs, genus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticExtensionSpec:
    base: FieldOrder
    eta: OrderElement
    disc_witness: Optional[tuple[OrderElement, OrderElement]]
    abs_disc: int
    genus: object  # mpmath.mpf

    @property
    def degree(self) -> int:
        return 2 * self.base.degree


def build_quadratic_extension(eta: OrderElement, k: FieldOrder) -> QuadraticExtensionSpec:
    rel = relative_quadratic_discriminant(eta, k)
    abs_disc, genus = _abs_disc_and_genus(rel.norm, k.disc)
    if rel.witness is not None:
        beta, gamma = rel.witness
        check = element_sub(element_add(element_product([beta, beta], k),
                                        OrderElement(tuple(4 * c for c in gamma.coords))), eta)
        if not check.is_zero:
            raise AssertionError("witness identity failed")
    return QuadraticExtensionSpec(base=k, eta=eta, disc_witness=rel.witness,
                                  abs_disc=abs_disc, genus=genus)


def _abs_disc_and_genus(rel_norm: int, d_k: int):
    abs_disc = abs(rel_norm) * d_k * d_k
    with mpmath.workdps(GENUS_DPS):
        genus = mpmath.log(mpmath.mpf(abs_disc)) / 2
    return abs_disc, genus


def absolute_disc_and_genus(spec: QuadraticExtensionSpec) -> tuple[int, object]:
    """|d_K| = |Norm(disc ideal)| * d_k^2; genus = log sqrt|d_K| (60 digits)."""
    return spec.abs_disc, spec.genus


def real_embedding_signs(eta: OrderElement, k: FieldOrder) -> list[int]:
    """Certified sign of eta at each real embedding of k, in root order.

    Interval evaluation over shrinking isolating intervals; refinement is
    capped at width 2^-256 (reaching the cap means eta vanishes at the
    embedding to absurd precision, which squarefree data cannot do).
    """
    f = k.defining_poly
    poly = eta.as_poly()
    signs = []
    for lo, hi in isolate_real_roots(f):
        while True:
            vlo, vhi = _interval_eval(poly, lo, hi)
            if vlo > 0:
                signs.append(1)
                break
            if vhi < 0:
                signs.append(-1)
                break
            if hi - lo < SIGN_REFINE_CAP:
                raise ArithmeticError("sign undecidable at precision cap")
            lo, hi = refine_root(f, lo, hi, (hi - lo) / 16)
    return signs


def _interval_eval(poly: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    vlo = vhi = Fraction(0)
    for c in reversed(poly.coeffs):
        # interval multiply by [lo, hi] then add c
        candidates = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(candidates) + c, max(candidates) + c
    return vlo, vhi


def totally_imaginary_or_real(spec: QuadraticExtensionSpec) -> str:
    """Classify K = k(sqrt(eta)): totally_complex, totally_real, or mixed."""
    k = spec.base
    r1, r2 = k.signature
    signs = real_embedding_signs(spec.eta, k) if r1 > 0 else []
    if all(s < 0 for s in signs):
        return "totally_complex"
    if r2 == 0 and all(s > 0 for s in signs):
        return "totally_real"
    return "mixed"


def extension_signature(spec: QuadraticExtensionSpec) -> tuple[int, int, int]:
    """(r1(K), r2(K), rho) where rho counts real places of k complexified in K."""
    k = spec.base
    r1, r2 = k.signature
    signs = real_embedding_signs(spec.eta, k) if r1 > 0 else []
    neg = sum(1 for s in signs if s < 0)
    pos = sum(1 for s in signs if s > 0)
    return 2 * pos, 2 * r2 + neg, neg


# ---------------------------------------------------------------------------
# Place tally of K up to a norm bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KPlace:
    p: int
    norm: int
    e: int
    f: int
    kind: str  # split / inert / ramified
    base_factor: tuple[int, ...]


@dataclass(frozen=True)
class PlaceTally:
    counts: dict
    n_real: int
    n_complex: int
    places_by_p: dict

    def count(self, q: int) -> int:
        return self.counts.get(q, 0)


def place_tally(spec: QuadraticExtensionSpec, Q: int) -> PlaceTally:
    """N_q(K) for prime powers q <= Q, plus archimedean counts.

    For each rational prime p <= Q the places of k come from the verified
    factorization of f mod p (index 1 holds: Dedekind ran at construction
    for p | disc f, and is automatic elsewhere).  A place v of k unramified
    in K splits or stays inert according to the residue-field square test of
    eta (Artin-Schreier trace test at p = 2, using the discriminant
    witness); places dividing (eta) ramify with norm Norm(v).
    """
    k = spec.base
    n = k.degree
    counts: dict[int, int] = {}
    places_by_p: dict[int, list[KPlace]] = {}
    p = 2
    while p <= Q:
        places_by_p[p] = _places_above(spec, p)
        for pl in places_by_p[p]:
            if pl.norm <= Q:
                counts[pl.norm] = counts.get(pl.norm, 0) + 1
        p = _next_prime(p)
    kind = totally_imaginary_or_real(spec)
    if kind == "totally_complex":
        n_real, n_complex = 0, n
    elif kind == "totally_real":
        n_real, n_complex = 2 * n, 0
    else:
        r1k, r2k, _ = extension_signature(spec)
        n_real, n_complex = r1k, r2k
    return PlaceTally(counts=counts, n_real=n_real, n_complex=n_complex,
                      places_by_p=places_by_p)


def _places_above(spec: QuadraticExtensionSpec, p: int) -> list[KPlace]:
    k = spec.base
    eta = spec.eta
    out: list[KPlace] = []
    ep = ModPoly.from_intpoly(eta.as_poly(), p)
    for g, e_k in factor_mod_p(k.defining_poly, p):
        fdeg = g.degree
        nv = p**fdeg
        if mp_mod(ep, g).is_zero:
            out.append(KPlace(p, nv, 2 * e_k, fdeg, "ramified", g.coeffs))
            continue
        if p != 2:
            verdict = is_square_in_residue_field(g, ep)
            split = verdict == "square"
        else:
            if spec.disc_witness is None:
                # No beta witness: K/k is ramified at 2.
                out.append(KPlace(p, nv, 2 * e_k, fdeg, "ramified", g.coeffs))
                continue
            split = _artin_schreier_splits(spec, g)
        if split:
            out.append(KPlace(p, nv, e_k, fdeg, "split", g.coeffs))
            out.append(KPlace(p, nv, e_k, fdeg, "split", g.coeffs))
        else:
            out.append(KPlace(p, nv * nv, e_k, 2 * fdeg, "inert", g.coeffs))
    return out


def _artin_schreier_splits(spec: QuadraticExtensionSpec, g: ModPoly) -> bool:
    """Split/inert at an unramified place over 2, via the witness.

    With eta = beta^2 + 4 gamma, omega = (beta + sqrt(eta))/2 satisfies
    x^2 - beta x - gamma; substituting x = beta z turns it into the
    Artin-Schreier form z^2 - z = gamma/beta^2 over the residue field, so
    the place splits iff Tr(gamma/beta^2) = 0.
    """
    beta, gamma = spec.disc_witness
    d = g.degree
    b = mp_mod(ModPoly.from_intpoly(beta.as_poly(), 2), g)
    c = mp_mod(ModPoly.from_intpoly(gamma.as_poly(), 2), g)
    if b.is_zero:
        raise ArithmeticError("beta not invertible at an unramified place over 2")
    binv = mp_pow_mod(b, 2**d - 2, g)  # b^(2^d - 1) = 1, so this is b^(-1)
    inv2 = mp_mod(mp_mul(binv, binv), g)
    t = mp_mod(mp_mul(c, inv2), g)
    tr = t
    cur = t
    for _ in range(d - 1):
        cur = mp_mod(mp_mul(cur, cur), g)
        tr = mp_add(tr, cur)
    if tr.is_zero:
        return True
    if tr.coeffs == (1,):
        return False
    raise ArithmeticError("trace did not land in the prime field")
