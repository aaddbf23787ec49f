"""Integer and finite-field polynomial kernels.

Everything downstream (norms, discriminants, signatures, splitting data)
reduces to the operations in this module.  All arithmetic is exact: integer
polynomials use arbitrary-precision ints, rational intermediates use
fractions.Fraction, and mod-p work uses plain ints reduced into [0, p).

Conventions fixed here and locked by unit tests:
  * resultant(a, b) is the determinant of the Sylvester matrix of (a, b);
    in particular Res(x-2, x-3) = -1 and Res(a, a) = 0.
  * discriminant(a) = (-1)^(n(n-1)/2) * Res(a, a') / lc(a).
  * Sturm root counting requires squarefree input; no silent deflation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

# Exact rational carrier used across the package.
Rational = Fraction


# ---------------------------------------------------------------------------
# Integer polynomials, lowest degree first
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Univariate integer polynomial; coeffs[i] is the coefficient of x^i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs: Iterable[int]) -> "IntPoly":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPoly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: Fraction | int) -> Fraction | int:
        acc: Fraction | int = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly.of(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly.of(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly.of(out)

    def scale(self, k: int) -> "IntPoly":
        return IntPoly.of(k * c for c in self.coeffs)


def intpoly(*coeffs_low_first: int) -> IntPoly:
    return IntPoly.of(coeffs_low_first)


# ---------------------------------------------------------------------------
# Resultant and discriminant (Sylvester determinant convention)
# ---------------------------------------------------------------------------

def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact integer determinant."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) as the determinant of the Sylvester matrix.

    Locked values: Res(x-2, x-3) = -1; Res(a, a) = 0; Res(f, x) = f(0) for
    monic f.  Degree-zero conventions follow the empty/diagonal Sylvester
    matrix: Res(c, d) = 1, Res(c, b) = c^deg(b).
    """
    if a.is_zero or b.is_zero:
        raise ValueError("undefined resultant: zero polynomial input")
    m, n = a.degree, b.degree
    size = m + n
    if size == 0:
        return 1
    arev = list(reversed(a.coeffs))
    brev = list(reversed(b.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + arev + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + brev + [0] * (m - 1 - i))
    return _bareiss_det(rows)


def discriminant(a: IntPoly) -> int:
    """disc(a) = (-1)^(n(n-1)/2) * Res(a, a') / lc(a); requires deg >= 1."""
    n = a.degree
    if n < 1:
        raise ValueError("discriminant undefined for constant polynomial")
    r = resultant(a, a.derivative()) if not a.derivative().is_zero else 0
    num = (-1) ** ((n * (n - 1)) // 2) * r
    q, rem = divmod(num, a.lc)
    if rem != 0:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return q


# ---------------------------------------------------------------------------
# Rational-coefficient helpers (internal)
# ---------------------------------------------------------------------------

QPoly = list  # list[Fraction], lowest degree first, trailing zeros stripped


def _q_from_int(a: IntPoly) -> QPoly:
    return [Fraction(c) for c in a.coeffs]


def _q_trim(p: QPoly) -> QPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _q_divmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        k = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = k
        for i, bc in enumerate(b):
            a[d + i] -= k * bc
        _q_trim(a)
        if not a:
            break
    return _q_trim(q), a


def _q_gcd(a: QPoly, b: QPoly) -> QPoly:
    a, b = a[:], b[:]
    while b:
        _, r = _q_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def is_squarefree(a: IntPoly) -> bool:
    if a.degree < 1:
        return not a.is_zero
    g = _q_gcd(_q_from_int(a), _q_from_int(a.derivative()))
    return len(g) <= 1


# ---------------------------------------------------------------------------
# Sturm sequences and real root machinery
# ---------------------------------------------------------------------------

def sturm_chain(a: IntPoly) -> list[QPoly]:
    chain = [_q_from_int(a), _q_from_int(a.derivative())]
    while chain[-1]:
        _, r = _q_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(values: Sequence[int]) -> int:
    vals = [v for v in values if v != 0]
    return sum(1 for x, y in zip(vals, vals[1:]) if x * y < 0)


def _variations_at(chain: list[QPoly], x: Fraction) -> int:
    signs = []
    for p in chain:
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * x + c
        signs.append(_sign(acc))
    return _variations(signs)


def _variations_at_inf(chain: list[QPoly], positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            signs.append(0)
            continue
        s = _sign(p[-1])
        if not positive and (len(p) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def sturm_real_root_count(a: IntPoly) -> int:
    """Exact count of distinct real roots; requires squarefree input."""
    if a.degree < 1:
        raise ValueError("root counting needs degree >= 1")
    if not is_squarefree(a):
        raise ValueError("non-squarefree input to Sturm root count")
    chain = sturm_chain(a)
    return _variations_at_inf(chain, positive=False) - _variations_at_inf(chain, positive=True)


def cauchy_root_bound(a: IntPoly) -> Fraction:
    """All real roots of a lie in (-B, B) for B = 1 + max |c_i / lc|."""
    if a.is_zero:
        raise ValueError("zero polynomial")
    lead = abs(a.lc)
    m = max((abs(c) for c in a.coeffs[:-1]), default=0)
    return Fraction(1) + Fraction(m, lead)


def count_roots_in(a: IntPoly, chain: list[QPoly], lo: Fraction, hi: Fraction) -> int:
    """Roots in the half-open interval (lo, hi]; endpoints must be non-roots
    of a for the usual closed/open reading to be irrelevant here."""
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def isolate_real_roots(a: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals (lo, hi], one distinct real root each.

    Requires squarefree input (enforced), so bisection on Sturm counts
    terminates.
    """
    if not is_squarefree(a):
        raise ValueError("non-squarefree input to root isolation")
    chain = sturm_chain(a)
    bound = cauchy_root_bound(a)
    total = count_roots_in(a, chain, -bound, bound)
    out: list[tuple[Fraction, Fraction]] = []

    def recurse(lo: Fraction, hi: Fraction, k: int) -> None:
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while a(mid) == 0:
            # Nudge the split point off a root so interval counts stay exact.
            mid = (lo + mid) / 2
        left = count_roots_in(a, chain, lo, mid)
        recurse(lo, mid, left)
        recurse(mid, hi, k - left)

    recurse(-bound, bound, total)
    out.sort()
    return out


def refine_root(a: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval (sign change at the endpoints is NOT
    assumed; Sturm counts drive the split) down to the requested width."""
    chain = sturm_chain(a)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if a(mid) == 0:
            eps = (hi - lo) / 4
            return (mid - eps, mid + eps)
        if count_roots_in(a, chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


# ---------------------------------------------------------------------------
# Polynomials over F_p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p; coeffs reduced into [0, p), lowest degree first."""

    p: int
    coeffs: tuple[int, ...]

    @staticmethod
    def of(p: int, coeffs: Iterable[int]) -> "ModPoly":
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return ModPoly(p, tuple(cs))

    @staticmethod
    def from_intpoly(a: IntPoly, p: int) -> "ModPoly":
        return ModPoly.of(p, a.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


def mp_add(a: ModPoly, b: ModPoly) -> ModPoly:
    p = a.p
    n = max(len(a.coeffs), len(b.coeffs))
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i] = c
    for i, c in enumerate(b.coeffs):
        out[i] = (out[i] + c) % p
    return ModPoly.of(p, out)


def mp_sub(a: ModPoly, b: ModPoly) -> ModPoly:
    return mp_add(a, ModPoly.of(a.p, (-c for c in b.coeffs)))


def mp_mul(a: ModPoly, b: ModPoly) -> ModPoly:
    p = a.p
    if a.is_zero or b.is_zero:
        return ModPoly(p, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return ModPoly.of(p, out)


def mp_divmod(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly]:
    p = a.p
    if b.is_zero:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    inv = pow(b.coeffs[-1], -1, p)
    rem = list(a.coeffs)
    q = [0] * max(0, len(rem) - len(b.coeffs) + 1)
    while len(rem) >= len(b.coeffs):
        if rem[-1] % p == 0:
            rem.pop()
            continue
        k = (rem[-1] * inv) % p
        d = len(rem) - len(b.coeffs)
        q[d] = k
        for i, bc in enumerate(b.coeffs):
            rem[d + i] = (rem[d + i] - k * bc) % p
        while rem and rem[-1] % p == 0:
            rem.pop()
    return ModPoly.of(p, q), ModPoly.of(p, rem)


def mp_mod(a: ModPoly, b: ModPoly) -> ModPoly:
    return mp_divmod(a, b)[1]


def mp_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    while not b.is_zero:
        a, b = b, mp_mod(a, b)
    if not a.is_zero:
        inv = pow(a.coeffs[-1], -1, a.p)
        a = ModPoly.of(a.p, (c * inv for c in a.coeffs))
    return a


def mp_monic(a: ModPoly) -> ModPoly:
    if a.is_zero:
        return a
    inv = pow(a.coeffs[-1], -1, a.p)
    return ModPoly.of(a.p, (c * inv for c in a.coeffs))


def mp_pow_mod(base: ModPoly, e: int, modulus: ModPoly) -> ModPoly:
    result = ModPoly.of(base.p, [1])
    base = mp_mod(base, modulus)
    while e > 0:
        if e & 1:
            result = mp_mod(mp_mul(result, base), modulus)
        base = mp_mod(mp_mul(base, base), modulus)
        e >>= 1
    return result


def mp_derivative(a: ModPoly) -> ModPoly:
    return ModPoly.of(a.p, (i * c for i, c in enumerate(a.coeffs) if i > 0))


def _mp_x(p: int) -> ModPoly:
    return ModPoly.of(p, [0, 1])


def _mp_frobenius_iterate(modulus: ModPoly, k: int) -> ModPoly:
    """x^(p^k) mod modulus, by k successive p-th powerings."""
    h = _mp_x(modulus.p)
    for _ in range(k):
        h = mp_pow_mod(h, modulus.p, modulus)
    return h


def mp_is_irreducible(g: ModPoly) -> bool:
    """Rabin irreducibility test: x^(p^d) = x mod g and, for each prime r | d,
    gcd(x^(p^(d/r)) - x, g) = 1."""
    d = g.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    p = g.p
    x = _mp_x(p)
    h = _mp_frobenius_iterate(g, d)
    if not mp_sub(h, mp_mod(x, g)).is_zero:
        return False
    dd = d
    primes = []
    f = 2
    while f * f <= dd:
        if dd % f == 0:
            primes.append(f)
            while dd % f == 0:
                dd //= f
        f += 1
    if dd > 1:
        primes.append(dd)
    for r in primes:
        h = _mp_frobenius_iterate(g, d // r)
        if mp_gcd(mp_sub(h, x), g).degree != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Factor degree data mod p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorDegrees:
    """Degrees with multiplicities of the irreducible factors of a mod p.

    pairs has one entry (degree, multiplicity) per irreducible factor.
    factors carries the monic irreducible factor polynomials themselves, but
    only when a mod p is squarefree (all multiplicities 1); otherwise None.
    """

    pairs: tuple[tuple[int, int], ...]
    factors: Optional[tuple[ModPoly, ...]]

    @property
    def squarefree(self) -> bool:
        return self.factors is not None


def _mp_pth_root(a: ModPoly) -> ModPoly:
    """For a(x) = b(x^p) over F_p, return b; Frobenius fixes F_p pointwise."""
    p = a.p
    return ModPoly.of(p, tuple(a.coeffs[i] for i in range(0, len(a.coeffs), p)))


def _squarefree_parts(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Squarefree decomposition over F_p: f = prod g_i^m_i with g_i squarefree,
    pairwise coprime; returns [(g_i, m_i)] for nonconstant g_i."""
    p = f.p
    out: list[tuple[ModPoly, int]] = []
    f = mp_monic(f)
    if f.degree <= 0:
        return out
    fp = mp_derivative(f)
    if fp.is_zero:
        inner = _squarefree_parts(_mp_pth_root(f))
        return [(g, p * m) for g, m in inner]
    c = mp_gcd(f, fp)
    w = mp_divmod(f, c)[0]
    i = 1
    while w.degree > 0:
        y = mp_gcd(w, c)
        z = mp_divmod(w, y)[0]
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = mp_divmod(c, y)[0]
        i += 1
    if c.degree > 0:
        inner = _squarefree_parts(_mp_pth_root(c))
        out.extend((g, p * m) for g, m in inner)
    return out


def _distinct_degree(g: ModPoly) -> list[tuple[int, ModPoly]]:
    """DDF on squarefree monic g: [(d, product of the degree-d factors)]."""
    p = g.p
    out: list[tuple[int, ModPoly]] = []
    h = _mp_x(p)
    d = 0
    while g.degree > 0 and g.degree >= 2 * (d + 1):
        d += 1
        h = mp_pow_mod(h, p, g)
        gd = mp_gcd(mp_sub(h, _mp_x(p)), g)
        if gd.degree > 0:
            out.append((d, gd))
            g = mp_divmod(g, gd)[0]
            h = mp_mod(h, g)
    if g.degree > 0:
        out.append((g.degree, g))
    return out


def _equal_degree_factor(g: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Cantor-Zassenhaus split of a squarefree product of degree-d factors."""
    p = g.p
    n = g.degree
    if n == d:
        return [mp_monic(g)]
    while True:
        r = ModPoly.of(p, [rng.randrange(p) for _ in range(n)])
        if r.degree < 1:
            continue
        if p == 2:
            # Trace map over F_{2^d}: T(r) = r + r^2 + ... + r^(2^(d-1)).
            t = mp_mod(r, g)
            acc = t
            for _ in range(d - 1):
                t = mp_mod(mp_mul(t, t), g)
                acc = mp_add(acc, t)
            candidate = mp_gcd(acc, g)
        else:
            s = mp_pow_mod(r, (p ** d - 1) // 2, g)
            candidate = mp_gcd(mp_sub(s, ModPoly.of(p, [1])), g)
        if 0 < candidate.degree < n:
            rest = mp_divmod(g, candidate)[0]
            return _equal_degree_factor(candidate, d, rng) + _equal_degree_factor(rest, d, rng)


def factor_mod_p(a: IntPoly, p: int) -> tuple[tuple[ModPoly, int], ...]:
    """Complete factorization of a mod p into monic irreducibles with
    multiplicities (the leading unit is dropped).  Deterministically seeded."""
    if p < 2:
        raise ValueError("modulus must be a prime")
    abar = ModPoly.from_intpoly(a, p)
    if abar.is_zero:
        raise ValueError("polynomial vanishes mod p")
    rng = random.Random(0x5EED ^ (p * 1000003 + abar.degree))
    out: list[tuple[ModPoly, int]] = []
    for g, mult in _squarefree_parts(abar):
        for d, prod in _distinct_degree(g):
            for irr in _equal_degree_factor(prod, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return tuple(out)


def factor_degrees_mod_p(a: IntPoly, p: int) -> FactorDegrees:
    """Degrees (with multiplicities) of the irreducible factors of a mod p.

    Full factor polynomials are computed only in the squarefree case, which
    is the one needing residue-field arithmetic downstream.
    """
    if p < 2:
        raise ValueError("modulus must be a prime")
    abar = ModPoly.from_intpoly(a, p)
    if abar.is_zero:
        raise ValueError("polynomial vanishes mod p")
    if abar.degree == 0:
        return FactorDegrees(pairs=(), factors=())
    parts = _squarefree_parts(abar)
    pairs: list[tuple[int, int]] = []
    squarefree = all(m == 1 for _, m in parts)
    factors: list[ModPoly] = []
    rng = random.Random(0x5EED ^ (p * 1000003 + abar.degree))
    for g, mult in parts:
        for d, prod in _distinct_degree(g):
            count = prod.degree // d
            pairs.extend([(d, mult)] * count)
            if squarefree:
                factors.extend(_equal_degree_factor(prod, d, rng))
    pairs.sort()
    if squarefree:
        factors.sort(key=lambda f: (f.degree, f.coeffs))
        return FactorDegrees(pairs=tuple(pairs), factors=tuple(factors))
    return FactorDegrees(pairs=tuple(pairs), factors=None)


def is_square_in_residue_field(g: ModPoly, e: ModPoly) -> str:
    """Euler test for e in F_p[x]/(g): returns "square", "nonsquare" or "zero".

    g must be irreducible; this is verified up front by the distinct-degree
    test rather than trusted (a reducible g silently corrupts the verdict).
    In characteristic 2 the Frobenius is bijective, so every element is a
    square; callers needing split/inert data at p = 2 use the Artin-Schreier
    trace test in number_field instead.
    """
    if not mp_is_irreducible(g):
        raise ValueError("residue-field modulus is reducible")
    p = g.p
    e = mp_mod(ModPoly.of(p, e.coeffs), g)
    if e.is_zero:
        return "zero"
    if p == 2:
        return "square"
    d = g.degree
    s = mp_pow_mod(e, (p ** d - 1) // 2, g)
    if s.coeffs == (1,):
        return "square"
    if s.coeffs == (p - 1,):
        return "nonsquare"
    raise ArithmeticError("Euler criterion returned a non-unit value")
