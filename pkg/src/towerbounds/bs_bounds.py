"""Brauer-Siegel ratio bounds for asymptotically good tower families.

Contents: the explicit ratio formula over place densities, the basic
inequality satisfied by those densities under GRH, an exact-rational LP
that turns a place tally and an archimedean density interval into a
certified upper bound (with a reduced-cost certificate for the norms cut
off by the support bound), the residue formula and its kappa upper bound,
and the summary-table emitter.

All transcendental constants enter the LP as rationals rounded outward at
60 significant digits, in the direction that keeps the optimum a valid
upper bound; evaluation elsewhere runs at 60 decimal digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

import mpmath

from ._simplex import LpSolution, solve_max
from .number_field import GENUS_DPS, PlaceTally, factorize
from .tower_certificates import PhiInterval

SIG_DIGITS = 60
TAIL_EXPLICIT_TO = 400


# ---------------------------------------------------------------------------
# Outward-rounded constants
# ---------------------------------------------------------------------------

def _round_sig(x, direction: str) -> Fraction:
    """Round a positive value to SIG_DIGITS significant decimal digits,
    toward the requested direction ("down", "up", or "nearest")."""
    with mpmath.workdps(SIG_DIGITS + 20):
        v = mpmath.mpf(x) if not isinstance(x, Fraction) else (
            mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator))
        if v == 0:
            return Fraction(0)
        if v < 0:
            raise ValueError("only positive values are rounded here")
        exp10 = int(mpmath.floor(mpmath.log10(v)))
        shift = SIG_DIGITS - 1 - exp10
        scaled = v * mpmath.mpf(10) ** shift
        if direction == "down":
            n = int(mpmath.floor(scaled))
        elif direction == "up":
            n = int(mpmath.ceil(scaled))
        elif direction == "nearest":
            n = int(mpmath.nint(scaled))
        else:
            raise ValueError(f"unknown rounding direction {direction!r}")
    if shift >= 0:
        return Fraction(n, 10**shift)
    return Fraction(n * 10**(-shift))


_CONST_EXPRS = {
    # subtracted archimedean coefficients of the ratio formula
    "ratio_R": lambda: mpmath.log(2),
    "ratio_C": lambda: mpmath.log(2 * mpmath.pi),
    # archimedean coefficients of the basic inequality
    "budget_R": lambda: (mpmath.log(2 * mpmath.sqrt(2 * mpmath.pi))
                         + mpmath.pi / 4 + mpmath.euler / 2),
    "budget_C": lambda: mpmath.log(8 * mpmath.pi) + mpmath.euler,
}


def _const_mpf(name: str):
    return _CONST_EXPRS[name]()


def _const_fraction(name: str, direction: str) -> Fraction:
    with mpmath.workdps(SIG_DIGITS + 20):
        return _round_sig(_CONST_EXPRS[name](), direction)


def _budget_coeff(q: int, direction: str) -> Fraction:
    """log q / (sqrt(q) - 1), the finite-place coefficient of the basic
    inequality."""
    with mpmath.workdps(SIG_DIGITS + 20):
        return _round_sig(mpmath.log(q) / (mpmath.sqrt(q) - 1), direction)


def _objective_coeff(q: int, direction: str) -> Fraction:
    """log(q / (q - 1)), the finite-place coefficient of the ratio
    formula."""
    with mpmath.workdps(SIG_DIGITS + 20):
        return _round_sig(mpmath.log(mpmath.mpf(q) / (q - 1)), direction)


def _to_mpf(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / mpmath.mpf(v.denominator)
    return mpmath.mpf(v)


# ---------------------------------------------------------------------------
# Place-density vectors and the two formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiVector:
    """Sparse nonnegative density vector over {R, C} and prime powers."""

    entries: tuple[tuple[Union[str, int], object], ...]

    @staticmethod
    def of(source) -> "PhiVector":
        if isinstance(source, PhiVector):
            return source
        items = []
        for alpha, value in dict(source).items():
            if isinstance(alpha, str):
                if alpha not in ("R", "C"):
                    raise ValueError(f"unknown archimedean index {alpha!r}")
            else:
                if not isinstance(alpha, int) or alpha < 2 or len(factorize(alpha)) != 1:
                    raise ValueError(f"index {alpha!r} is not a prime power")
            if value < 0:
                raise ValueError(f"negative density at {alpha!r}")
            items.append((alpha, value))
        return PhiVector(entries=tuple(items))

    def get(self, alpha, default=0):
        for a, v in self.entries:
            if a == alpha:
                return v
        return default

    def items(self):
        return self.entries


def bs_ratio(phi) -> mpmath.mpf:
    """The ratio formula 1 + sum_q phi_q log(q/(q-1)) - phi_R log 2
    - phi_C log 2 pi, evaluated at 60 decimal digits."""
    phi = PhiVector.of(phi)
    with mpmath.workdps(GENUS_DPS):
        total = mpmath.mpf(1)
        for alpha, value in phi.items():
            v = _to_mpf(value)
            if alpha == "R":
                total -= v * _const_mpf("ratio_R")
            elif alpha == "C":
                total -= v * _const_mpf("ratio_C")
            else:
                total += v * mpmath.log(mpmath.mpf(alpha) / (alpha - 1))
        return total


def basic_inequality_lhs(phi) -> mpmath.mpf:
    """Left side of the GRH basic inequality:
    sum_q phi_q log q/(sqrt q - 1) + phi_R (log 2 sqrt(2 pi) + pi/4 +
    gamma/2) + phi_C (log 8 pi + gamma)."""
    phi = PhiVector.of(phi)
    with mpmath.workdps(GENUS_DPS):
        total = mpmath.mpf(0)
        for alpha, value in phi.items():
            v = _to_mpf(value)
            if alpha == "R":
                total += v * _const_mpf("budget_R")
            elif alpha == "C":
                total += v * _const_mpf("budget_C")
            else:
                total += v * mpmath.log(alpha) / (mpmath.sqrt(alpha) - 1)
        return total


# ---------------------------------------------------------------------------
# The LP upper bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TailCertificate:
    """Certificate that no norm above the support cutoff can improve the
    optimum: explicit reduced-cost checks up to TAIL_EXPLICIT_TO, then the
    closed-form bound dual * log q * (q-1)/sqrt(q) >= 1, whose left side
    increases in q."""

    valid: bool
    explicit_to: int
    budget_dual: Fraction
    detail: str


@dataclass(frozen=True)
class BsBounds:
    bsl: object
    bsu: object
    optimum: PhiVector
    binding: tuple[str, ...]
    tail: Optional[TailCertificate]

    def __post_init__(self) -> None:
        if not self.bsl <= self.bsu:
            raise ValueError("lower bound exceeds upper bound")


def _build_model(tally: PlaceTally, phi_int: PhiInterval, g_K, Q: int,
                 rounding: str = "outward", budget: Optional[Mapping] = None):
    """Assemble the exact LP: variables phi_q for the norms q <= Q with a
    place, the basic-inequality budget row with the archimedean term at the
    interval's lower endpoint, per-q support caps N_q/g_K, and one
    degree-sum row per rational prime at the interval's upper endpoint.

    rounding "outward" biases every constant so the optimum stays a valid
    upper bound; "nearest" is the audit mode.  budget optionally replaces
    individual budget-row coefficients (keys "R", "C", or prime powers)
    with exact rationals, used verbatim in both directions.
    """
    if phi_int.alpha not in ("R", "C"):
        raise ValueError("interval must be for R or C")
    down = "down" if rounding == "outward" else "nearest"
    up = "up" if rounding == "outward" else "nearest"
    kind = phi_int.alpha
    arch_mult = 2 if kind == "C" else 1  # phi_R + 2 phi_C with the other zero
    budget = dict(budget or {})

    def budget_coeff(q: int) -> Fraction:
        if q in budget:
            return Fraction(budget[q])
        return _budget_coeff(q, down)

    qs = sorted(q for q, cnt in tally.counts.items() if cnt > 0 and q <= Q)
    phi_lo = _round_sig(phi_int.lo, down) if phi_int.lo != 0 else Fraction(0)
    phi_hi = _round_sig(phi_int.hi, up)
    g_down = _round_sig(g_K, down)

    arch_budget = (Fraction(budget[kind]) if kind in budget
                   else _const_fraction("budget_" + kind, down))
    names = ["basic inequality"]
    rows = [[budget_coeff(q) for q in qs]]
    rhs = [1 - phi_lo * arch_budget]
    for i, q in enumerate(qs):
        row = [Fraction(0)] * len(qs)
        row[i] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(tally.counts[q]) / g_down)
        names.append(f"cap phi_{q}")
    by_p: dict[int, list[tuple[int, int]]] = {}
    for q in qs:
        (p, m), = factorize(q).items()
        by_p.setdefault(p, []).append((q, m))
    for p in sorted(by_p):
        row = [Fraction(0)] * len(qs)
        for q, m in by_p[p]:
            row[qs.index(q)] = Fraction(m)
        rows.append(row)
        rhs.append(arch_mult * phi_hi)
        names.append(f"degree sum p={p}")

    objective = [_objective_coeff(q, up) for q in qs]
    arch_const = 1 - phi_lo * _const_fraction("ratio_" + kind, down)
    return qs, objective, rows, rhs, names, phi_lo, arch_const


def _tail_certificate(budget_dual: Fraction, Q: int) -> TailCertificate:
    if budget_dual <= 0:
        return TailCertificate(False, TAIL_EXPLICIT_TO, budget_dual,
                               "basic inequality not binding; no dual bound on excluded norms")
    for q in range(Q + 1, TAIL_EXPLICIT_TO + 1):
        if len(factorize(q)) != 1:
            continue
        if _objective_coeff(q, "up") > budget_dual * _budget_coeff(q, "down"):
            return TailCertificate(False, TAIL_EXPLICIT_TO, budget_dual,
                                   f"norm {q} has positive reduced cost")
    # For q > TAIL_EXPLICIT_TO: log(q/(q-1)) <= 1/(q-1) and
    # log q/(sqrt q - 1) >= log q/sqrt q, so dual * log q (q-1)/sqrt q >= 1
    # suffices; the left side is increasing, so checking the boundary does.
    with mpmath.workdps(SIG_DIGITS + 20):
        boundary = _round_sig(
            mpmath.log(TAIL_EXPLICIT_TO) * (TAIL_EXPLICIT_TO - 1)
            / mpmath.sqrt(TAIL_EXPLICIT_TO), "down")
    if budget_dual * boundary < 1:
        return TailCertificate(False, TAIL_EXPLICIT_TO, budget_dual,
                               "closed-form tail bound fails at the boundary")
    return TailCertificate(True, TAIL_EXPLICIT_TO, budget_dual,
                           f"explicit checks to {TAIL_EXPLICIT_TO}, closed-form bound beyond")


def lp_upper_bound(tally: PlaceTally, phi_int: PhiInterval, g_K,
                   Q: int = 100, budget: Optional[Mapping] = None) -> BsBounds:
    """Certified bounds for the ratio along the tower.

    bsu maximizes sum phi_q log(q/(q-1)) + (1 - phi_arch log 2 or 2 pi)
    by exact simplex, with the archimedean density at the interval's lower
    endpoint in both the objective and the budget row, support caps
    N_q(K)/g_K, and degree-sum rows at the upper endpoint.  bsl evaluates
    the ratio formula with only the archimedean density, at the upper
    endpoint.  The tally must cover norms up to Q.  A custom budget
    coefficient set disables the tail certificate: the dual argument for
    norms beyond Q is only valid for the built-in constraint.
    """
    qs, objective, rows, rhs, names, phi_lo, arch_const = _build_model(
        tally, phi_int, g_K, Q, budget=budget)
    sol = solve_max(objective, rows, rhs)
    bsu_exact = arch_const + sol.value
    with mpmath.workdps(GENUS_DPS):
        bsu = _to_mpf(bsu_exact)
        bsl = bs_ratio({phi_int.alpha: phi_int.hi})
    optimum = {q: x for q, x in zip(qs, sol.x)}
    optimum[phi_int.alpha] = phi_lo
    binding = tuple(names[i] for i in sol.binding)
    if budget:
        tail = TailCertificate(False, TAIL_EXPLICIT_TO, sol.duals[0],
                               "custom coefficient set; tail not certified")
    else:
        tail = _tail_certificate(sol.duals[0], Q)
    return BsBounds(bsl=bsl, bsu=bsu, optimum=PhiVector.of(optimum),
                    binding=binding, tail=tail)


# ---------------------------------------------------------------------------
# Residue formula and kappa bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KappaInvariants:
    r1: int
    r2: int
    h: int
    R: object
    w: int
    D: int

    def __post_init__(self) -> None:
        if self.r1 < 0 or self.r2 < 0 or self.r1 + self.r2 < 1:
            raise ValueError("signature must be nonnegative with r1 + r2 >= 1")
        if self.h < 1 or self.w < 1 or self.D < 1 or not self.R > 0:
            raise ValueError("class data must be positive")


def residue_from_invariants(k: KappaInvariants) -> mpmath.mpf:
    """Residue of the zeta function at 1:
    2^r1 (2 pi)^r2 h R / (w sqrt(D))."""
    with mpmath.workdps(GENUS_DPS):
        num = mpmath.mpf(2)**k.r1 * (2 * mpmath.pi)**k.r2 * k.h * _to_mpf(k.R)
        return num / (k.w * mpmath.sqrt(k.D))


def kappa_upper_bound(n: int, D: int) -> mpmath.mpf:
    """Upper bound (e log D / (2(n-1)))^(n-1) for the residue."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    if D < 3:
        raise ValueError("|discriminant| must be at least 3")
    with mpmath.workdps(GENUS_DPS):
        return (mpmath.e * mpmath.log(D) / (2 * (n - 1)))**(n - 1)


# ---------------------------------------------------------------------------
# Summary table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableCell:
    text: str
    source: str  # "computed" or "literal"


@dataclass(frozen=True)
class TableRowOut:
    regime: str
    label: str
    cells: tuple[TableCell, ...]


@dataclass(frozen=True)
class TableReport:
    columns: tuple[str, ...]
    rows: tuple[TableRowOut, ...]
    text: str


def _format_floor(x, places: int = 4) -> str:
    scale = 10**places
    n = int(mpmath.floor(_to_mpf(x) * scale))
    return f"{n // scale}.{n % scale:0{places}d}"


def _format_ceil(x, places: int = 4) -> str:
    scale = 10**places
    n = int(mpmath.ceil(_to_mpf(x) * scale))
    return f"{n // scale}.{n % scale:0{places}d}"


def emit_table(computed: Mapping[str, BsBounds], config: Mapping) -> TableReport:
    """Render the summary table.

    config supplies the column headers and rows; a row cell that is None is
    filled from computed[row's computed_from] as "floor(bsl)-ceil(bsu)" at
    four decimals and marked computed, every other cell is echoed as a
    literal and flagged as not re-derived.
    """
    columns = tuple(config.get("columns", ()))
    rows_out: list[TableRowOut] = []
    for row in config.get("rows", ()):
        cells: list[TableCell] = []
        for cell in row["cells"]:
            if cell is None:
                key = row.get("computed_from")
                if key is None or key not in computed:
                    raise ValueError(f"row {row.get('label')!r} needs computed bounds {key!r}")
                bounds = computed[key]
                text = f"{_format_floor(bounds.bsl)}-{_format_ceil(bounds.bsu)}"
                cells.append(TableCell(text=text, source="computed"))
            else:
                cells.append(TableCell(text=str(cell), source="literal"))
        rows_out.append(TableRowOut(regime=row["regime"], label=row["label"],
                                    cells=tuple(cells)))

    header = ["regime", "family"] + list(columns)
    table_rows = [[r.regime, r.label] + [c.text + ("*" if c.source == "literal" else "")
                                         for c in r.cells]
                  for r in rows_out]
    widths = [max(len(str(line[i])) for line in [header] + table_rows)
              for i in range(len(header))]
    lines = [" | ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("-+-".join("-" * w for w in widths))
    for line in table_rows:
        lines.append(" | ".join(str(v).ljust(w) for v, w in zip(line, widths)))
    if rows_out:
        lines.append("* literal value from configuration, not re-derived")
    return TableReport(columns=columns, rows=tuple(rows_out), text="\n".join(lines))
