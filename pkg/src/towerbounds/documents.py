"""Line-oriented input documents describing a tower construction.

The format is `key: value` with `#` comments and blank lines ignored.
Coefficient vectors are written from the highest power down, exactly as
one reads a polynomial, and reversed here into the lowest-first order the
arithmetic layer uses.  Element names declared with `pi <name>:` can be
referenced from `eta_factors` and `aug_factors` lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional

from .reference import BUNDLED_DOCUMENTS, BUNDLED_TABLE

_VECTOR_KEYS = ("poly", "eta", "beta", "gamma", "aug", "rho", "sigma")
_NAME_LIST_KEYS = ("eta_factors", "aug_factors")


@dataclass(frozen=True)
class InputDocument:
    """Parsed construction data: the base polynomial, the element whose
    square root generates the extension, optional witnesses, named prime
    elements, and the options for the bound computation."""

    poly: tuple[int, ...]
    eta: tuple[int, ...]
    ell: int = 2
    beta: Optional[tuple[int, ...]] = None
    gamma: Optional[tuple[int, ...]] = None
    aug: Optional[tuple[int, ...]] = None
    rho: Optional[tuple[int, ...]] = None
    sigma: Optional[tuple[int, ...]] = None
    primes: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    eta_factors: tuple[str, ...] = ()
    aug_factors: tuple[str, ...] = ()
    t_norms: tuple[int, ...] = ()
    kind: Optional[str] = None
    lp_q: int = 100
    tolerance: Optional[float] = None

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


def expected_norm_from_name(name: str) -> int:
    """The norm a named prime element claims: the digits in its name."""
    digits = "".join(ch for ch in name if ch.isdigit())
    if not digits:
        raise ValueError(f"prime element name {name!r} carries no norm")
    return int(digits)


def _parse_int_vector(key: str, value: str) -> tuple[int, ...]:
    try:
        highest_first = tuple(int(tok) for tok in value.split())
    except ValueError:
        raise ValueError(f"{key}: coefficients must be integers") from None
    if not highest_first:
        raise ValueError(f"{key}: empty coefficient list")
    return tuple(reversed(highest_first))


def parse_document(text: str) -> InputDocument:
    entries: dict[str, str] = {}
    primes: dict[str, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, value = (part.strip() for part in line.split(":", 1))
        if key.startswith("pi "):
            name = key[3:].strip()
            if not name or " " in name:
                raise ValueError(f"line {lineno}: bad prime element name")
            if name in primes:
                raise ValueError(f"line {lineno}: duplicate prime element {name!r}")
            primes[name] = _parse_int_vector(key, value)
            continue
        if key in entries:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value

    known = set(_VECTOR_KEYS) | set(_NAME_LIST_KEYS) | {
        "ell", "t_norms", "kind", "lp_q", "tolerance"}
    unknown = set(entries) - known
    if unknown:
        raise ValueError(f"unknown keys: {', '.join(sorted(unknown))}")
    for required in ("poly", "eta"):
        if required not in entries:
            raise ValueError(f"missing required key {required!r}")

    vectors = {k: _parse_int_vector(k, entries[k])
               for k in _VECTOR_KEYS if k in entries}
    poly = vectors.pop("poly")
    degree = len(poly) - 1
    if degree < 2:
        raise ValueError("poly must have degree at least 2")
    if poly[-1] != 1:
        raise ValueError("poly must be monic")
    for k, vec in vectors.items():
        if len(vec) != degree:
            raise ValueError(f"{k}: expected {degree} coordinates, got {len(vec)}")
    for name, vec in primes.items():
        if len(vec) != degree:
            raise ValueError(f"pi {name}: expected {degree} coordinates")

    name_lists = {k: tuple(entries[k].split()) for k in _NAME_LIST_KEYS
                  if k in entries}
    for k, names in name_lists.items():
        for name in names:
            if name not in primes:
                raise ValueError(f"{k} references undeclared element {name!r}")

    ell = int(entries.get("ell", "2"))
    if ell != 2:
        raise ValueError("only ell = 2 towers are supported")
    t_norms = tuple(int(tok) for tok in entries.get("t_norms", "").split())
    if any(q < 2 for q in t_norms):
        raise ValueError("t_norms entries must be at least 2")
    kind = entries.get("kind")
    if kind is not None and kind not in ("totally_real", "totally_complex"):
        raise ValueError(f"kind must be totally_real or totally_complex, got {kind!r}")
    lp_q = int(entries.get("lp_q", "100"))
    if lp_q < 1:
        raise ValueError("lp_q must be positive")
    tolerance = float(entries["tolerance"]) if "tolerance" in entries else None
    if tolerance is not None and tolerance <= 0:
        raise ValueError("tolerance must be positive")

    return InputDocument(
        poly=poly, eta=vectors.pop("eta"), ell=ell,
        beta=vectors.get("beta"), gamma=vectors.get("gamma"),
        aug=vectors.get("aug"), rho=vectors.get("rho"),
        sigma=vectors.get("sigma"), primes=primes,
        eta_factors=name_lists.get("eta_factors", ()),
        aug_factors=name_lists.get("aug_factors", ()),
        t_norms=t_norms, kind=kind, lp_q=lp_q, tolerance=tolerance)


def load_document(path) -> InputDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def parse_coefficient_set(text: str) -> dict:
    """Custom coefficients for the linear constraint: lines `R: <decimal>`,
    `C: <decimal>`, or `<prime power>: <decimal>`, parsed exactly."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key_s, value = (part.strip() for part in line.split(":", 1))
        key: object
        if key_s in ("R", "C"):
            key = key_s
        else:
            try:
                key = int(key_s)
            except ValueError:
                raise ValueError(f"line {lineno}: bad coefficient key {key_s!r}") from None
            if key < 2:
                raise ValueError(f"line {lineno}: norms start at 2")
        if key in out:
            raise ValueError(f"line {lineno}: duplicate coefficient {key_s!r}")
        try:
            out[key] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: bad coefficient value {value!r}") from None
        if out[key] < 0:
            raise ValueError(f"line {lineno}: coefficients must be nonnegative")
    return out


def load_coefficient_set(path) -> dict:
    return parse_coefficient_set(Path(path).read_text(encoding="utf-8"))


def bundled_document_text(example: int) -> str:
    try:
        name = BUNDLED_DOCUMENTS[example]
    except KeyError:
        raise ValueError(f"no bundled example {example}") from None
    return (resources.files("towerbounds") / "data" / name).read_text(encoding="utf-8")


def bundled_table_text() -> str:
    return (resources.files("towerbounds") / "data" / BUNDLED_TABLE).read_text(
        encoding="utf-8")
