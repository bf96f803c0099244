"""Exact evaluation of bondage upper-bound formulas.

Every integer term here is computed with exact arithmetic: cubic-root floors
by an integer scan, square-root floors and ceilings by integer-square-root
predicates, and rational thresholds by cleared-denominator comparisons.
Floating point appears only in cross-check bisection values and in the
logarithmic genus/order clauses where the source formulas are themselves
stated over reals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

__all__ = [
    "CubicSpec",
    "improved_bound_cubic",
    "baseline_bound_cubic",
    "floor_largest_root",
    "largest_root_bisect",
    "closed_form_root",
    "cubic_term",
    "cubic_term_baseline",
    "bound_cubic",
    "bound_sqrt",
    "bound_sqrt_baseline",
    "bound_girth",
    "bound_girth_baseline",
    "bound_triangle_free",
    "bound_order",
    "bound_size",
    "bound_genus",
    "bound_genus_order",
    "order_lower_bound",
    "size_lower_bound",
    "order_term",
    "size_term",
    "size_threshold",
    "order_threshold_exceeded",
    "sign_family_chi",
    "sign_family_order",
    "sign_family_size",
    "comparison_table",
    "BoundEntry",
    "BoundReport",
    "build_bound_report",
    "ORDER_RATIO_BOUNDS",
    "SIZE_RATIO_BOUNDS",
    "GENUS_ORDER_THRESHOLD_SLACK",
]

# Ratio-threshold constants: the additive term guaranteed once
# n >= ratio * (-chi), respectively m > ratio * (-chi).  Exact rationals.
ORDER_RATIO_BOUNDS: tuple[tuple[Fraction, int], ...] = (
    (Fraction(1), 9),
    (Fraction(2), 6),
    (Fraction(3), 5),
    (Fraction(4), 4),
    (Fraction(8), 3),
)
SIZE_RATIO_BOUNDS: tuple[tuple[Fraction, int], ...] = (
    (Fraction(6), 8),
    (Fraction(33, 5), 7),
    (Fraction(15, 2), 6),
    (Fraction(9), 5),
    (Fraction(12), 4),
    (Fraction(21), 3),
)

GENUS_ORDER_THRESHOLD_SLACK = 1e-9


def _require_chi_nonpositive(chi: int) -> None:
    if chi > 0:
        raise ValueError(f"formula requires chi <= 0, got {chi}")


@dataclass(frozen=True)
class CubicSpec:
    """Monic integer cubic z^3 + a*z^2 + b*z + c with one nonnegative real root.

    Uniqueness follows from the coefficient signs: the root sum is -a < 0 and
    the root product is -c > 0, so either exactly one real root is positive
    (two negative), or the only real root is positive (complex pair has
    positive norm).  Either way the cubic is negative on [0, root) and
    positive beyond, which is what the integer floor scan relies on.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (self.a > 0 and self.c < 0):
            raise ValueError(
                "cubic must have root sum < 0 and root product > 0 "
                f"(need a > 0 and c < 0, got a={self.a}, c={self.c})"
            )

    def __call__(self, z):
        return ((z + self.a) * z + self.b) * z + self.c


def improved_bound_cubic(chi: int) -> CubicSpec:
    """z^3 + z^2 + (3*chi - 8)*z + 9*chi - 12, the sharper additive term."""
    _require_chi_nonpositive(chi)
    return CubicSpec(1, 3 * chi - 8, 9 * chi - 12)


def baseline_bound_cubic(chi: int) -> CubicSpec:
    """z^3 + 2*z^2 + (6*chi - 7)*z + 18*chi - 24, the earlier cubic term."""
    _require_chi_nonpositive(chi)
    return CubicSpec(2, 6 * chi - 7, 18 * chi - 24)


def floor_largest_root(cubic: CubicSpec) -> int:
    """Floor of the unique nonnegative real root, by exact integer scan."""
    z = 0
    while cubic(z + 1) <= 0:
        z += 1
    return z


def largest_root_bisect(cubic: CubicSpec, tol: float = 1e-12) -> float:
    """Bisection value of the nonnegative root, bracketed by sign change."""
    lo = 0.0
    hi = 1.0
    while cubic(hi) <= 0:
        hi *= 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if cubic(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return lo


def closed_form_root(chi: int) -> float:
    """Radical formula for the sharper cubic's root, cross-check only.

    Evaluated over the complex numbers with principal branches; the
    imaginary residue must stay below 1e-9.  Bisection remains the source
    of truth because cube-root branch choices are delicate.
    """
    _require_chi_nonpositive(chi)
    rad = 9 * chi**3 + 69 * chi**2 - 125 * chi
    d = (9 * cmath.sqrt(complex(rad)) - 108 * chi + 125) ** (1 / 3)
    value = (d + (25 - 9 * chi) / d - 1) / 3
    if abs(value.imag) > 1e-9:
        raise ArithmeticError(f"imaginary residue {value.imag} too large at chi={chi}")
    return value.real


def cubic_term(chi: int) -> int:
    """Additive term floor(t): t the largest root of the improved cubic."""
    return floor_largest_root(improved_bound_cubic(chi))


def cubic_term_baseline(chi: int) -> int:
    """Additive term floor(r): r the largest root of the baseline cubic."""
    return floor_largest_root(baseline_bound_cubic(chi))


def bound_cubic(delta: int, chi: int) -> int:
    return delta + cubic_term(chi)


def bound_sqrt(delta: int, chi: int) -> int:
    """delta + 1 + floor(sqrt(4 - 3*chi)), exact integer square root."""
    _require_chi_nonpositive(chi)
    return delta + 1 + math.isqrt(4 - 3 * chi)


def _ceil_sqrt_minus_half(v: int) -> int:
    """Smallest integer q with q >= sqrt(v) - 1/2, i.e. (2q+1)^2 >= 4v."""
    q = max(0, math.isqrt(v) - 1)
    while (2 * q + 1) ** 2 < 4 * v:
        q += 1
    return q


def bound_sqrt_baseline(delta: int, chi: int) -> int:
    """delta + ceil(sqrt(12 - 6*chi) - 1/2), the weaker closed form."""
    _require_chi_nonpositive(chi)
    return delta + _ceil_sqrt_minus_half(12 - 6 * chi)


def _floor_by_predicate(pred: Callable[[int], bool], estimate: int) -> int:
    """Largest nonnegative integer satisfying a monotone predicate.

    ``pred`` must be true on 0..floor and false beyond; ``estimate`` only
    seeds the scan and never affects the result.
    """
    z = max(0, estimate)
    while z > 0 and not pred(z):
        z -= 1
    while pred(z + 1):
        z += 1
    return z


def bound_girth(delta: int, chi: int, g: int) -> int:
    """delta + floor(s) with s = (2 + sqrt(g^2 - g*(g-2)*chi)) / (g - 2)."""
    _require_chi_nonpositive(chi)
    if not isinstance(g, int) or g < 3:
        raise ValueError(f"girth must be a finite integer >= 3, got {g}")
    rad = g * g - g * (g - 2) * chi

    def pred(z: int) -> bool:
        w = (g - 2) * z - 2
        return w <= 0 or w * w <= rad

    est = int((2 + math.sqrt(rad)) / (g - 2))
    return delta + _floor_by_predicate(pred, est)


def bound_girth_baseline(delta: int, chi: int, g: int) -> int:
    """delta + floor((sqrt(8g(2-g)chi + (3g-2)^2) - (g-6)) / (2(g-2)))."""
    _require_chi_nonpositive(chi)
    if not isinstance(g, int) or g < 3:
        raise ValueError(f"girth must be a finite integer >= 3, got {g}")
    rad = 8 * g * (2 - g) * chi + (3 * g - 2) ** 2

    def pred(z: int) -> bool:
        w = 2 * (g - 2) * z + (g - 6)
        return w <= 0 or w * w <= rad

    est = int((math.sqrt(rad) - (g - 6)) / (2 * (g - 2)))
    return delta + _floor_by_predicate(pred, est)


def bound_triangle_free(delta: int, chi: int) -> int:
    """delta + 1 + floor(sqrt(4 - 2*chi)); equals the girth bound at g = 4."""
    _require_chi_nonpositive(chi)
    return delta + 1 + math.isqrt(4 - 2 * chi)


def order_term(chi: int, n: int) -> int:
    """floor(c) for c = 1/2 - 3*chi/n + sqrt(25/4 - 21*chi/n + 9*chi^2/n^2).

    The comparison is done with cleared denominators: z <= c iff
    w = 2*n*z - n + 6*chi is nonpositive or w^2 <= 25n^2 - 84n*chi + 36chi^2.
    """
    _require_chi_nonpositive(chi)
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    rad = 25 * n * n - 84 * n * chi + 36 * chi * chi

    def pred(z: int) -> bool:
        w = 2 * n * z - n + 6 * chi
        return w <= 0 or w * w <= rad

    est = int(0.5 - 3 * chi / n + math.sqrt(25 / 4 - 21 * chi / n + 9 * chi * chi / (n * n)))
    return _floor_by_predicate(pred, est)


def bound_order(delta: int, chi: int, n: int) -> int:
    return delta + order_term(chi, n)


def size_threshold(chi: int, m: int) -> Fraction:
    """Exact c = 3 - 18*chi / (m + 3*chi); requires m > -3*chi >= 0."""
    _require_chi_nonpositive(chi)
    if m + 3 * chi <= 0:
        raise ValueError(f"size bound needs m > {-3 * chi}, got m={m}")
    return Fraction(3) + Fraction(-18 * chi, m + 3 * chi)


def size_term(chi: int, m: int) -> int:
    c = size_threshold(chi, m)
    return c.numerator // c.denominator


def bound_size(delta: int, chi: int, m: int) -> int:
    return delta + size_term(chi, m)


def bound_genus(delta: int, h: int | None = None, k: int | None = None) -> int:
    """min(delta + h + 2, delta + k + 1) over the genus terms supplied."""
    terms = []
    if h is not None:
        if h < 0:
            raise ValueError("orientable genus must be >= 0")
        terms.append(delta + h + 2)
    if k is not None:
        if k < 1:
            raise ValueError("non-orientable genus must be >= 1")
        terms.append(delta + k + 1)
    if not terms:
        raise ValueError("at least one genus must be supplied")
    return min(terms)


@dataclass(frozen=True)
class ClauseBound:
    name: str
    additive_term: int
    applicable: bool
    threshold: str


def bound_genus_order(delta: int, n: int, h: int, k: int) -> list[ClauseBound]:
    """Six order-threshold clauses with logarithmic genus terms.

    Thresholds are compared in double precision with a 1e-9 slack; both
    genera must be at least 1 for the clauses to make sense.
    """
    if n < 1 or h < 1 or k < 1:
        raise ValueError("requires n >= 1, h >= 1, k >= 1")
    slack = GENUS_ORDER_THRESHOLD_SLACK
    lh = math.log(h)
    lk = math.log(k)
    clauses = [
        ("h_log2", math.ceil(lh * lh) + 3, n >= h - slack, "n >= h"),
        ("h_log", math.ceil(lh) + 3, n >= h**1.9 - slack, "n >= h^1.9"),
        ("h_const", 4, n >= h**2.5 - slack, "n >= h^2.5"),
        ("k_log2", math.ceil(lk * lk) + 2, n >= k / 6 - slack, "n >= k/6"),
        ("k_log", math.ceil(lk) + 3, n >= k**1.6 - slack, "n >= k^1.6"),
        ("k_const", 3, n >= k * k - slack, "n >= k^2"),
    ]
    return [
        ClauseBound(name=name, additive_term=delta + term, applicable=ok, threshold=thr)
        for name, term, ok, thr in clauses
    ]


def order_lower_bound(chi: int) -> float:
    """(3 + sqrt(17 - 8*chi)) / 2, a floor on the order of nontrivial graphs."""
    return (3 + math.sqrt(17 - 8 * chi)) / 2


def size_lower_bound(chi: int) -> float:
    """5/2 - chi + sqrt(17 - 8*chi)/2, a floor on the size."""
    return 2.5 - chi + math.sqrt(17 - 8 * chi) / 2


# ---------------------------------------------------------------------------
# Sign families: each triple (A, B, C) is simultaneously positive exactly
# beyond a single threshold, which is what the bound proofs hinge on.
# ---------------------------------------------------------------------------


def sign_family_chi(chi: int, z) -> tuple[bool, bool, bool]:
    a = z * z - 2 * z + 2 * chi - 3
    b = 20 * z**3 + 4 * z * z + 3 * (16 * chi - 41) * z + 96 * chi - 126
    c = z**3 + z * z + (3 * chi - 8) * z + 9 * chi - 12
    return (a > 0, b > 0, c > 0)


def sign_family_order(n: int, chi: int, z) -> tuple[bool, bool, bool]:
    a = n * z - 3 * n + 4 * chi
    b = 10 * n * z * z - (13 * n - 48 * chi) * z - 42 * n + 96 * chi
    c = n * z * z - (n - 6 * chi) * z - 6 * n + 18 * chi
    return (a > 0, b > 0, c > 0)


def sign_family_size(m: int, chi: int, z) -> tuple[bool, bool, bool]:
    a = (m + 2 * chi) * z - 3 * m + 2 * chi
    b = (5 * m + 12 * chi) * z - 14 * m + 24 * chi
    c = (m + 3 * chi) * z - 3 * m + 9 * chi
    return (a > 0, b > 0, c > 0)


def order_threshold_exceeded(n: int, chi: int, z: Fraction) -> bool:
    """Exact test of z > c for the order family, cleared denominators."""
    _require_chi_nonpositive(chi)
    w = 2 * n * z - n + 6 * chi
    return w > 0 and w * w > 25 * n * n - 84 * n * chi + 36 * chi * chi


# ---------------------------------------------------------------------------
# Comparison table of the two cubic terms
# ---------------------------------------------------------------------------


def comparison_table(chi_lo: int, chi_hi: int) -> list[tuple[int, int, int]]:
    """Rows (chi, baseline term, improved term) for chi_lo..chi_hi ascending."""
    if chi_hi > 0:
        raise ValueError("table is defined for chi <= 0")
    if chi_lo > chi_hi:
        raise ValueError("empty range")
    return [
        (chi, cubic_term_baseline(chi), cubic_term(chi))
        for chi in range(chi_lo, chi_hi + 1)
    ]


# ---------------------------------------------------------------------------
# Aggregated report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    name: str
    additive_term: int | None
    bound_value: int | None
    applicable: bool
    provenance: str


@dataclass(frozen=True)
class BoundReport:
    delta: int
    chi: int
    entries: tuple[BoundEntry, ...]
    details: dict[str, float] = field(default_factory=dict)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


_PROVENANCE = {
    "cubic": "delta + floor(t), t the largest real root of z^3+z^2+(3chi-8)z+9chi-12",
    "sqrt": "delta + 1 + floor(sqrt(4-3chi))",
    "cubic_baseline": "delta + floor(r), r the largest real root of z^3+2z^2+(6chi-7)z+18chi-24",
    "sqrt_baseline": "delta + ceil(sqrt(12-6chi) - 1/2)",
    "girth": "delta + floor((2+sqrt(g^2-g(g-2)chi))/(g-2)), g the girth",
    "girth_baseline": "delta + floor((sqrt(8g(2-g)chi+(3g-2)^2)-(g-6))/(2(g-2)))",
    "triangle_free": "delta + 1 + floor(sqrt(4-2chi)), girth >= 4",
    "order": "delta + floor(1/2 - 3chi/n + sqrt(25/4 - 21chi/n + 9chi^2/n^2))",
    "size": "delta + floor(3 - 18chi/(m+3chi)), m > -3chi",
    "genus": "min(delta+h+2, delta+k+1) over embeddable genera",
}


def build_bound_report(
    delta: int,
    chi: int,
    girth: int | float | None = None,
    n: int | None = None,
    m: int | None = None,
    h: int | None = None,
    k: int | None = None,
) -> BoundReport:
    """Evaluate every applicable closed-form bound for one parameter set.

    ``girth`` may be ``math.inf`` for forests; girth-based entries then stay
    inapplicable (the acyclic rule lives with the verification harness, not
    here).  Genus parameters are optional because they come from a separate
    search.
    """
    entries: list[BoundEntry] = []
    details: dict[str, float] = {}

    def add(name: str, term: int | None, applicable: bool) -> None:
        entries.append(
            BoundEntry(
                name=name,
                additive_term=term if applicable else None,
                bound_value=delta + term if applicable else None,
                applicable=applicable,
                provenance=_PROVENANCE[name],
            )
        )

    chi_ok = chi <= 0
    add("cubic", cubic_term(chi) if chi_ok else None, chi_ok)
    add("sqrt", bound_sqrt(0, chi) if chi_ok else None, chi_ok)
    add("cubic_baseline", cubic_term_baseline(chi) if chi_ok else None, chi_ok)
    add("sqrt_baseline", bound_sqrt_baseline(0, chi) if chi_ok else None, chi_ok)
    if chi_ok:
        details["cubic_root"] = largest_root_bisect(improved_bound_cubic(chi), 1e-9)
        details["baseline_cubic_root"] = largest_root_bisect(baseline_bound_cubic(chi), 1e-9)

    finite_girth = girth is not None and girth != math.inf and int(girth) >= 3
    if finite_girth and chi_ok:
        g = int(girth)
        add("girth", bound_girth(0, chi, g), True)
        add("girth_baseline", bound_girth_baseline(0, chi, g), True)
        details["girth_root"] = (2 + math.sqrt(g * g - g * (g - 2) * chi)) / (g - 2)
    else:
        add("girth", None, False)
        add("girth_baseline", None, False)
    triangle_free = girth is not None and (girth == math.inf or girth >= 4)
    add("triangle_free", bound_triangle_free(0, chi) if chi_ok and triangle_free else None,
        chi_ok and triangle_free)

    if n is not None and chi_ok:
        add("order", order_term(chi, n), True)
        details["order_threshold"] = (
            0.5 - 3 * chi / n + math.sqrt(25 / 4 - 21 * chi / n + 9 * chi * chi / (n * n))
        )
    else:
        add("order", None, False)
    if m is not None and chi_ok and m + 3 * chi > 0:
        add("size", size_term(chi, m), True)
        details["size_threshold"] = float(size_threshold(chi, m))
    else:
        add("size", None, False)
    if h is not None or k is not None:
        value = bound_genus(0, h, k)
        add("genus", value, True)
    else:
        add("genus", None, False)

    return BoundReport(delta=delta, chi=chi, entries=tuple(entries), details=details)
