"""Basic classes and the invariants used to tell the manifolds apart."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .braid import FamilyParams
from .ring import LaurentPolynomial
from .swcalc import SWInvariant, sw_link_surgery

__all__ = [
    "BasicClassReport",
    "LatticeCount",
    "DistinguishResult",
    "divisibility",
    "basic_classes",
    "count_formula",
    "lambda_set",
    "lambda_closed_form",
    "distinguish_q2",
]


def divisibility(exp) -> int:
    """gcd of the absolute coordinates; the origin has divisibility 0."""
    return math.gcd(*(abs(a) for a in exp)) if exp else 0


@dataclass(frozen=True)
class BasicClassReport:
    variables: tuple[str, ...]
    classes: tuple[tuple[tuple[int, ...], int], ...]
    coefficient_multiset: tuple[int, ...]
    divisibility_multiset: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "vars": list(self.variables),
            "count": self.count,
            "classes": [
                {"exp": list(e), "coeff": str(c), "divisibility": divisibility(e)}
                for e, c in self.classes
            ],
            "coefficient_multiset": [str(c) for c in self.coefficient_multiset],
            "divisibility_multiset": list(self.divisibility_multiset),
        }


def basic_classes(sw: SWInvariant | LaurentPolynomial) -> BasicClassReport:
    """Enumerate the support of an SW polynomial.

    Multisets are sorted tuples.  Divisibilities are taken only over the
    classes with coefficient +-1.
    """
    poly = sw.poly if isinstance(sw, SWInvariant) else sw
    classes = tuple(poly.items())
    coeffs = tuple(sorted(abs(c) for _, c in classes))
    divs = tuple(sorted(divisibility(e) for e, c in classes if abs(c) == 1))
    return BasicClassReport(poly.variables, classes, coeffs, divs)


def _check_count_range(n: int, p: int, q: int) -> None:
    if n < 1 or p < 2 or q < 3:
        raise ValueError(f"formula holds for n >= 1, p >= 2, q >= 3; got n={n}, p={p}, q={q}")


def count_formula(n: int, p: int, q: int) -> int:
    """Number of basic classes of E(n,1)_{L_{p,q}} for p >= 2, q >= 3."""
    _check_count_range(n, p, q)
    return (2 * n + 2 * q - 6) * p + (q * n - 4 * n - 4 * q + 12)


@dataclass(frozen=True)
class LatticeCount:
    points: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def cardinality(self) -> int:
        return len(self.points)


def lambda_set(n: int, p: int, q: int) -> LatticeCount:
    """Brute-force image of the box under (i, j, k) -> (j - k, i + j)."""
    _check_count_range(n, p, q)
    pts = frozenset(
        (j - k, i + j)
        for i, j, k in itertools.product(range(2 * p - 3), range(q - 2), range(n))
    )
    return LatticeCount(pts)


def lambda_closed_form(n: int, p: int, q: int) -> int:
    _check_count_range(n, p, q)
    return (2 * p - 3) * (q - 2) * n - (2 * p - 4) * (q - 3) * (n - 1)


DISTINGUISHED = "distinguished"
NOT_SEPARATED = "not separated by these invariants"


@dataclass(frozen=True)
class DistinguishResult:
    n: int
    p1: int
    p2: int
    r: int
    report1: BasicClassReport
    report2: BasicClassReport
    verdict: str
    counts_differ: bool
    coefficients_differ: bool
    divisibilities_differ: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p1": self.p1,
            "p2": self.p2,
            "r": self.r,
            "verdict": self.verdict,
            "counts_differ": self.counts_differ,
            "coefficients_differ": self.coefficients_differ,
            "divisibilities_differ": self.divisibilities_differ,
            "report1": self.report1.to_dict(),
            "report2": self.report2.to_dict(),
        }


def choose_r(n: int, p1: int) -> int:
    if n % 2:
        return (2 * p1 + 1 - n) // 2
    return 2 * p1 - n // 2


def distinguish_q2(n: int, p1: int, p2: int) -> DistinguishResult:
    """Compare E(n, r)_{L_{p1,2}} and E(n, r)_{L_{p2,2}} for the standard r.

    The verdict is "distinguished" exactly when the divisibility multisets
    of the +-1 classes differ.  Equal invariants never imply diffeomorphic.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if not p2 >= 2:
        raise ValueError(f"need p2 >= 2, got p2={p2}")
    if not p1 > p2:
        raise ValueError(f"need p1 > p2, got p1={p1}, p2={p2}")
    if n % 2 and not 2 * p2 > n - 1:
        raise ValueError(f"odd n needs p2 > (n-1)/2, got p2={p2}, (n-1)/2={(n - 1) / 2}")
    if n % 2 == 0 and not n // 2 < 2 * p1:
        raise ValueError(f"even n needs n/2 < 2*p1 so that r >= 1, got n/2={n // 2}, 2*p1={2 * p1}")
    r = choose_r(n, p1)
    rep1 = basic_classes(sw_link_surgery(FamilyParams(p=p1, q=2, n=n, r=r)))
    rep2 = basic_classes(sw_link_surgery(FamilyParams(p=p2, q=2, n=n, r=r)))
    div_differ = rep1.divisibility_multiset != rep2.divisibility_multiset
    return DistinguishResult(
        n=n,
        p1=p1,
        p2=p2,
        r=r,
        report1=rep1,
        report2=rep2,
        verdict=DISTINGUISHED if div_differ else NOT_SEPARATED,
        counts_differ=rep1.count != rep2.count,
        coefficients_differ=rep1.coefficient_multiset != rep2.coefficient_multiset,
        divisibilities_differ=div_differ,
    )
