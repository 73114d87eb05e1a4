"""Grid verification suites: every closed formula against an independent route."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from math import comb

from .alexander import XI_TAU, XT, alexander_closed_form, alexander_via_determinant, family_gamma, symmetrize
from .braid import FamilyParams
from .classify import basic_classes, count_formula, lambda_closed_form, lambda_set
from .ring import LaurentPolynomial, dumps, loads
from .swcalc import collapse_count, elliptic_sw, sw_fiber_sum_general, sw_link_surgery

__all__ = ["SUITES", "SweepSpec", "CheckResult", "VerifyReport", "run_verify", "parse_range", "sw_branch_formula"]

SUITES = ("alexander", "count", "symmetry", "recurrence", "consistency")

Range = tuple[int, int]

# absolute lower bounds of each parameter
FLOORS = {"p": 1, "q": 2, "n": 1, "r": 1}


def parse_range(text: str) -> Range:
    """Parse ``"A..B"`` or ``"A"`` into an inclusive interval."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected A..B or a single integer") from None
    if a > b:
        raise ValueError(f"empty range {text!r}")
    return a, b


@dataclass(frozen=True)
class SweepSpec:
    suite: str = "all"
    p: Range | None = None
    q: Range | None = None
    n: Range | None = None
    r: Range | None = None

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES + ('all',))}")
        for name in FLOORS:
            rng = getattr(self, name)
            if rng is None:
                continue
            lo, hi = rng
            if lo > hi:
                raise ValueError(f"empty range for {name}: {lo}..{hi}")
            if lo < FLOORS[name]:
                raise ValueError(f"{name} must be >= {FLOORS[name]}, got {lo}..{hi}")
        if self.q is not None and self.q[1] > 20:
            raise ValueError(f"q is limited to <= 20, got {self.q[0]}..{self.q[1]}")

    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)

    def grid(self, name: str, default: Range, window: Range | None = None) -> range:
        lo, hi = getattr(self, name) or default
        if window is not None:
            lo, hi = max(lo, window[0]), min(hi, window[1])
        return range(lo, hi + 1)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    identity: str
    cell: tuple[tuple[str, int], ...]
    passed: bool
    counterexample: str | None = None

    def cell_str(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.cell)

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "identity": self.identity,
            "cell": dict(self.cell),
            "passed": self.passed,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def first_failure(self) -> CheckResult | None:
        return next((r for r in self.results if not r.passed), None)


def _poly_check(suite, identity, cell, lhs: LaurentPolynomial, rhs: LaurentPolynomial) -> CheckResult:
    if lhs == rhs:
        return CheckResult(suite, identity, tuple(cell.items()), True)
    return CheckResult(
        suite, identity, tuple(cell.items()), False, f"lhs={dumps(lhs)} rhs={dumps(rhs)}"
    )


def _int_check(suite, identity, cell, lhs: int, rhs: int) -> CheckResult:
    if lhs == rhs:
        return CheckResult(suite, identity, tuple(cell.items()), True)
    return CheckResult(suite, identity, tuple(cell.items()), False, f"lhs={lhs} rhs={rhs}")


def _mono(vs, exp, c=1):
    return LaurentPolynomial.monomial(vs, exp, c)


def sw_branch_formula(n: int, r: int, p: int, q: int) -> LaurentPolynomial:
    """SW of E(n,r)_{L_{p,q}} from the separate closed forms for p >= 2 and q >= 3, p = 1, and q = 2.

    Independent of the Alexander pipeline; used to cross-check it.
    """
    vs = XI_TAU
    xi_term = _mono(vs, (-1, 0)) - _mono(vs, (1, 0))
    xiq_term = _mono(vs, (-q, 0)) - _mono(vs, (q, 0))
    pre = xi_term ** (n - 1) * xiq_term ** (r - 1)
    if q == 2:
        bracket = _mono(vs, (-1, -(2 * p - 1))) + _mono(vs, (1, 2 * p - 1))
    elif p == 1:
        bracket = sum(
            (_mono(vs, (-(q - 3) + 2 * j, -(q - 3) + 2 * j)) for j in range(-1, q - 1)),
            LaurentPolynomial.zero(vs),
        )
    else:
        tau_sum = sum(
            (_mono(vs, (0, -(2 * p - 4) + 2 * i), (-1) ** i) for i in range(2 * p - 3)),
            LaurentPolynomial.zero(vs),
        )
        xitau_sum = sum(
            (_mono(vs, (-(q - 3) + 2 * j, -(q - 3) + 2 * j)) for j in range(q - 2)),
            LaurentPolynomial.zero(vs),
        )
        bracket = (
            _mono(vs, (-(q - 1), -(2 * p + q - 3)))
            + _mono(vs, (q - 1, 2 * p + q - 3))
            + tau_sum * xitau_sum
        )
    return pre * bracket


def _suite_alexander(spec: SweepSpec) -> Iterator[CheckResult]:
    s = "alexander"
    for p in spec.grid("p", (1, 8)):
        for q in spec.grid("q", (2, 8)):
            cell = {"p": p, "q": q}
            det = alexander_via_determinant(p, q)
            closed = alexander_closed_form(p, q)
            yield _poly_check(s, "determinant = closed form", cell, det, closed)
            at_x0 = LaurentPolynomial(XT, {e: c for e, c in det.terms.items() if e[0] == 0})
            yield _poly_check(s, "constant term at x=0 is 1", cell, at_x0, LaurentPolynomial.one(XT))
            if p >= 2 and q >= 3:
                yield _int_check(s, "term count = 2 + (2p-3)(q-2)", cell, len(det), 2 + (2 * p - 3) * (q - 2))


def _suite_count(spec: SweepSpec) -> Iterator[CheckResult]:
    s = "count"
    for n in spec.grid("n", (1, 4)):
        for p in spec.grid("p", (1, 10)):
            for q in spec.grid("q", (2, 8)):
                cell = {"n": n, "p": p, "q": q}
                enumerated = basic_classes(sw_link_surgery(FamilyParams(p=p, q=q, n=n, r=1))).count
                if p >= 2 and q >= 3:
                    yield _int_check(s, "basic class count = formula", cell, enumerated, count_formula(n, p, q))
                    lam = lambda_set(n, p, q).cardinality
                    yield _int_check(s, "#Lambda enumeration = closed form", cell, lam, lambda_closed_form(n, p, q))
                    yield _int_check(s, "count = #Lambda + 2n", cell, enumerated, lam + 2 * n)
                if p == 1:
                    yield _int_check(s, "p=1 count = qn", cell, enumerated, q * n)
                if q == 2:
                    yield _int_check(s, "q=2 count = 2n", cell, enumerated, 2 * n)


def _suite_symmetry(spec: SweepSpec) -> Iterator[CheckResult]:
    s = "symmetry"
    for p in spec.grid("p", (1, 6)):
        for q in spec.grid("q", (2, 6)):
            sym = symmetrize(p, q, alexander_closed_form(p, q))
            yield _poly_check(s, "symmetrized Alexander is palindromic", {"p": p, "q": q}, sym.mirror(), sym)
            for n in spec.grid("n", (1, 3)):
                for r in spec.grid("r", (1, 3)):
                    cell = {"n": n, "r": r, "p": p, "q": q}
                    sw = sw_link_surgery(FamilyParams(p=p, q=q, n=n, r=r)).poly
                    sign = (-1) ** (n + r)
                    yield _poly_check(s, "mirror(SW) = (-1)^(n+r) SW", cell, sw.mirror(), sw * sign)
                    a, b = basic_classes(sw), basic_classes(sw.mirror())
                    same = (a.coefficient_multiset, a.divisibility_multiset) == (
                        b.coefficient_multiset,
                        b.divisibility_multiset,
                    )
                    yield _int_check(s, "report multisets mirror-invariant", cell, int(same), 1)


def _suite_recurrence(spec: SweepSpec) -> Iterator[CheckResult]:
    s = "recurrence"
    xt = LaurentPolynomial.monomial(XT, (1, 1))
    for p in spec.grid("p", (2, 6), window=(2, 10**9)):
        for q in spec.grid("q", (3, 7), window=(3, 19)):
            cell = {"p": p, "q": q}
            d_prev = alexander_via_determinant(p, q - 1)
            d_cur = alexander_via_determinant(p, q)
            d_next = alexander_via_determinant(p, q + 1)
            label = "last-column expansion" if q >= 4 else "last-column expansion (q=3, direct)"
            yield _poly_check(s, label, cell, d_next, d_cur + xt * (d_cur - d_prev))
            if q >= 4:
                gamma = family_gamma(p, q)
                last = gamma[gamma.size - 1, gamma.size - 1]
                yield _int_check(s, "last diagonal entry of Gamma is 0", cell, len(last), 0)


def _suite_consistency(spec: SweepSpec) -> Iterator[CheckResult]:
    s = "consistency"
    for p in spec.grid("p", (1, 6)):
        for q in spec.grid("q", (2, 6)):
            for n in spec.grid("n", (1, 3)):
                for r in spec.grid("r", (1, 3)):
                    cell = {"n": n, "r": r, "p": p, "q": q}
                    sw = sw_link_surgery(FamilyParams(p=p, q=q, n=n, r=r)).poly
                    yield _poly_check(s, "single formula = case-by-case closed form", cell, sw, sw_branch_formula(n, r, p, q))
                    yield _poly_check(s, "JSON round trip", cell, loads(dumps(sw)), sw)
    for n in spec.grid("n", (2, 4), window=(2, 10**9)):
        for r in spec.grid("r", (1, 3)):
            for p in spec.grid("p", (1, 5)):
                for q in spec.grid("q", (2, 5)):
                    cell = {"n": n, "r": r, "p": p, "q": q}
                    general = sw_fiber_sum_general(elliptic_sw(n, "f"), "f", r, p, q).poly
                    link = sw_link_surgery(FamilyParams(p=p, q=q, n=n, r=r)).poly.rename({"xi": "f"})
                    yield _poly_check(s, "general fiber sum = link surgery", cell, general, link)
    for n in spec.grid("n", (2, 4), window=(2, 10**9)):
        e = elliptic_sw(n)
        binom = sum(
            (_mono(("f",), (2 * k - (n - 2),), (-1) ** k * comb(n - 2, k)) for k in range(n - 1)),
            LaurentPolynomial.zero(("f",)),
        )
        yield _poly_check(s, "SW(E(n)) binomial expansion", {"n": n}, e, binom)
        yield _int_check(s, "SW(E(n)) has n-1 terms", {"n": n}, len(e), n - 1)
    for q in spec.grid("q", (3, 5), window=(3, 10**9)):
        ps = list(spec.grid("p", (2, 10), window=(2, 10**9)))
        one = LaurentPolynomial.one(("f",))
        counts = [collapse_count(sw_fiber_sum_general(one, "f", 1, p, q))[1] for p in ps]
        increasing = all(a < b for a, b in zip(counts, counts[1:]))
        yield CheckResult(
            s,
            "collapsed term count strictly increasing in p",
            (("q", q), ("p_lo", ps[0] if ps else 0), ("p_hi", ps[-1] if ps else 0)),
            increasing,
            None if increasing else f"counts={counts}",
        )


_RUNNERS: dict[str, Callable[[SweepSpec], Iterator[CheckResult]]] = {
    "alexander": _suite_alexander,
    "count": _suite_count,
    "symmetry": _suite_symmetry,
    "recurrence": _suite_recurrence,
    "consistency": _suite_consistency,
}


def run_verify(spec: SweepSpec, stop_on_failure: bool = False) -> VerifyReport:
    report = VerifyReport()
    for name in spec.suites():
        for result in _RUNNERS[name](spec):
            report.results.append(result)
            if stop_on_failure and not result.passed:
                return report
    return report
