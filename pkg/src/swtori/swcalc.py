"""Seiberg-Witten invariants as Laurent polynomials.

``xi`` is the class of S^1 x meridian(axis), ``tau`` the class of
S^1 x meridian(closed braid).  For fiber sums with a general manifold X the
fiber class [F] is one of X's own ring variables and plays the role of xi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import XI_TAU, alexander_closed_form, symmetrize
from .braid import FamilyParams
from .ring import LaurentPolynomial

__all__ = [
    "SWInvariant",
    "LINK_SURGERY",
    "GENERAL_FIBER_SUM",
    "TAU",
    "elliptic_sw",
    "sw_link_surgery",
    "sw_fiber_sum_general",
    "collapse_count",
]

LINK_SURGERY = "link-surgery"
GENERAL_FIBER_SUM = "general-fiber-sum"
TAU = "tau"


@dataclass(frozen=True)
class SWInvariant:
    poly: LaurentPolynomial
    params: FamilyParams
    provenance: str
    fiber_var: str = "xi"


def _prefactors(variables: tuple[str, ...], fiber: str, n_minus_1: int, r: int, q: int) -> LaurentPolynomial:
    f = LaurentPolynomial.variable(variables, fiber)
    f_inv = LaurentPolynomial.variable(variables, fiber, -1)
    fq = LaurentPolynomial.variable(variables, fiber, q)
    fq_inv = LaurentPolynomial.variable(variables, fiber, -q)
    return (f_inv - f) ** n_minus_1 * (fq_inv - fq) ** (r - 1)


def elliptic_sw(n: int, variable: str = "f") -> LaurentPolynomial:
    """SW of the elliptic surface E(n), (f^-1 - f)^(n-2), for n >= 2."""
    if n < 2:
        raise ValueError(f"E(n) has a finite SW polynomial here only for n >= 2, got {n}")
    vs = (variable,)
    return (LaurentPolynomial.variable(vs, variable, -1) - LaurentPolynomial.variable(vs, variable)) ** (n - 2)


def sw_link_surgery(params: FamilyParams) -> SWInvariant:
    """SW of E(n, r)_{L_{p,q}} in ``(xi, tau)``.

    One formula covers every (p, q): the prefactors
    (xi^-1 - xi)^(n-1) (xi^-q - xi^q)^(r-1) times the symmetrized Alexander
    polynomial with squared variables.
    """
    if params.n is None:
        raise ValueError("link surgery needs the elliptic multiplicity n")
    p, q, n, r = params.p, params.q, params.n, params.r
    bracket = symmetrize(p, q, alexander_closed_form(p, q))
    poly = _prefactors(XI_TAU, "xi", n - 1, r, q) * bracket
    return SWInvariant(poly, params, LINK_SURGERY, "xi")


def sw_fiber_sum_general(
    sw_x: LaurentPolynomial, fiber_var: str, r: int, p: int, q: int
) -> SWInvariant:
    """SW of the fiber sum X #_{T_{p,q} = F} E(r) given SW of X.

    The caller is responsible for X satisfying b2+ > 1 (or otherwise having
    a finite SW polynomial); nothing is checked on that front.
    """
    if fiber_var not in sw_x.variables:
        raise ValueError(f"fiber variable {fiber_var!r} not among {list(sw_x.variables)}")
    if TAU in sw_x.variables:
        raise ValueError(f"{TAU!r} is already a variable of SW_X")
    params = FamilyParams(p=p, q=q, n=None, r=r)
    variables = sw_x.variables + (TAU,)
    base = sw_x.extend(variables)
    k = len(variables)
    fiber_slot = tuple(1 if v == fiber_var else 0 for v in variables)
    tau_slot = (0,) * (k - 1) + (1,)
    bracket = symmetrize(p, q, alexander_closed_form(p, q)).substitute(
        {"xi": fiber_slot, "tau": tau_slot}, variables
    )
    poly = base * _prefactors(variables, fiber_var, 1, r, q) * bracket
    return SWInvariant(poly, params, GENERAL_FIBER_SUM, fiber_var)


def collapse_count(
    sw: SWInvariant | LaurentPolynomial, fiber_var: str | None = None
) -> tuple[LaurentPolynomial, int]:
    """Set tau equal to the fiber class and count the surviving terms.

    Terms that merge may cancel; the count is of the collapsed support.
    """
    if isinstance(sw, SWInvariant):
        poly = sw.poly
        fiber_var = fiber_var or sw.fiber_var
    else:
        poly = sw
    variables = poly.variables
    if TAU not in variables:
        raise ValueError(f"no {TAU!r} variable to collapse in {list(variables)}")
    target = tuple(v for v in variables if v != TAU)
    if fiber_var is None:
        fiber_var = target[0]
    if fiber_var not in target:
        raise ValueError(f"fiber variable {fiber_var!r} not among {list(target)}")
    mapping = {v: tuple(1 if w == v else 0 for w in target) for v in target}
    mapping[TAU] = tuple(1 if w == fiber_var else 0 for w in target)
    collapsed = poly.substitute(mapping, target)
    return collapsed, len(collapsed)
