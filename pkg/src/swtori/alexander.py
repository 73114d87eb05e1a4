"""Two-variable Alexander polynomials of the closed braid B_{p,q} plus its axis.

Variable order is always ``(x, t)``: ``x`` tracks the axis, ``t`` the
closed braid.  Symmetrized polynomials live in ``(xi, tau)``.
"""

from __future__ import annotations

from .braid import BraidWord, PolyMatrix, braid_matrix, determinant, torus_family_braid
from .ring import LaurentPolynomial

__all__ = [
    "XT",
    "XI_TAU",
    "MAX_STRANDS",
    "family_gamma",
    "alexander_via_determinant",
    "alexander_closed_form",
    "alexander_general",
    "symmetrize",
]

XT = ("x", "t")
XI_TAU = ("xi", "tau")

# subset-memoized determinant stays cheap up to 19x19
MAX_STRANDS = 20


def _det_one_minus_x(gamma: PolyMatrix) -> LaurentPolynomial:
    g = gamma.extend(XT)
    x = LaurentPolynomial.variable(XT, "x")
    return determinant(PolyMatrix.identity(g.size, XT) - g.scale(x))


def family_gamma(p: int, q: int) -> PolyMatrix:
    """The (q-1)x(q-1) matrix of B_{p,q}, over ``(t,)``."""
    return braid_matrix(torus_family_braid(p, q))


def alexander_via_determinant(p: int, q: int) -> LaurentPolynomial:
    if q > MAX_STRANDS:
        raise ValueError(f"q={q} exceeds the supported bound {MAX_STRANDS}")
    return _det_one_minus_x(family_gamma(p, q))


def alexander_general(word: BraidWord) -> LaurentPolynomial:
    """det(I - x * Gamma_word) for an arbitrary braid word.

    Outside the B_{p,q} family this is the closure-plus-axis Alexander
    polynomial only up to multiplication by a unit +-x^a t^b; compare such
    results up to units.
    """
    if word.strands > MAX_STRANDS:
        raise ValueError(f"{word.strands} strands exceeds the supported bound {MAX_STRANDS}")
    return _det_one_minus_x(braid_matrix(word))


def _mono(a: int, b: int, c: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(XT, (a, b), c)


def alexander_closed_form(p: int, q: int) -> LaurentPolynomial:
    """Closed-form Alexander polynomial of L_{p,q}.

    Both rational factors of the closed form are expanded as finite sums:
    (1 + t^{2p-3})/(1 + t) as sum_{i=0}^{2p-4} (-t)^i, and
    (1 - (xt)^{q-2})/(1 - xt) as sum_{j=0}^{q-3} (xt)^j.
    """
    if p < 1 or q < 2:
        raise ValueError(f"need p >= 1 and q >= 2, got p={p}, q={q}")
    if q == 2:
        return _mono(0, 0) + _mono(1, 2 * p - 1)
    if p == 1:
        # the general q >= 3 form degenerates at p = 1; the closed braid is the unknot
        return sum((_mono(j, j) for j in range(q)), LaurentPolynomial.zero(XT))
    alternating = LaurentPolynomial(XT, {(0, i): (-1) ** i for i in range(2 * p - 3)})
    geometric = LaurentPolynomial(XT, {(j, j): 1 for j in range(q - 2)})
    return _mono(0, 0) + _mono(q - 1, 2 * p + q - 3) + _mono(1, 2) * alternating * geometric


def symmetrize(p: int, q: int, delta: LaurentPolynomial) -> LaurentPolynomial:
    """Delta^sym(xi^2, tau^2) with integer exponents only.

    Substitutes x -> xi^2, t -> tau^2 and multiplies by
    xi^{-(q-1)} tau^{-(2p+q-3)}.
    """
    if delta.variables != XT:
        raise ValueError(f"expected a polynomial in {list(XT)}, got {list(delta.variables)}")
    if any(a < 0 for exp in delta.terms for a in exp):
        raise ValueError("symmetrize expects a polynomial with nonnegative exponents")
    if delta.constant_term() != 1:
        raise ValueError(
            f"expected constant term 1 (unit-normalized family input), got {delta.constant_term()}"
        )
    squared = delta.substitute({"x": (2, 0), "t": (0, 2)}, XI_TAU)
    shift = LaurentPolynomial.monomial(XI_TAU, (-(q - 1), -(2 * p + q - 3)))
    return squared * shift
