"""Independent routes used to check the library: no shared code paths."""

from fractions import Fraction
from itertools import permutations

from swtori.ring import LaurentPolynomial


def poly(variables, terms):
    """Build a polynomial from ``{exponent tuple: coeff}``."""
    return LaurentPolynomial(tuple(variables), terms)


def cofactor_det(rows):
    """Laplace expansion along the first row, on nested lists of polynomials."""
    m = len(rows)
    if m == 1:
        return rows[0][0]
    total = None
    for j in range(m):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else LaurentPolynomial.zero(rows[0][0].variables)


def leibniz_det(rows):
    """Sum over permutations; only for tiny sizes."""
    m = len(rows)
    total = LaurentPolynomial.zero(rows[0][0].variables)
    for perm in permutations(range(m)):
        inv = sum(1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
        term = LaurentPolynomial.one(rows[0][0].variables)
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + (-term if inv % 2 else term)
    return total


def evaluate(p, point):
    """Exact value at a point given as ``{var: Fraction}``."""
    total = Fraction(0)
    for exp, c in p.terms.items():
        v = Fraction(c)
        for name, a in zip(p.variables, exp):
            v *= Fraction(point[name]) ** a
        total += v
    return total


def fraction_det(mat):
    """Gaussian elimination over the rationals."""
    a = [row[:] for row in mat]
    m = len(a)
    det = Fraction(1)
    for c in range(m):
        piv = next((r for r in range(c, m) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, m):
            f = a[r][c] / a[c][c]
            for k in range(c, m):
                a[r][k] -= f * a[c][k]
    return det


def brute_force_sw_support(n, p, q):
    """Support size of SW(E(n,1)_{L_{p,q}}) for p >= 2, q >= 3 from the triple-sum expansion.

    Accumulates every monomial of the expanded product term by term.
    """
    from math import comb

    acc = {}

    def put(a, b, c):
        acc[(a, b)] = acc.get((a, b), 0) + c

    for k in range(n):
        s = (-1) ** k * comb(n - 1, k)
        put(n - 2 * k - q, 3 - 2 * p - q, s)
        put(n + q - 2 * k - 2, 2 * p + q - 3, s)
        for i in range(2 * p - 3):
            for j in range(q - 2):
                put(n + 2 * j + 2 - 2 * k - q, 2 * i + 2 * j + 7 - 2 * p - q, (-1) ** (i + k) * comb(n - 1, k))
    return sum(1 for c in acc.values() if c)
