"""Braid words, their Burau-type matrices, and a division-free determinant."""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from .ring import LaurentPolynomial, VariableMismatchError

__all__ = [
    "BraidWord",
    "PolyMatrix",
    "FamilyParams",
    "burau_generator",
    "braid_matrix",
    "torus_family_braid",
    "determinant",
]


@dataclass(frozen=True)
class FamilyParams:
    """Integer parameters of the family: braid (p, q) and multiplicities (n, r).

    ``n`` may be ``None`` for fiber sums with an arbitrary manifold, where the
    elliptic multiplicity does not apply.
    """

    p: int
    q: int
    n: int | None = 1
    r: int = 1

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.n is not None and self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"a braid needs at least 2 strands, got {self.strands}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator index {i} outside [1, {self.strands - 1}]")
            if s not in (1, -1):
                raise ValueError(f"generator sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"<empty braid on {self.strands} strands>"
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters)

    def to_dict(self) -> dict:
        return {"strands": self.strands, "letters": [[i, s] for i, s in self.letters]}

    @classmethod
    def from_dict(cls, data) -> BraidWord:
        return cls(int(data["strands"]), tuple(tuple(x) for x in data["letters"]))


class PolyMatrix:
    """Square matrix of Laurent polynomials over one shared variable list."""

    __slots__ = ("rows", "variables")

    def __init__(self, rows: Sequence[Sequence[LaurentPolynomial]]):
        rows = tuple(tuple(r) for r in rows)
        m = len(rows)
        if m < 1:
            raise ValueError("matrix must be at least 1x1")
        if any(len(r) != m for r in rows):
            raise ValueError("matrix must be square")
        variables = rows[0][0].variables
        for r in rows:
            for e in r:
                if e.variables != variables:
                    raise VariableMismatchError(variables, e.variables)
        self.rows = rows
        self.variables = variables

    @classmethod
    def identity(cls, size: int, variables: Iterable[str]) -> PolyMatrix:
        variables = tuple(variables)
        zero = LaurentPolynomial.zero(variables)
        one = LaurentPolynomial.one(variables)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def from_ints(cls, entries, variables: Iterable[str]) -> PolyMatrix:
        variables = tuple(variables)
        return cls([[LaurentPolynomial.constant(variables, c) for c in r] for r in entries])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPolynomial:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"PolyMatrix({body})"

    def _same_shape(self, other: PolyMatrix) -> None:
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")
        if self.variables != other.variables:
            raise VariableMismatchError(self.variables, other.variables)

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        self._same_shape(other)
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        self._same_shape(other)
        return PolyMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        self._same_shape(other)
        m = self.size
        zero = LaurentPolynomial.zero(self.variables)
        out = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = zero
                for k in range(m):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def scale(self, c: LaurentPolynomial | int) -> PolyMatrix:
        return PolyMatrix([[c * e for e in r] for r in self.rows])

    def __pow__(self, k: int) -> PolyMatrix:
        if k < 0:
            raise ValueError("negative matrix powers are not supported; use inverse letters")
        result = PolyMatrix.identity(self.size, self.variables)
        for _ in range(k):
            result = result @ self
        return result

    def extend(self, variables: Iterable[str]) -> PolyMatrix:
        variables = tuple(variables)
        return PolyMatrix([[e.extend(variables) for e in r] for r in self.rows])


def burau_generator(q: int, i: int, sign: int = 1, variable: str = "t") -> PolyMatrix:
    """Matrix of the letter ``sigma_i^sign`` on ``q`` strands, size (q-1)x(q-1).

    For sign +1 this is the identity except row i, which reads
    ``t, -t, 1`` in columns i-1, i, i+1 (1-based), with columns that fall
    outside the matrix dropped.  For sign -1 row i is ``1, -t^-1, t^-1``,
    the exact inverse.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 1 <= i <= q - 1:
        raise ValueError(f"generator index {i} outside [1, {q - 1}]")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    vs = (variable,)
    m = q - 1
    rows = [list(r) for r in PolyMatrix.identity(m, vs).rows]
    t = LaurentPolynomial.variable(vs, variable)
    t_inv = LaurentPolynomial.variable(vs, variable, -1)
    one = LaurentPolynomial.one(vs)
    if sign > 0:
        left, diag, right = t, -t, one
    else:
        left, diag, right = one, -t_inv, t_inv
    r = i - 1
    rows[r][r] = diag
    if r - 1 >= 0:
        rows[r][r - 1] = left
    if r + 1 < m:
        rows[r][r + 1] = right
    return PolyMatrix(rows)


def braid_matrix(word: BraidWord, variable: str = "t") -> PolyMatrix:
    """Product of generator matrices, left to right in reading order."""
    q = word.strands
    result = PolyMatrix.identity(q - 1, (variable,))
    cache: dict[tuple[int, int], PolyMatrix] = {}
    for letter in word.letters:
        if letter not in cache:
            cache[letter] = burau_generator(q, letter[0], letter[1], variable)
        result = result @ cache[letter]
    return result


def torus_family_braid(p: int, q: int) -> BraidWord:
    """``sigma_{q-1} sigma_{q-2} ... sigma_2 sigma_1^{2p-1}`` on q strands."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    letters = [(i, 1) for i in range(q - 1, 1, -1)] + [(1, 1)] * (2 * p - 1)
    return BraidWord(q, tuple(letters))


def determinant(m: PolyMatrix) -> LaurentPolynomial:
    """Exact determinant without any division.

    Rows are assigned to columns one at a time; partial sums are kept per
    set of used columns, so the cost is O(2^size * size) ring operations in
    the worst case and much less for sparse matrices.  The sign of the
    permutation is tracked through inversion counts.
    """
    size = m.size
    zero = LaurentPolynomial.zero(m.variables)
    layer: dict[int, LaurentPolynomial] = {0: LaurentPolynomial.one(m.variables)}
    for row in m.rows:
        nxt: dict[int, LaurentPolynomial] = {}
        for mask, partial in layer.items():
            for col, entry in enumerate(row):
                bit = 1 << col
                if mask & bit or not entry:
                    continue
                # inversions: earlier rows already placed in higher columns
                inversions = bin(mask >> (col + 1)).count("1")
                term = partial * entry
                if inversions % 2:
                    term = -term
                key = mask | bit
                nxt[key] = nxt.get(key, zero) + term
        layer = {k: v for k, v in nxt.items() if v}
        if not layer:
            return zero
    return layer.get((1 << size) - 1, zero)
