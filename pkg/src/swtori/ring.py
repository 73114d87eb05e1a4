"""Sparse multivariate Laurent polynomials with exact integer coefficients.

A polynomial lives in Z[v1^{+-1}, ..., vk^{+-1}] for an ordered tuple of
variable names.  Terms are stored as a map from exponent tuples to nonzero
Python ints, so coefficients never overflow.  Values are immutable.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from types import MappingProxyType

__all__ = [
    "LaurentPolynomial",
    "VariableMismatchError",
    "SubstitutionError",
    "add",
    "multiply",
    "power",
    "substitute",
    "mirror",
    "dumps",
    "loads",
]

Exponent = tuple[int, ...]


class VariableMismatchError(ValueError):
    """Raised when two polynomials over different variable lists are combined."""

    def __init__(self, left: Sequence[str], right: Sequence[str]):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(f"variable lists differ: {list(self.left)} vs {list(self.right)}")


class SubstitutionError(ValueError):
    pass


class LaurentPolynomial:
    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, int] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {list(variables)}")
        k = len(variables)
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != k:
                raise ValueError(f"exponent {exp} has length {len(exp)}, ring has {k} variables")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._vars = variables
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exponent, int]) -> LaurentPolynomial:
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, variables: Iterable[str]) -> LaurentPolynomial:
        return cls(variables)

    @classmethod
    def constant(cls, variables: Iterable[str], c: int = 1) -> LaurentPolynomial:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables: Iterable[str]) -> LaurentPolynomial:
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables: Iterable[str], exp: Sequence[int], coeff: int = 1) -> LaurentPolynomial:
        return cls(variables, {tuple(exp): coeff})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str, exponent: int = 1) -> LaurentPolynomial:
        """The monomial ``name**exponent`` in the ring over ``variables``."""
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not one of {list(variables)}")
        exp = [0] * len(variables)
        exp[variables.index(name)] = exponent
        return cls(variables, {tuple(exp): 1})

    # -- accessors ----------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms sorted ascending-lexicographically by exponent."""
        return sorted(self._terms.items())

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self._vars), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: LaurentPolynomial) -> None:
        if self._vars != other._vars:
            raise VariableMismatchError(self._vars, other._vars)

    def _coerce(self, other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self._vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPolynomial._raw(self._vars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPolynomial.zero(self._vars)
            return LaurentPolynomial._raw(self._vars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw(self._vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = LaurentPolynomial.one(self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    # -- structural operations ----------------------------------------

    def mirror(self) -> LaurentPolynomial:
        """Negate every exponent vector (v -> v^{-1} for all variables)."""
        return LaurentPolynomial._raw(
            self._vars, {tuple(-a for a in e): c for e, c in self._terms.items()}
        )

    def extend(self, variables: Iterable[str]) -> LaurentPolynomial:
        """Embed into a ring whose variable list contains all of ours.

        Missing variables get exponent zero; the order of ``variables`` wins.
        """
        variables = tuple(variables)
        missing = [v for v in self._vars if v not in variables]
        if missing:
            raise VariableMismatchError(self._vars, variables)
        slots = [self._vars.index(v) if v in self._vars else None for v in variables]
        out = {
            tuple(e[s] if s is not None else 0 for s in slots): c
            for e, c in self._terms.items()
        }
        return LaurentPolynomial(variables, out)

    def rename(self, mapping: Mapping[str, str]) -> LaurentPolynomial:
        new_vars = tuple(mapping.get(v, v) for v in self._vars)
        return LaurentPolynomial(new_vars, self._terms)

    def substitute(
        self,
        mapping: Mapping[str, tuple[int, Sequence[int]] | Sequence[int]],
        target: Iterable[str],
    ) -> LaurentPolynomial:
        """Monomial substitution ``v -> sign * (target monomial)``.

        ``mapping[v]`` is either ``(sign, exponent_vector)`` with sign in
        {+1, -1}, or a bare exponent vector in the target variables.  A term
        ``v^e`` picks up ``sign**e``.  Terms that land on the same target
        monomial are merged, so cancellation is possible.
        """
        target = tuple(target)
        images = []
        for v in self._vars:
            if v not in mapping:
                raise SubstitutionError(f"variable {v!r} is not mapped")
            img = mapping[v]
            if len(img) == 2 and img[0] in (1, -1) and not isinstance(img[1], int):
                sign, vec = img
            else:
                sign, vec = 1, img
            vec = tuple(int(a) for a in vec)
            if len(vec) != len(target):
                raise SubstitutionError(
                    f"image of {v!r} has {len(vec)} exponents, target ring {list(target)} has {len(target)}"
                )
            images.append((sign, vec))
        out: dict[Exponent, int] = {}
        zero = (0,) * len(target)
        for e, c in self._terms.items():
            new = list(zero)
            for a, (sign, vec) in zip(e, images):
                if a:
                    if sign < 0 and a % 2:
                        c = -c
                    for j, b in enumerate(vec):
                        new[j] += a * b
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return LaurentPolynomial._raw(target, {e: c for e, c in out.items() if c})

    # -- display / serialization --------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPolynomial({list(self._vars)}, {self!s})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self._vars, exp) if a
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "vars": list(self._vars),
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPolynomial:
        try:
            variables = data["vars"]
            raw = data["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError("polynomial JSON needs 'vars' and 'terms'") from exc
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            raise ValueError("'vars' must be a list of strings")
        terms: dict[Exponent, int] = {}
        for t in raw:
            exp = tuple(t["exp"])
            if exp in terms:
                raise ValueError(f"duplicate exponent {list(exp)}")
            coeff = t["coeff"]
            if isinstance(coeff, bool) or not isinstance(coeff, (str, int)):
                raise ValueError(f"bad coefficient {coeff!r}")
            terms[exp] = int(coeff)
        return cls(variables, terms)


def dumps(poly: LaurentPolynomial) -> str:
    """Canonical JSON text; equal polynomials give identical strings."""
    return json.dumps(poly.to_dict(), separators=(",", ":"))


def loads(text: str) -> LaurentPolynomial:
    return LaurentPolynomial.from_dict(json.loads(text))


# Functional spellings of the ring operations.

def add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    a._check(b)
    return a + b


def multiply(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    a._check(b)
    return a * b


def power(a: LaurentPolynomial, k: int) -> LaurentPolynomial:
    return a**k


def substitute(a: LaurentPolynomial, mapping, target: Iterable[str]) -> LaurentPolynomial:
    return a.substitute(mapping, target)


def mirror(a: LaurentPolynomial) -> LaurentPolynomial:
    return a.mirror()
