"""Exact multivariate counting polynomials in the panel parameters q_0..q_n.

Gallery weights arise as products prod q_i^e_i (q_i - 1)^f_i; these are
expanded eagerly into the monomial basis prod q_i^e_i with integer
coefficients, so equality is plain dictionary equality and evaluation at
integer parameter values is exact.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import InputError


class CountPolynomial:
    """Polynomial with integer coefficients in variables q_0..q_(nvars-1)."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self._terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    self._terms[tuple(exps)] = coeff

    # constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "CountPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "CountPolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "CountPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "CountPolynomial":
        exps = tuple(int(k == i) for k in range(nvars))
        return cls(nvars, {exps: 1})

    @classmethod
    def from_cross_fold(
        cls, cross: Sequence[int], fold: Sequence[int]
    ) -> "CountPolynomial":
        """Expand prod q_i^cross_i (q_i - 1)^fold_i into the monomial basis."""
        nvars = len(cross)
        poly = cls(nvars, {tuple(cross): 1})
        for i, f in enumerate(fold):
            q_minus_one = cls(nvars, {
                tuple(int(k == i) for k in range(nvars)): 1,
                (0,) * nvars: -1,
            })
            for _ in range(f):
                poly = poly * q_minus_one
        return poly

    # algebra -----------------------------------------------------------

    def __add__(self, other: "CountPolynomial") -> "CountPolynomial":
        self._check(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = terms.get(exps, 0) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return CountPolynomial(self.nvars, terms)

    def __mul__(self, other: "CountPolynomial") -> "CountPolynomial":
        self._check(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(exps, 0) + c1 * c2
                if c:
                    terms[exps] = c
                else:
                    terms.pop(exps, None)
        return CountPolynomial(self.nvars, terms)

    def _check(self, other: "CountPolynomial") -> None:
        if not isinstance(other, CountPolynomial) or other.nvars != self.nvars:
            raise InputError("polynomial arithmetic requires matching variable counts")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CountPolynomial)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __bool__(self) -> bool:
        return bool(self._terms)

    def evaluate(self, values: Sequence[int]) -> int:
        """Exact value at integer parameters, one per variable."""
        if len(values) != self.nvars:
            raise InputError(f"expected {self.nvars} parameter values")
        total = 0
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v**e
            total += term
        return total

    # presentation ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted leading-first: by total degree, then exponents, descending."""
        return sorted(
            self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def to_json_obj(self) -> dict:
        return {
            "monomials": [
                {"exps": list(exps), "coeff": coeff}
                for exps, coeff in self.sorted_terms()
            ]
        }

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"q{i}" if e == 1 else f"q{i}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(coeff)
            body = "*".join(([] if mag == 1 and factors else [str(mag)]) + factors)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"CountPolynomial({self})"
