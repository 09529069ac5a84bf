# domain/polynomial.py
"""
Wielomiany o współczynnikach całkowitych (wyraz wolny pierwszy) i kraty wielomianów w HNF.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import sympy

from core.errors import DomainError

T = sympy.Symbol("t")


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls(tuple([0] * degree + [coeff]))

    @classmethod
    def from_sympy(cls, expr) -> "IntPolynomial":
        poly = sympy.Poly(expr, T)
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        return cls(tuple(coeffs))

    def to_sympy(self):
        return sum((c * T**i for i, c in enumerate(self.coefficients)), sympy.Integer(0))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Dzielenie bez reszty przez wielomian o wiodącym współczynniku ±1."""
        if divisor.is_zero() or abs(divisor.coefficients[-1]) != 1:
            raise DomainError("divisor must have leading coefficient +-1")
        rem = list(self.coefficients)
        lead = divisor.coefficients[-1]
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dd] = c
                for j, d in enumerate(divisor.coefficients):
                    rem[i - dd + j] -= c * d
        if any(rem):
            raise DomainError("polynomial division leaves a remainder")
        return IntPolynomial(tuple(quot))

    def vector(self, length: int) -> List[int]:
        if len(self.coefficients) > length:
            raise DomainError("polynomial does not fit the requested length")
        return list(self.coefficients) + [0] * (length - len(self.coefficients))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


T_POLY = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))


def linear(a: int, b: int) -> IntPolynomial:
    """a·t + b."""
    return IntPolynomial((b, a))


@dataclass(frozen=True)
class PolyLattice:
    """Krata w Z^{k+1} (współczynniki wielomianów stopnia <= k) zapisana bazą w HNF."""

    degree_bound: int
    basis: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        width = self.degree_bound + 1
        for row in self.basis:
            if len(row) != width:
                raise DomainError("lattice rows must have degree_bound + 1 entries")
            if not any(row):
                raise DomainError("lattice rows must be nonzero")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def rows_as_polynomials(self) -> List[IntPolynomial]:
        return [IntPolynomial(row) for row in self.basis]

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.basis]
