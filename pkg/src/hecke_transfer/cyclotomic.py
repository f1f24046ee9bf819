"""Exact arithmetic in Q(zeta_N), elements stored reduced modulo Phi_N."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from . import _linalg as la


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # b monic; a divisible by b
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        q[k] = a[k + len(b) - 1]
        for j, y in enumerate(b):
            a[k + j] -= q[k] * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("order must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, cyclotomic_polynomial(d))
    return tuple(p)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # reduced coefficient vector of x^k for 0 <= k < n
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}."""

    order: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        deg = len(cyclotomic_polynomial(self.order)) - 1
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for order {self.order}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_exponents(cls, order: int, terms: dict[int, object] | Sequence[tuple[int, object]]) -> CyclotomicNumber:
        """Sum of c * zeta_N^k over (k, c) pairs, reduced."""
        table = _power_table(order)
        acc = [Fraction(0)] * len(table[0])
        items = terms.items() if isinstance(terms, dict) else terms
        for k, c in items:
            if c:
                row = table[k % order]
                for i, x in enumerate(row):
                    if x:
                        acc[i] += c * x
        return cls(order, tuple(acc))

    @classmethod
    def constant(cls, order: int, c) -> CyclotomicNumber:
        return cls.from_exponents(order, {0: c})

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CyclotomicNumber:
        return cls.from_exponents(order, {k: 1})

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.constant(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"orders differ: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coefficients))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        prod = _poly_mul(self.coefficients, other.coefficients)
        return CyclotomicNumber.from_exponents(self.order, list(enumerate(prod)))

    __rmul__ = __mul__

    def _mult_matrix(self) -> list[list[Fraction]]:
        # column k = coefficients of self * zeta^k
        deg = len(self.coefficients)
        cols = [(self * CyclotomicNumber.zeta(self.order, k)).coefficients for k in range(deg)]
        return la.transpose(cols)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_N)")
        x = la.solve(other._mult_matrix(), self.coefficients)
        return CyclotomicNumber(self.order, tuple(x))

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugation zeta -> zeta^{-1}."""
        return CyclotomicNumber.from_exponents(
            self.order, [(-k, c) for k, c in enumerate(self.coefficients)]
        )

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0]

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** k for k, c in enumerate(self.coefficients))

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [_fmt(c) for c in self.coefficients]}

    def __str__(self):
        terms = [f"{_fmt(c)}*z^{k}" if k else _fmt(c) for k, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TorusPointFiniteOrder:
    """A point s of finite order in the dual torus.

    ``exponents`` is a rational vector x in X^*(T) (x) Q, read modulo X^*(T);
    a cocharacter lam evaluates to lam(s) = zeta_N^{N <lam, x>}.
    """

    order: int
    exponents: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        xs = tuple(Fraction(x) for x in self.exponents)
        for x in xs:
            if (x * self.order).denominator != 1:
                raise ValueError(f"exponent {x} has denominator not dividing {self.order}")
        object.__setattr__(self, "exponents", tuple(x - (x.numerator // x.denominator) for x in xs))

    def exponent(self, lam: Sequence[int]) -> int:
        """k with lam(s) = zeta_N^k, 0 <= k < N."""
        v = self.order * la.dot(lam, self.exponents)
        if Fraction(v).denominator != 1:
            raise ValueError(f"pairing of {tuple(lam)} with s is not integral")
        return int(v) % self.order

    def evaluate(self, lam: Sequence[int]) -> CyclotomicNumber:
        return CyclotomicNumber.zeta(self.order, self.exponent(lam))

    @classmethod
    def identity(cls, rank: int, order: int = 1) -> TorusPointFiniteOrder:
        return cls(order, (Fraction(0),) * rank)
