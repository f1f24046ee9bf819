from fractions import Fraction

import cmath

import pytest
from hypothesis import given, strategies as st

from hecke_transfer.cyclotomic import (
    CyclotomicNumber,
    TorusPointFiniteOrder,
    cyclotomic_polynomial,
    euler_phi,
)


def test_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(12)) == euler_phi(12) + 1


def test_roots_of_unity_sum_to_zero():
    for n in (2, 3, 5, 6, 12):
        total = CyclotomicNumber.constant(n, 0)
        for k in range(n):
            total = total + CyclotomicNumber.zeta(n, k)
        assert total.is_zero()


def test_zeta_order():
    z = CyclotomicNumber.zeta(7)
    p = CyclotomicNumber.constant(7, 1)
    for _ in range(7):
        p = p * z
    assert p == CyclotomicNumber.constant(7, 1)


def test_torus_point():
    s = TorusPointFiniteOrder(4, (Fraction(1, 2), Fraction(5, 4)))
    assert s.exponents == (Fraction(1, 2), Fraction(1, 4))
    assert s.exponent((1, 1)) == 3
    with pytest.raises(ValueError):
        TorusPointFiniteOrder(4, (Fraction(1, 3),))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.constant(5, 1) / CyclotomicNumber.constant(5, 0)


ORDER = 12
elements = st.dictionaries(st.integers(0, ORDER - 1), st.integers(-4, 4), max_size=5).map(
    lambda d: CyclotomicNumber.from_exponents(ORDER, d))


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b - b == a


@given(elements, elements)
def test_division_inverts_multiplication(a, b):
    if not b.is_zero():
        assert (a / b) * b == a


@given(elements)
def test_complex_embedding(a):
    z = cmath.exp(2j * cmath.pi / ORDER)
    assert abs(a.to_complex() - sum(float(c) * z**k for k, c in enumerate(a.coefficients))) < 1e-9
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-9
