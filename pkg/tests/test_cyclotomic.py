"""Exact field arithmetic in Q(zeta_n)."""

from fractions import Fraction

import pytest
import sympy

from slndeform.cyclotomic import CycloField, cyclotomic_polynomial, root


def test_first_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)  # x - 1
    assert cyclotomic_polynomial(2) == (1, 1)  # x + 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)  # x^2 - x + 1


def test_cyclotomic_polynomials_match_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 31):
        ours = cyclotomic_polynomial(n)
        theirs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert list(ours) == [int(c) for c in theirs]


def test_cyclotomic_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_roots_of_unity_basics():
    assert root(0, 7) == 1
    assert root(1, 2) == -1
    z3 = root(1, 3)
    assert z3 * z3 + z3 + 1 == 0
    for n in range(1, 9):
        for k in range(n):
            assert root(k, n) ** n == 1


def test_gaussian_integer_product():
    i = root(1, 4)
    assert (1 - i) * (1 + i) == 2


def test_root_inverse():
    for n in range(2, 10):
        assert root(1, n).inv() == root(n - 1, n)


def test_derivative_of_xn_minus_1_at_one():
    # (x^n - 1)/(x - 1) evaluated at 1 gives n = prod_{k=1}^{n-1} (1 - zeta^k)
    for n in range(2, 12):
        fld = CycloField(n)
        acc = fld.one
        for k in range(1, n):
            acc = acc * (fld.one - fld.root(k))
        assert acc == n


def test_multiplicative_inverses_are_exact():
    for n in range(1, 13):
        fld = CycloField(n)
        samples = [
            fld.root(k) + Fraction(j, 3)
            for k in range(fld.degree)
            for j in (-2, 0, 1, 5)
        ]
        for a in samples:
            if a.is_zero:
                continue
            assert a * a.inv() == 1


def test_inversion_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycloField(5).zero.inv()


def test_root_multiplication_table():
    for n in range(1, 13):
        for i in range(n):
            for j in range(n):
                assert root(i, n) * root(j, n) == root((i + j) % n, n)


def test_distinct_roots_are_distinct_elements():
    for n in range(1, 13):
        values = [root(k, n) for k in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                assert values[i] != values[j]


def test_mixed_field_arithmetic_rejected():
    with pytest.raises(ValueError):
        root(1, 3) + root(1, 4)


def test_power_and_division():
    z = root(1, 5)
    assert z ** -1 == z.inv()
    assert (z / z) == 1
    assert (2 / (root(0, 5) * 2)) == 1


def test_rational_extraction_and_rendering():
    fld = CycloField(4)
    two = fld.from_rational(2)
    assert two.as_rational() == 2
    i = fld.root(1)
    with pytest.raises(ValueError):
        i.as_rational()
    assert str(fld.zero) == "0"
    assert str(1 - i * 2) == "1 - 2*z"
