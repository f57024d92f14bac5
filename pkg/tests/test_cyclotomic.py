from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from thumbtack.cyclotomic import (CycPoly, compose_shift, cyclotomic_field,
                                  cyclotomic_poly, euler_phi)
from thumbtack.qpoly import QPoly

X = sympy.Symbol("x")


def test_base_cases():
    assert cyclotomic_poly(1) == QPoly([-1, 1])
    assert cyclotomic_poly(2) == QPoly([1, 1])


def test_conductor_eight():
    # divide x^8 - 1 by the lower cyclotomic polynomials exactly
    q = QPoly.x_pow_minus_const(8, 1)
    for d in (1, 2, 4):
        q = q.exact_div(cyclotomic_poly(d))
    assert q == QPoly([1, 0, 0, 0, 1])
    assert cyclotomic_poly(8) == q


def test_rejects_zero_conductor():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


def test_product_identity_up_to_64():
    for n in range(1, 65):
        prod = QPoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == QPoly.x_pow_minus_const(n, 1), n


def test_against_sympy_and_degree():
    for n in (3, 5, 12, 15, 27, 36, 64, 105):
        mine = list(cyclotomic_poly(n).to_int_coeffs())
        theirs = [int(c) for c in
                  sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]]
        assert mine == theirs
        assert cyclotomic_poly(n).degree == euler_phi(n)
        assert cyclotomic_poly(n).is_monic()


def test_field_basic_arithmetic():
    F = cyclotomic_field(8)
    z = F.zeta()
    assert z ** 8 == 1 and z ** 4 == -1
    w = z + z ** 7
    assert (w * w).rational_value() == 2
    assert ((z - z ** 7) ** 2).rational_value() == -2


def test_degree_one_fields():
    for n in (1, 2):
        F = cyclotomic_field(n)
        assert F.degree == 1
        z = F.zeta()
        assert z == (1 if n == 1 else -1)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4),
       st.sampled_from([3, 4, 5, 8, 9, 12]))
@settings(max_examples=120, deadline=None)
def test_inverse_property(coeffs, n):
    F = cyclotomic_field(n)
    e = F.element(coeffs)
    if e.is_zero():
        return
    assert e * e.inverse() == 1


def test_reduction_matches_polynomial_remainder():
    F = cyclotomic_field(12)
    raw = [1, 2, 3, 4, 5, 6, 7]  # degree 6 >= phi(12) = 4
    e = F.element(raw)
    rem = QPoly(raw) % F.modulus
    assert QPoly(e.coeffs) == rem


def test_cycpoly_divmod_and_gcd():
    F = cyclotomic_field(8)
    z = F.zeta()
    w = z + z ** 7  # square root of 2
    p = F.poly([-2, 0, 1])            # x^2 - 2
    lin = F.poly([w * -1, 1])         # x - w
    q, r = divmod(p, lin)
    assert r.is_zero()
    assert p.gcd(lin) == lin.monic()
    assert (q * lin) == p


def test_compose_shift_matches_naive():
    F = cyclotomic_field(5)
    z = F.zeta()
    p = QPoly([1, -2, 0, 3])
    shifted = compose_shift(F, p, z * 2)
    naive = CycPoly(F, [F.zero()])
    xc = F.poly([z * 2, 1])
    acc = F.poly([1])
    naive = F.poly([p[0]])
    for i in range(1, p.degree + 1):
        acc = acc * xc
        naive = naive + acc * p[i]
    assert shifted == naive


def test_element_json_round_trip():
    from thumbtack.cyclotomic import CycElement
    F = cyclotomic_field(8)
    e = F.element([Fraction(1, 2), 0, -3, 1])
    assert CycElement.from_json(e.to_json()) == e
