import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import sylvester_resultant
from thumbtack.cyclotomic import cyclotomic_field
from thumbtack.cycfactor import (factor_over_cyclotomic, interpolate,
                                 nth_root_in_cyclotomic, trager_norm,
                                 zresultant)
from thumbtack.errors import SizeLimitError
from thumbtack.qpoly import QPoly


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=6),
       st.lists(st.integers(-8, 8), min_size=1, max_size=6))
@settings(max_examples=200, deadline=None)
def test_zresultant_matches_sylvester(a, b):
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return
    assert zresultant(a, b) == sylvester_resultant(a, b)


def test_zresultant_shared_factor_is_zero():
    assert zresultant([1, 1], [1, 2, 1]) == 0


def test_interpolation():
    pts = [(i, 2 * i ** 3 - i + 5) for i in range(5)]
    assert interpolate(pts) == QPoly([5, -1, 0, 2])


def test_norm_of_quadratic_over_q8():
    F = cyclotomic_field(8)
    p = F.lift_qpoly(QPoly([-2, 0, 1]))
    # shift 0 collapses the norm to (x^2-2)^4, which is not squarefree
    n0 = trager_norm(F, p, 0)
    assert n0 == QPoly([-2, 0, 1]) ** 4


def test_factor_x2_minus_2_over_q8():
    # (zeta + zeta^7)^2 == 2 exactly, so x^2 - 2 splits into two linears
    F = cyclotomic_field(8)
    z = F.zeta()
    w = z + z ** 7
    assert (w * w).rational_value() == 2
    fac = factor_over_cyclotomic(QPoly([-2, 0, 1]), F)
    roots = sorted((-f.coeffs[0]).coeffs for f, _ in fac.factors)
    assert roots == sorted([w.coeffs, (-w).coeffs])
    assert fac.reconstruct() == F.lift_qpoly(QPoly([-2, 0, 1]))


def test_x3_minus_2_irreducible_over_q3():
    F = cyclotomic_field(3)
    fac = factor_over_cyclotomic(QPoly([-2, 0, 0, 1]), F)
    assert fac.is_irreducible()


def test_x2_minus_2_irreducible_over_q4():
    F = cyclotomic_field(4)
    fac = factor_over_cyclotomic(QPoly([-2, 0, 1]), F)
    assert fac.is_irreducible()


def test_multiplicities_over_field():
    F = cyclotomic_field(4)
    i = F.zeta()
    p = F.poly([i * -1, 1]) ** 2 * F.poly([1, 1])
    fac = factor_over_cyclotomic(p, F)
    assert sorted(m for _, m in fac.factors) == [1, 2]
    assert fac.reconstruct() == p


def test_size_limit():
    F = cyclotomic_field(8)
    with pytest.raises(SizeLimitError):
        factor_over_cyclotomic(QPoly.x_pow_minus_const(40, 2), F)
    with pytest.raises(SizeLimitError):
        factor_over_cyclotomic(QPoly([-2, 0, 1]), F, limit=4)


def test_degree_one_field_delegates_to_q():
    F = cyclotomic_field(1)
    fac = factor_over_cyclotomic(QPoly([-1, 0, 1]), F)
    assert len(fac.factors) == 2


def test_nth_root_identity_witness():
    F = cyclotomic_field(3)
    ok, w = nth_root_in_cyclotomic(1, 5, F)
    assert ok and w == 1


def test_nth_root_sqrt2_in_q8():
    F = cyclotomic_field(8)
    ok, w = nth_root_in_cyclotomic(2, 2, F)
    assert ok and (w * w).rational_value() == 2
    z = F.zeta()
    assert w in (z + z ** 7, -(z + z ** 7))


def test_nth_root_negative_cases():
    assert nth_root_in_cyclotomic(2, 3, cyclotomic_field(3))[0] is False
    assert nth_root_in_cyclotomic(2, 4, cyclotomic_field(8))[0] is False
    assert nth_root_in_cyclotomic(-1, 2, cyclotomic_field(8))[0] is True
    assert nth_root_in_cyclotomic(-1, 2, cyclotomic_field(3))[0] is False


def test_nth_root_minus_four_is_fourth_power_over_q4():
    F = cyclotomic_field(4)
    ok, w = nth_root_in_cyclotomic(-4, 4, F)
    assert ok and w ** 4 == Fraction(-4)
    # (1+i)^4 = -4: the witness is one of the eight associates
    i = F.zeta()
    assert (F.one() + i) ** 4 == -4


def test_staged_root_matches_direct_small():
    # same question answered by the one-shot norm and the staged descent
    F = cyclotomic_field(8)
    for a in (2, 4, 16, -4, 3):
        direct = factor_over_cyclotomic(
            F.lift_qpoly(QPoly.x_pow_minus_const(4, a)), F)
        has_root = any(f.degree == 1 for f, _ in direct.factors)
        ok, w = nth_root_in_cyclotomic(a, 4, F)
        assert ok == has_root, a
        if ok:
            assert w ** 4 == Fraction(a)


def test_rational_shortcut():
    F = cyclotomic_field(5)
    ok, w = nth_root_in_cyclotomic(Fraction(32, 243), 5, F)
    assert ok and w == Fraction(2, 3)


def test_oracle_reconstruction_random_quadratics():
    rng = random.Random(5)
    F = cyclotomic_field(8)
    for _ in range(6):
        p = F.poly([rng.randint(-4, 4) for _ in range(2)] + [1])
        fac = factor_over_cyclotomic(p, F)
        assert fac.reconstruct() == p
