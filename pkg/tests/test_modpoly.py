"""The two F_p[x] backends must be interchangeable; everything downstream
assumes their contracts agree."""

import random

import pytest

from thumbtack import _fpoly_py
from thumbtack import modpoly

try:
    from thumbtack import _fpoly as _fpoly_c
except ImportError:            # extension not built: pure backend only
    _fpoly_c = None

BACKENDS = [_fpoly_py] + ([_fpoly_c] if _fpoly_c else [])


@pytest.mark.parametrize("impl", BACKENDS)
def test_mul_reference(impl):
    # (x+1)(x+2) = x^2 + 3x + 2 mod 5
    assert impl.mul([1, 1], [2, 1], 5) == [2, 3, 1]
    assert impl.mul([], [1, 2], 7) == []
    assert impl.mul([3], [4], 5) == [2]


@pytest.mark.parametrize("impl", BACKENDS)
def test_pdivmod_reference(impl):
    q, r = impl.pdivmod([2, 3, 1], [1, 1], 5)
    assert q == [2, 1] and r == []
    q, r = impl.pdivmod([1, 0, 1], [1, 1], 2)
    assert q == [1, 1] and r == []
    with pytest.raises(ZeroDivisionError):
        impl.pdivmod([1], [], 3)


@pytest.mark.parametrize("impl", BACKENDS)
def test_gcd_monic(impl):
    g = impl.gcd([4, 4], [2, 6, 4], 7)  # both multiples of (x+1)
    assert g == [1, 1]
    assert impl.gcd([], [0, 2], 5) == [0, 1]


@pytest.mark.parametrize("impl", BACKENDS)
def test_powmod_fermat(impl):
    # x^p = x mod (x^2 - x) over F_p splits into linear factors
    for p in (3, 5, 13):
        f = [0, p - 1, 1]  # x^2 - x
        assert impl.powmod([0, 1], p, f, p) == [0, 1]


@pytest.mark.skipif(_fpoly_c is None, reason="compiled backend not built")
def test_backends_agree_fuzz():
    rng = random.Random(2024)
    for _ in range(1500):
        p = rng.choice([2, 3, 5, 7, 13, 101, 1048583])
        a = [rng.randrange(p) for _ in range(rng.randint(0, 10))]
        b = [rng.randrange(p) for _ in range(rng.randint(1, 10))]
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            b = [1]
        assert _fpoly_c.mul(a, b, p) == _fpoly_py.mul(a, b, p)
        assert _fpoly_c.pdivmod(a, b, p) == _fpoly_py.pdivmod(a, b, p)
        assert _fpoly_c.gcd(a, b, p) == _fpoly_py.gcd(a, b, p)
        if len(b) >= 2:
            e = rng.randint(0, 3 ** rng.randint(0, 6))
            assert _fpoly_c.powmod(a, e, b, p) == \
                _fpoly_py.powmod(a, e, b, p)
            assert _fpoly_c.mulmod(a, a, b, p) == \
                _fpoly_py.mulmod(a, a, b, p)


def test_facade_helpers():
    assert modpoly.reduce_int_poly([5, 7, 10], 5) == [0, 2]
    assert modpoly.monic([2, 4], 5) == [3, 1]
    assert modpoly.sub([1, 2], [1], 3) == [0, 2]
    assert modpoly.derivative([1, 2, 3], 5) == [2, 1]
    g, s, t = modpoly.xgcd([1, 1], [1, 0, 1], 5)
    lhs = modpoly.add(modpoly.mul(s, [1, 1], 5),
                      modpoly.mul(t, [1, 0, 1], 5), 5)
    assert lhs == g
