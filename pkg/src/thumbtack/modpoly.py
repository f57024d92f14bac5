"""Dense F_p[x] arithmetic with a compiled kernel when available.

The hot operations (mul, divmod, gcd, powmod) are delegated to the Cython
extension ``thumbtack._fpoly`` if it was built, otherwise to the pure-Python
twin ``thumbtack._fpoly_py``.  Set THUMBTACK_PURE=1 before import to force
the pure backend (used by the backend-comparison benchmark and tests).

Everything downstream (distinct-degree / equal-degree splitting, Hensel
lifting) lives in zassenhaus.py and only uses this facade, so both backends
are exercised by the same code paths.
"""

import os

if os.environ.get("THUMBTACK_PURE"):
    from . import _fpoly_py as _impl
else:
    try:
        from . import _fpoly as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fpoly_py as _impl

BACKEND = _impl.BACKEND

mul = _impl.mul
pdivmod = _impl.pdivmod
gcd = _impl.gcd
mulmod = _impl.mulmod
powmod = _impl.powmod


def reduce_int_poly(coeffs, p):
    """Integer coefficient sequence -> F_p[x] list, trimmed."""
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def add(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def derivative(a, p):
    out = [i * a[i] % p for i in range(1, len(a))]
    while out and out[-1] == 0:
        out.pop()
    return out


def xgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if r0 and r0[-1] != 1:
        inv = pow(r0[-1], p - 2, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0
