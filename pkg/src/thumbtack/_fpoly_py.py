"""Pure-Python backend for dense F_p[x] arithmetic.

Polynomials are lists of ints in [0, p), lowest degree first, no trailing
zeros ([] is zero).  Multiplication packs coefficients into one big integer
(Kronecker substitution) so the inner loop runs in CPython's C bignum code;
remainders against a fixed modulus go through a cached Newton inverse of the
reversed divisor, turning division into two multiplications.
"""

from functools import lru_cache

BACKEND = "python"


def _trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    del a[n:]
    return a


def _pack(a, width):
    acc = 0
    for c in reversed(a):
        acc = (acc << width) | c
    return acc


def _unpack(acc, width, p):
    mask = (1 << width) - 1
    out = []
    while acc:
        out.append((acc & mask) % p)
        acc >>= width
    return _trim(out)


def mul(a, b, p):
    if not a or not b:
        return []
    width = (min(len(a), len(b)) * (p - 1) * (p - 1)).bit_length()
    return _unpack(_pack(a, width) * _pack(b, width), width, p)


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    inv = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    nb = len(b)
    q = [0] * (len(a) - nb + 1)
    for i in range(len(r) - nb, -1, -1):
        t = r[i + nb - 1] * inv % p
        if t:
            q[i] = t
            for j in range(nb):
                r[i + j] = (r[i + j] - t * b[j]) % p
    return _trim(q), _trim(r[: nb - 1])


def gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


@lru_cache(maxsize=128)
def _newton_inverse(fkey, p):
    # inverse of rev(f) modulo x^(deg f), for monic f given as a tuple
    f = list(fkey)
    n = len(f) - 1
    rev = f[::-1]
    g = [1]  # rev[0] == 1 since f is monic
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        fg = mul(rev[:prec], g, p)[:prec]
        two_minus = [(-c) % p for c in fg]
        two_minus[0] = (two_minus[0] + 2) % p
        g = mul(g, two_minus, p)[:prec]
    return tuple(g)


def _rem_newton(a, f, p, ginv):
    # remainder of a modulo monic f using the precomputed inverse
    n = len(f) - 1
    m = len(a) - n  # number of quotient coefficients
    if m <= 0:
        return list(a)
    arev = a[::-1]
    qrev = mul(arev[:m], list(ginv[:m]), p)[:m]
    qrev += [0] * (m - len(qrev))  # keep alignment before reversing
    q = qrev[::-1]
    qf = mul(q, f, p)
    r = [(a[i] - (qf[i] if i < len(qf) else 0)) % p for i in range(n)]
    return _trim(r)


def _monic(f, p):
    if f[-1] == 1:
        return list(f)
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def mulmod(a, b, f, p):
    # the remainder is unchanged by scaling the divisor, so reduce by the
    # monic normalization (the Newton inverse assumes a monic modulus);
    # operands are reduced first to keep the quotient within the cached
    # inverse precision (deg f terms)
    if len(f) < 2:
        return []
    f = _monic(f, p)
    if len(a) >= len(f):
        a = pdivmod(a, f, p)[1]
    if len(b) >= len(f):
        b = pdivmod(b, f, p)[1]
    prod = mul(a, b, p)
    if len(prod) < len(f):
        return prod
    return _rem_newton(prod, f, p, _newton_inverse(tuple(f), p))


def powmod(a, e, f, p):
    if len(f) < 2:
        return []
    flist = _monic(f, p)
    ginv = _newton_inverse(tuple(flist), p)
    a = pdivmod(a, flist, p)[1]
    out = [1]
    while e:
        if e & 1:
            prod = mul(out, a, p)
            out = prod if len(prod) < len(flist) else \
                _rem_newton(prod, flist, p, ginv)
        e >>= 1
        if e:
            prod = mul(a, a, p)
            a = prod if len(prod) < len(flist) else \
                _rem_newton(prod, flist, p, ginv)
    return out
