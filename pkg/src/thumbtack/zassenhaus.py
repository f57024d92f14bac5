"""Complete factorization of univariate polynomials over Q.

Pipeline: Yun squarefree decomposition over Z, modular factorization at a
deterministically chosen good prime (distinct-degree then equal-degree
splitting), quadratic multifactor Hensel lifting up to the Landau-Mignotte
coefficient bound, and subset recombination.

Determinism: the prime is the one with the fewest modular factors among the
first few primes that keep the input squarefree (ties to the smallest);
equal-degree splitting sweeps a fixed enumeration of test polynomials
instead of sampling; recombination scans index subsets lexicographically;
factors are sorted by (degree, coefficient tuple).  Equal inputs therefore
give identical outputs.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import modpoly
from ._fpoly_py import mul as _big_mul  # valid for any modulus, bigint-safe
from .primes import primes
from .qpoly import FactorizationResult, QPoly

_CANDIDATE_PRIMES = 5  # good primes examined before committing to one


# ---------------------------------------------------------------------------
# integer-polynomial helpers (lists of ints, lowest degree first, trimmed)

def _ztrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zsub(a, b):
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
           for i in range(max(len(a), len(b)))]
    return _ztrim(out)


def _zadd(a, b):
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
           for i in range(max(len(a), len(b)))]
    return _ztrim(out)


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _zderiv(a):
    return _ztrim([i * a[i] for i in range(1, len(a))])


def _zcontent(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _zprimitive(a):
    """(content, primitive part with positive leading coefficient)."""
    if not a:
        return 0, []
    g = _zcontent(a)
    if a[-1] < 0:
        g = -g
    return g, [c // g for c in a]


def _zdiv_exact(a, b):
    """a // b when the division is exact over Z (raises otherwise)."""
    if not b:
        raise ZeroDivisionError
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(r) - len(b), -1, -1):
        num = r[i + len(b) - 1]
        if num % b[-1]:
            raise ValueError("inexact integer polynomial division")
        t = num // b[-1]
        q[i] = t
        if t:
            for j, c in enumerate(b):
                r[i + j] -= t * c
    if _ztrim(r):
        raise ValueError("inexact integer polynomial division")
    return _ztrim(q)


def _zdivides(b, a):
    """True iff b | a in Z[x]."""
    if not b:
        return not a
    r = list(a)
    for i in range(len(r) - len(b), -1, -1):
        num = r[i + len(b) - 1]
        if num % b[-1]:
            return False
        t = num // b[-1]
        if t:
            for j, c in enumerate(b):
                r[i + j] -= t * c
    if len(r) >= len(b):
        del r[len(b) - 1:]
    return not _ztrim(r)


def _zpseudo_rem(a, b):
    """prem(a, b): lc(b)^(da-db+1) * a reduced modulo b."""
    da, db = len(a) - 1, len(b) - 1
    r = list(a)
    lcb = b[-1]
    for i in range(da - db, -1, -1):
        coef = r[i + db]
        r = [c * lcb for c in r]
        if coef:
            for j, c in enumerate(b):
                r[i + j] -= coef * c
        r[i + db] = 0  # leading term cancels exactly
    return _ztrim(r)


def zgcd(a, b):
    """Primitive gcd in Z[x], positive leading coefficient."""
    a, b = _zprimitive(list(a))[1], _zprimitive(list(b))[1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zpseudo_rem(a, b)
        a, b = b, _zprimitive(r)[1]
    return a


def _zeval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# squarefree decomposition (Yun)

def squarefree_decomposition_z(f):
    """Yun's algorithm on a primitive integer polynomial with positive
    leading coefficient.  Returns [(primitive squarefree factor, mult)]."""
    out = []
    g = zgcd(f, _zderiv(f))
    if len(g) == 1:
        return [(list(f), 1)]
    c = _zdiv_exact(f, g)
    d = _zsub(_zdiv_exact(_zderiv(f), g), _zderiv(c))
    i = 1
    while len(c) > 1:
        a = zgcd(c, d)
        if len(a) > 1:
            out.append((a, i))
        c = _zdiv_exact(c, a)
        d = _zsub(_zdiv_exact(d, a), _zderiv(c))
        i += 1
    return out


# ---------------------------------------------------------------------------
# factorization mod p

def _ddf(f, p):
    """Distinct-degree split of a monic squarefree f mod p.

    Returns [(product of the irreducible factors of degree d, d)].
    """
    out = []
    v = list(f)
    h = [0, 1]
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = modpoly.powmod(h, p, v, p)
        g = modpoly.gcd(modpoly.sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            out.append((g, d))
            v = modpoly.pdivmod(v, g, p)[0]
            h = modpoly.pdivmod(h, v, p)[1]
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _test_polys(p):
    """Fixed enumeration of nonconstant polynomials mod p, for splitting."""
    k = p
    while True:
        digits = []
        n = k
        while n:
            digits.append(n % p)
            n //= p
        yield digits
        k += 1


def _edf(g, d, p):
    """Equal-degree split: g is monic squarefree mod p, all irreducible
    factors of degree d.  Deterministic sweep instead of random sampling."""
    n = (len(g) - 1) // d
    if n == 1:
        return [g]
    for r in _test_polys(p):
        if p == 2:
            # trace map r + r^2 + ... + r^(2^(d-1)) splits over F_2
            h = modpoly.pdivmod(r, g, p)[1]
            acc = h
            for _ in range(d - 1):
                h = modpoly.mulmod(h, h, g, p)
                acc = modpoly.add(acc, h, p)
            u = modpoly.gcd(acc, g, p)
        else:
            e = (p ** d - 1) // 2
            h = modpoly.powmod(r, e, g, p)
            u = modpoly.gcd(modpoly.sub(h, [1], p), g, p)
        if 1 < len(u) < len(g):
            left = _edf(u, d, p)
            right = _edf(modpoly.pdivmod(g, u, p)[0], d, p)
            return left + right
    raise AssertionError("equal-degree sweep exhausted")  # pragma: no cover


def factor_monic_mod(f, p):
    """All monic irreducible factors of a monic squarefree f mod p, sorted."""
    out = []
    for g, d in _ddf(f, p):
        out.extend(_edf(g, d, p))
    out.sort(key=lambda a: (len(a), a[::-1]))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, multifactor via a product tree)

def _zmod(a, m):
    return _ztrim([c % m for c in a])


def _mod_divmod_monic(a, b, m):
    """divmod of a by monic b, coefficients mod m."""
    r = [c % m for c in a]
    nb = len(b)
    if len(r) < nb:
        return [], _ztrim(r)
    q = [0] * (len(r) - nb + 1)
    for i in range(len(r) - nb, -1, -1):
        t = r[i + nb - 1]
        if t:
            q[i] = t
            for j in range(nb):
                r[i + j] = (r[i + j] - t * b[j]) % m
    return _ztrim(q), _ztrim(r[: nb - 1])


def _hensel_step(m, f, g, h, s, t):
    """One quadratic step: from f = g*h, s*g + t*h = 1 (mod m) to the same
    congruences mod m^2, h monic.  Returns (g, h, s, t) mod m^2."""
    mm = m * m
    e = _zmod(_zsub(f, _big_mul(g, h, mm)), mm)
    q, r = _mod_divmod_monic(_big_mul(s, e, mm), h, mm)
    g1 = _zmod(_zadd(_zadd(g, _big_mul(t, e, mm)), _big_mul(q, g, mm)), mm)
    h1 = _zmod(_zadd(h, r), mm)
    b = _zmod(_zsub(_zadd(_big_mul(s, g1, mm), _big_mul(t, h1, mm)), [1]), mm)
    c2, d2 = _mod_divmod_monic(_big_mul(s, b, mm), h1, mm)
    s1 = _zmod(_zsub(s, d2), mm)
    t1 = _zmod(_zsub(_zsub(t, _big_mul(t, b, mm)), _big_mul(c2, g1, mm)), mm)
    return g1, h1, s1, t1


def _lift_pair(f, g, h, p, target):
    """Lift f = g*h from mod p to mod target (a power of p), h monic."""
    _, s, t = modpoly.xgcd(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _zmod(g, target), _zmod(h, target)


def _lift_tree(f, facs, p, target):
    """f = lc(f) * prod(facs) mod p with facs monic pairwise coprime;
    returns monic lifts mod target with f = lc(f) * prod(lifts)."""
    if len(facs) == 1:
        lc_inv = pow(f[-1], -1, target)
        return [_zmod([c * lc_inv for c in f], target)]
    mid = len(facs) // 2
    g0 = [f[-1] % p]
    for v in facs[:mid]:
        g0 = modpoly.mul(g0, v, p)
    h0 = [1]
    for v in facs[mid:]:
        h0 = modpoly.mul(h0, v, p)
    g, h = _lift_pair(_zmod(f, target), g0, h0, p, target)
    return _lift_tree(g, facs[:mid], p, target) + \
        _lift_tree(h, facs[mid:], p, target)


# ---------------------------------------------------------------------------
# Zassenhaus driver

def _symmetric(a, m):
    half = m // 2
    return _ztrim([c - m if c > half else c for c in a])


def _good_primes(f):
    """First _CANDIDATE_PRIMES primes keeping f squarefree, with their
    distinct-degree data: yields (p, factor_count, degree_multiset)."""
    found = []
    for p in primes():
        if f[-1] % p == 0:
            continue
        fbar = modpoly.monic(modpoly.reduce_int_poly(f, p), p)
        if len(fbar) != len(f):
            continue  # cannot happen once lc survives; keep the guard
        if len(modpoly.gcd(fbar, modpoly.derivative(fbar, p), p)) != 1:
            continue
        degs = []
        count = 0
        for g, d in _ddf(fbar, p):
            k = (len(g) - 1) // d
            degs.extend([d] * k)
            count += k
        found.append((p, count, tuple(sorted(degs))))
        if len(found) == _CANDIDATE_PRIMES:
            return found
    return found  # pragma: no cover


def _subset_degree_sums(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def factor_squarefree_z(f):
    """Irreducible factors (primitive, positive lc) of a primitive
    squarefree integer polynomial of degree >= 1."""
    n = len(f) - 1
    if n == 1:
        return [list(f)]
    cands = _good_primes(f)

    possible = None
    for _, _, degs in cands:
        sums = _subset_degree_sums(degs)
        possible = sums if possible is None else possible & sums
    if not any(0 < d < n for d in possible):
        return [list(f)]  # degree analysis certifies irreducibility

    p = min(cands, key=lambda t: (t[1], t[0]))[0]
    fbar = modpoly.monic(modpoly.reduce_int_poly(f, p), p)
    modular = factor_monic_mod(fbar, p)
    if len(modular) == 1:
        return [list(f)]

    # Landau-Mignotte: any factor of f (times lc) has coefficients below B
    B = (math.isqrt(n + 1) + 1) * (1 << n) * max(abs(c) for c in f) \
        * abs(f[-1])
    target = p
    while target <= 2 * B:
        target *= p
    lifted = _lift_tree(list(f), modular, p, target)

    return _recombine(list(f), lifted, target, possible)


def _recombine(f, lifted, m, possible_degrees):
    out = []
    lc = f[-1]
    idx = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(idx):
        restart = False
        for combo in itertools.combinations(idx, s):
            deg = sum(len(lifted[i]) - 1 for i in combo)
            if deg not in possible_degrees:
                continue
            # cheap test on the trailing coefficient before full division
            if f[0] != 0:
                tc = lc
                for i in combo:
                    tc = tc * lifted[i][0] % m
                tc = tc - m if tc > m // 2 else tc
                if tc == 0 or (lc * f[0]) % tc != 0:
                    continue
            g = [lc % m]
            for i in combo:
                g = _zmod(_big_mul(g, lifted[i], m), m)
            g = _symmetric(g, m)
            g = _zprimitive(g)[1]
            if _zdivides(g, f):
                out.append(g)
                f = _zdiv_exact(f, g)
                lc = f[-1]
                idx = [i for i in idx if i not in combo]
                restart = True
                break
        if not restart:
            s += 1
    if len(f) > 1:
        out.append(f)
    return out


# ---------------------------------------------------------------------------
# public entry point

def factor_over_rationals(poly: QPoly) -> FactorizationResult:
    """Factor a nonzero rational polynomial into monic irreducibles over Q
    with a rational constant; factors sorted by (degree, coefficients)."""
    if poly.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content, prim = poly.primitive()
    if not prim or len(prim) == 1:
        return FactorizationResult(poly[0], [])
    constant = content
    factors = []
    for sqf, mult in squarefree_decomposition_z(prim):
        for irr in factor_squarefree_z(sqf):
            lead = irr[-1]
            constant *= Fraction(lead) ** mult
            factors.append((QPoly([Fraction(c, lead) for c in irr]), mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return FactorizationResult(constant, factors)
