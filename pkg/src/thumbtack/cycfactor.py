"""Factorization over cyclotomic fields by the norm/resultant method, and
exact n-th-root extraction grounded in it.

The norm of p(x) over Q(zeta_N) is Res_y(Phi_N(y), p(x - s*y)) for a shift
s chosen (increasing from 0) so the norm is squarefree; factoring the norm
over Q and mapping each rational factor H back through gcd(p, H(x + s*zeta))
yields the complete factorization over the field.

n-th roots of rationals: when the direct norm degree n*phi(N) fits the
size limit, X^n - a is factored outright.  For n = l^j inside the matching
tower Q(zeta_{l^m}) the root is extracted one l-th root at a time; each
stage is a degree-l factorization (norm degree l*phi(N)), and for j <= m any
choice among the l-th roots can be continued, because the deciding root of
unity zeta_l = zeta_{l^m}^(l^(m-1)) is itself an l^(j-1)-th power in the
field.  Every witness is verified by exact reconstruction before return.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .config import norm_degree_limit
from .errors import SizeLimitError
from .cyclotomic import CycElement, CycPoly, CyclotomicField, compose_shift
from .primes import factorint, next_prime
from .qpoly import FactorizationResult, QPoly
from .zassenhaus import (_zprimitive, _ztrim, _zderiv, _zpseudo_rem,
                         factor_over_rationals, zgcd)
from . import modpoly


# ---------------------------------------------------------------------------
# integer resultant (subresultant PRS)

def zresultant(A, B) -> int:
    """Resultant of two integer polynomials (0 if either is zero)."""
    a, b = _ztrim(list(A)), _ztrim(list(B))
    if not a or not b:
        return 0
    if len(a) == 1:
        return a[0] ** (len(b) - 1)
    if len(b) == 1:
        return b[0] ** (len(a) - 1)
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if ((len(a) - 1) & (len(b) - 1)) & 1:
            s = -s
    ca, a = _zprimitive(a)  # contents carry the signs
    cb, b = _zprimitive(b)
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        d = da - db
        if (da & 1) and (db & 1):
            s = -s
        r = _zpseudo_rem(a, b)
        if not r:
            return 0
        a, b = b, [c // (g * h ** d) for c in r]
        g = a[-1]
        if d == 1:
            h = g
        elif d > 1:
            h = (g ** d) // (h ** (d - 1))
        if len(b) == 1:
            break
    da = len(a) - 1
    h = (b[0] ** da) // (h ** (da - 1))
    return s * t * h


def interpolate(points) -> QPoly:
    """Exact polynomial through the given (x, value) pairs (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    coefs = [Fraction(v) for _, v in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - j])
    poly = QPoly()
    for i in range(n - 1, -1, -1):
        poly = poly * QPoly([-xs[i], 1]) + QPoly([coefs[i]])
    return poly


# ---------------------------------------------------------------------------
# norms

def _y_shift_reduce(field: CyclotomicField, q: QPoly) -> QPoly:
    """y * q(y) reduced modulo Phi_N(y); deg q < phi(N)."""
    coeffs = [Fraction(0)] + list(q.coeffs)
    if len(coeffs) > field.degree:
        top = coeffs.pop()
        if top:
            row = field._red_rows[0]
            coeffs = [c + top * r for c, r in zip(coeffs, row)]
    return QPoly(coeffs)


def _shifted_bivariate(field: CyclotomicField, p: CycPoly, s: int):
    """p(x - s*y) as a list over x-powers of y-polynomials (QPoly), with the
    y-part kept reduced modulo Phi (legal under a monic resultant)."""
    zero = QPoly()
    acc: list[QPoly] = []
    for c in reversed(p.coeffs):
        # acc <- acc*(x - s*y) + c(y)
        shifted = [zero] + acc                      # acc * x
        if s:
            for i, q in enumerate(acc):
                if q:
                    shifted[i] = shifted[i] - _y_shift_reduce(field, q) * s
        acc = shifted
        acc[0] = acc[0] + QPoly(c.coeffs)
    return acc


def trager_norm(field: CyclotomicField, p: CycPoly, s: int) -> QPoly:
    """Norm of p under the shift s: Res_y(Phi_N(y), p(x - s*y)).

    Computed by evaluation at integer points and exact interpolation; each
    evaluation is an integer subresultant resultant.
    """
    biv = _shifted_bivariate(field, p, s)
    deg = p.degree * field.degree
    phi_ints = list(field.modulus.to_int_coeffs())
    pts = []
    x = 0
    while len(pts) < deg + 1:
        xt = Fraction(x)
        q = QPoly()
        for k in range(len(biv) - 1, -1, -1):
            q = q * xt + biv[k]
        den = q.denominator_lcm()
        qi = [int(c * den) for c in q.coeffs]
        val = Fraction(zresultant(phi_ints, qi), den ** field.degree)
        pts.append((xt, val))
        x = -x if x > 0 else -x + 1   # 0, 1, -1, 2, -2, ...
    return interpolate(pts)


def _is_squarefree_q(f: QPoly) -> bool:
    """Squarefree test over Q: modular probes first, exact gcd fallback."""
    _, prim = f.primitive()
    prim = list(prim)
    dprim = _zderiv(prim)
    if not dprim:
        return len(prim) <= 2
    p = 2
    for _ in range(8):
        while prim[-1] % p == 0:
            p = next_prime(p)
        fb = modpoly.reduce_int_poly(prim, p)
        db = modpoly.derivative(fb, p)
        if len(fb) == len(prim) and db and \
                len(modpoly.gcd(fb, db, p)) == 1:
            return True
        p = next_prime(p)
    return len(zgcd(prim, dprim)) == 1


# ---------------------------------------------------------------------------
# factorization over the field

def _canonical_key(f: CycPoly):
    return (f.degree, tuple(c.coeffs for c in f.coeffs))


def _yun_over_field(p: CycPoly):
    """Squarefree decomposition of monic p over the field (char 0)."""
    out = []
    d = p.derivative()
    g = p.gcd(d)
    if g.degree == 0:
        return [(p, 1)]
    c = (p // g).monic()
    dd = (d // g) - c.derivative()
    i = 1
    while c.degree > 0:
        a = c.gcd(dd)  # monic; equals 1 when no factor has multiplicity i
        if a.degree > 0:
            out.append((a, i))
        c = (c // a).monic()
        dd = (dd // a) - c.derivative()
        i += 1
    return out


def factor_over_cyclotomic(p, field: CyclotomicField,
                           limit=None) -> FactorizationResult:
    """Complete factorization of p over Q(zeta_N), p a CycPoly (or a QPoly,
    lifted automatically).  Raises SizeLimitError when deg(p)*phi(N)
    exceeds the configured bound."""
    if isinstance(p, QPoly):
        p = field.lift_qpoly(p)
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    bound = norm_degree_limit(limit)
    if p.degree * field.degree > bound:
        raise SizeLimitError(
            f"norm degree {p.degree * field.degree} exceeds limit {bound}")

    lead = p.leading()
    constant = lead.rational_value() if lead.is_rational() else lead
    if p.degree == 0:
        return FactorizationResult(constant, [])
    pm = p.monic()

    if field.degree == 1:
        # the field is Q itself (conductor 1 or 2); residues are rational
        qp = QPoly([c.coeffs[0] for c in pm.coeffs])
        rat = factor_over_rationals(qp)
        facs = [(field.lift_qpoly(f), m) for f, m in rat.factors]
        facs.sort(key=lambda fm: _canonical_key(fm[0]))
        return FactorizationResult(constant * rat.constant, facs)

    factors = []
    for part, mult in _yun_over_field(pm):
        for s in range(4 * (p.degree * field.degree) + 5):
            norm = trager_norm(field, part, s)
            if _is_squarefree_q(norm):
                break
        else:  # pragma: no cover
            raise AssertionError("no squarefree shift found")
        rat = factor_over_rationals(norm)
        if rat.is_irreducible():
            factors.append((part, mult))
            continue
        remaining = part
        for h, _ in rat.factors:
            if remaining.degree == 0:
                break
            hc = compose_shift(field, h,
                               field.zeta() * s) if s else \
                field.lift_qpoly(h)
            g = remaining.gcd(hc)
            if g.degree > 0:
                factors.append((g, mult))
                remaining = (remaining // g).monic()
        if remaining.degree != 0:  # pragma: no cover
            raise AssertionError("trager map-back left a nontrivial part")
    factors.sort(key=lambda fm: _canonical_key(fm[0]))
    result = FactorizationResult(constant, factors)
    return result


# ---------------------------------------------------------------------------
# n-th roots

def _linear_roots(fac: FactorizationResult):
    """Roots supplied by the linear factors, canonically ordered."""
    roots = []
    for f, _ in fac.factors:
        if f.degree == 1:
            roots.append(-f.coeffs[0])
    roots.sort(key=lambda r: r.coeffs)
    return roots


def _int_nth_root(v: int, n: int) -> int:
    """Floor of the n-th root of v >= 1 (Newton, decreasing)."""
    if v < (1 << n):
        r = 1
        while (r + 1) ** n <= v:
            r += 1
        return r
    r = 1 << ((v.bit_length() + n - 1) // n)
    while True:
        nr = ((n - 1) * r + v // r ** (n - 1)) // n
        if nr >= r:
            return r
        r = nr


def _rational_nth_root(q: Fraction, n: int):
    """Exact n-th root in Q if one exists, else None."""
    if q < 0 and n % 2 == 0:
        return None
    sign = -1 if q < 0 else 1
    num, den = abs(q.numerator), q.denominator
    rn = _int_nth_root(num, n)
    if rn ** n != num:
        return None
    rd = _int_nth_root(den, n)
    if rd ** n != den:
        return None
    return Fraction(sign * rn, rd)


_lroot_cache: dict = {}


def _lth_roots_in_field(field: CyclotomicField, w: CycElement, l: int,
                        limit) -> list:
    """All l-th roots of w in the field, cached after extracting the largest
    rational l-th-power content."""
    # split off rational content q^l: roots(w) = q * roots(residual)
    scale = field.one()
    if not w.is_zero():
        nums = [c.numerator for c in w.coeffs if c != 0]
        dens = [c.denominator for c in w.coeffs if c != 0]
        g = 0
        for v in nums:
            g = math.gcd(g, v)
        lcm = 1
        for v in dens:
            lcm = lcm * v // math.gcd(lcm, v)
        content = Fraction(g, lcm)
        rho = Fraction(1)
        for pr, e in factorint(content.numerator).items():
            rho *= Fraction(pr) ** (e // l)
        for pr, e in factorint(content.denominator).items():
            rho /= Fraction(pr) ** (e // l)
        if rho != 1:
            w = w * (rho ** -l)
            scale = field.from_rational(rho)
    key = (field.conductor, l, w.coeffs)
    if key not in _lroot_cache:
        xl_minus_w = CycPoly(field, [-w] + [field.zero()] * (l - 1)
                             + [field.one()])
        fac = factor_over_cyclotomic(xl_minus_w, field, limit)
        roots = _linear_roots(fac)
        for r in roots:
            assert r ** l == w, "root witness failed reconstruction"
        _lroot_cache[key] = roots
    return [scale * r for r in _lroot_cache[key]]


def _staged_root(field: CyclotomicField, w: CycElement, l: int, j: int,
                 limit, single_branch: bool):
    """c with c^(l^j) = w, or None; one l-th root per stage."""
    if j == 0:
        return w
    roots = []
    if w.is_rational():
        r = _rational_nth_root(w.rational_value(), l)
        if r is not None:
            roots.append(field.from_rational(r))
    if not roots:
        roots = _lth_roots_in_field(field, w, l, limit)
    if not roots:
        return None
    if single_branch:
        roots = roots[:1]
    for r in roots:
        c = _staged_root(field, r, l, j - 1, limit, single_branch)
        if c is not None:
            return c
    return None


def _prime_power(n: int):
    f = factorint(n)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


def nth_root_in_cyclotomic(a, n: int, field: CyclotomicField, limit=None):
    """(True, witness CycElement) if X^n - a has a root in the field, else
    (False, None).  The witness satisfies witness**n == a exactly.

    Direct norm factorization when n*phi(N) fits the size limit; otherwise,
    for n = l^j matching a prime-power conductor l^m, staged l-th-root
    descent (single-branch legal for j <= m).
    """
    a = Fraction(a)
    if a == 0:
        raise ValueError("root extraction requires a nonzero rational")
    if n < 1:
        raise ValueError("root degree must be positive")
    bound = norm_degree_limit(limit)
    if n == 1:
        return True, field.from_rational(a)
    r = _rational_nth_root(a, n)
    if r is not None:
        return True, field.from_rational(r)

    # staged descent beats one huge norm whenever the tower matches: j
    # degree-l factorizations instead of one of norm degree l^j * phi(N)
    pp = _prime_power(n)
    cpp = _prime_power(field.conductor) if field.conductor > 1 else None
    if pp and cpp and pp[0] == cpp[0] and pp[1] >= 2 and \
            pp[0] * field.degree <= bound:
        l, j = pp
        m = cpp[1]
        w = _staged_root(field, field.from_rational(a), l, j, limit,
                         single_branch=(j <= m))
        if w is None:
            return False, None
        assert w ** n == a, "root witness failed reconstruction"
        return True, w

    if n * field.degree <= bound:
        fac = factor_over_cyclotomic(
            field.lift_qpoly(QPoly.x_pow_minus_const(n, a)), field, limit)
        roots = _linear_roots(fac)
        if not roots:
            return False, None
        w = roots[0]
        assert w ** n == a, "root witness failed reconstruction"
        return True, w
    raise SizeLimitError(
        f"norm degree {n * field.degree} exceeds limit {bound}")
