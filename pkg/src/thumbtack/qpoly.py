"""Dense univariate polynomials over the rationals.

A polynomial is a tuple of ``Fraction`` coefficients, lowest degree first,
with no trailing zeros; the zero polynomial is the empty tuple.  QPoly values
are immutable and hashable so they can serve as dict keys (factor labels,
memo tables).

Serialization follows the package-wide convention: a JSON array of
coefficient strings "num/den", lowest degree first.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs",
                           _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, *a):
        raise AttributeError("QPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def x_power(k: int, c=1) -> QPoly:
        """c * X^k."""
        return QPoly([0] * k + [c])

    @staticmethod
    def x_pow_minus_const(n: int, a) -> QPoly:
        """X^n - a."""
        return QPoly([-Fraction(a)] + [0] * (n - 1) + [1])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> QPoly:
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, d: QPoly):
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dc = d.coeffs
        dn = len(dc)
        lead_inv = 1 / dc[-1]
        q = [Fraction(0)] * max(len(r) - dn + 1, 0)
        for i in range(len(r) - dn, -1, -1):
            t = r[i + dn - 1] * lead_inv
            if t:
                q[i] = t
                for j, c in enumerate(dc):
                    r[i + j] -= t * c
        return QPoly(q), QPoly(r[: dn - 1])

    def __floordiv__(self, d: QPoly) -> QPoly:
        return divmod(self, d)[0]

    def __mod__(self, d: QPoly) -> QPoly:
        return divmod(self, d)[1]

    def exact_div(self, d: QPoly) -> QPoly:
        q, r = divmod(self, d)
        if not r.is_zero():
            raise ValueError(f"{self} is not divisible by {d}")
        return q

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative polynomial power")
        out = QPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> QPoly:
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def derivative(self) -> QPoly:
        return QPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a, b) -> QPoly:
        """self(a*X + b)."""
        acc = QPoly()
        ax = QPoly([b, a])
        for c in reversed(self.coeffs):
            acc = acc * ax + QPoly([c])
        return acc

    def gcd(self, other: QPoly) -> QPoly:
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: QPoly):
        """(g, s, t) with s*self + t*other = g, g monic."""
        r0, r1 = self, other
        s0, s1 = QPoly([1]), QPoly()
        t0, t1 = QPoly(), QPoly([1])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = 1 / r0.leading()
        return r0 * inv, s0 * inv, t0 * inv

    # -- integer-polynomial bridge --------------------------------------

    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    def to_int_coeffs(self) -> tuple[int, ...]:
        """Integer coefficient tuple; raises if any denominator is not 1."""
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial does not have integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def primitive(self) -> tuple[Fraction, tuple[int, ...]]:
        """Write self = content * prim with prim a primitive integer
        polynomial with positive leading coefficient."""
        if self.is_zero():
            return Fraction(0), ()
        den = self.denominator_lcm()
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), tuple(c // g for c in ints)

    @staticmethod
    def from_int_coeffs(ints) -> QPoly:
        return QPoly(list(ints))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @staticmethod
    def from_json(arr) -> QPoly:
        return QPoly([Fraction(s) for s in arr])

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = " - " if c < 0 else (" + " if parts else "")
            c = abs(c)
            if i == 0:
                body = str(c)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if c == 1 else f"{c}*{xs}"
            parts.append(sign + body)
        return "".join(parts)


class FactorizationResult:
    """constant * prod(factor_i ^ mult_i) == the factored input, exactly.

    Factors are monic and irreducible over the coefficient field, sorted by
    (degree, coefficient tuple) so equal inputs give identical results.  The
    constant is a Fraction for rational factorizations; factorization over a
    cyclotomic field may produce a field-element constant.
    """

    __slots__ = ("constant", "factors")

    def __init__(self, constant, factors):
        self.constant = constant
        self.factors = list(factors)

    def reconstruct(self):
        if not self.factors:
            return QPoly([self.constant])
        out = None
        for f, m in self.factors:
            fm = f ** m
            out = fm if out is None else out * fm
        return out * self.constant

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        inner = ", ".join(f"({f}, {m})" for f, m in self.factors)
        return f"FactorizationResult({self.constant}, [{inner}])"
