"""Cyclotomic fields Q(zeta_N) as exact quotient rings Q[y] / Phi_N(y).

Field elements are residues: coefficient vectors of length phi(N) over the
rationals, reduced after every multiplication via precomputed rows
y^k mod Phi_N.  No floating point anywhere; every identity asserted about
these elements is an exact polynomial congruence.

Polynomials with cyclotomic coefficients (CycPoly) carry the x-variable of
radical equations X^n - a; the y-variable inside coefficients is the root
of unity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .primes import factorint
from .qpoly import QPoly


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorint(n).items():
        out *= (p - 1) * p ** (e - 1)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> QPoly:
    """The n-th cyclotomic polynomial: monic, integer coefficients,
    degree phi(n); computed by exact division of X^n - 1 by all lower
    cyclotomic polynomials at divisors of n."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = QPoly.x_pow_minus_const(n, 1)
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> "CyclotomicField":
    return CyclotomicField(conductor)


class CyclotomicField:
    """Q(zeta_N); construct through cyclotomic_field() to share instances."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        self.conductor = conductor
        self.modulus = cyclotomic_poly(conductor)
        self.degree = self.modulus.degree
        assert self.degree == euler_phi(conductor)
        # rows[k] = y^(degree + k) mod Phi as integer vectors, k <= degree-2
        d = self.degree
        mod_ints = self.modulus.to_int_coeffs()
        rows = []
        cur = [-c for c in mod_ints[:-1]]
        rows.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [0] + cur
            top = nxt.pop()  # coefficient of y^degree after the shift
            if top:
                base = rows[0]
                nxt = [nxt[i] + top * base[i] for i in range(d)]
            cur = nxt
            rows.append(tuple(cur))
        self._red_rows = rows

    # -- element constructors ------------------------------------------

    def element(self, coeffs) -> CycElement:
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            vec = self._reduce(vec)
        vec += [Fraction(0)] * (self.degree - len(vec))
        return CycElement(self, tuple(vec))

    def zero(self) -> CycElement:
        return self.element([])

    def one(self) -> CycElement:
        return self.element([1])

    def from_rational(self, q) -> CycElement:
        return self.element([Fraction(q)])

    def zeta(self) -> CycElement:
        """The residue of y: a primitive conductor-th root of unity."""
        if self.degree == 1:
            # Phi_1 = y - 1 or Phi_2 = y + 1: zeta is rational
            return self.from_rational(1 if self.conductor == 1 else -1)
        return self.element([0, 1])

    def _reduce(self, vec):
        d = self.degree
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if c:
                row = self._red_rows[k - d]
                for j, rj in enumerate(row):
                    if rj:
                        vec[j] += c * rj
            vec[k] = Fraction(0)
        return vec[:d]

    def poly(self, coeffs) -> CycPoly:
        """CycPoly from a mixed list of CycElement / rational entries."""
        out = []
        for c in coeffs:
            out.append(c if isinstance(c, CycElement)
                       else self.from_rational(c))
        return CycPoly(self, out)

    def lift_qpoly(self, p: QPoly) -> CycPoly:
        return self.poly(list(p.coeffs))

    def __repr__(self):
        return f"Q(zeta_{self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and \
            self.conductor == other.conductor

    def __hash__(self):
        return hash(("cycfield", self.conductor))


class CycElement:
    """Residue of a rational polynomial in y modulo Phi_N(y)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, CycElement) and self.field == other.field \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycElement):
            if other.field != self.field:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        o = self._coerce(other)
        return CycElement(self.field, tuple(a + b for a, b in
                                            zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElement(self.field, tuple(a * q for a in self.coeffs))
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        vec = self.field._reduce(prod)
        return CycElement(self.field, tuple(vec))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> CycElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        g, s, _ = QPoly(self.coeffs).xgcd(self.field.modulus)
        if g.degree != 0:
            raise ArithmeticError("modulus not coprime to element")
        return self.field.element([c / g[0] for c in s.coeffs])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {"conductor": self.field.conductor,
                "coeffs": [f"{c.numerator}/{c.denominator}"
                           for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> CycElement:
        field = cyclotomic_field(int(obj["conductor"]))
        return field.element([Fraction(s) for s in obj["coeffs"]])

    def __repr__(self):
        return f"CycElement({self.field.conductor}; {QPoly(self.coeffs)})"


class CycPoly:
    """Dense polynomial in x with CycElement coefficients, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs):
        end = len(coeffs)
        while end > 0 and coeffs[end - 1].is_zero():
            end -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:end])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> CycElement:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, CycPoly) and self.field == other.field \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def __add__(self, other: CycPoly) -> CycPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycPoly(self.field, out)

    def __neg__(self) -> CycPoly:
        return CycPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: CycPoly) -> CycPoly:
        return self + (-other)

    def __mul__(self, other) -> CycPoly:
        if isinstance(other, (int, Fraction, CycElement)):
            return CycPoly(self.field, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CycPoly(self.field, [])
        zero = self.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return CycPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycPoly:
        out = self.field.poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> CycPoly:
        if self.is_zero() or self.is_monic():
            return self
        inv = self.coeffs[-1].inverse()
        return CycPoly(self.field, [c * inv for c in self.coeffs])

    def __divmod__(self, d: CycPoly):
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        dc = d.coeffs
        nd = len(dc)
        inv = dc[-1].inverse()
        zero = self.field.zero()
        q = [zero] * max(len(r) - nd + 1, 0)
        for i in range(len(r) - nd, -1, -1):
            t = r[i + nd - 1] * inv
            if not t.is_zero():
                q[i] = t
                for j in range(nd):
                    r[i + j] = r[i + j] - t * dc[j]
        return CycPoly(self.field, q), CycPoly(self.field, r[: nd - 1])

    def __mod__(self, d: CycPoly) -> CycPoly:
        return divmod(self, d)[1]

    def __floordiv__(self, d: CycPoly) -> CycPoly:
        return divmod(self, d)[0]

    def gcd(self, other: CycPoly) -> CycPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> CycPoly:
        return CycPoly(self.field,
                       [c * i for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: CycElement) -> CycElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def all_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_qpoly(self) -> QPoly:
        return QPoly([c.rational_value() for c in self.coeffs])

    def __repr__(self):
        inner = ", ".join(str(QPoly(c.coeffs)) for c in self.coeffs)
        return f"CycPoly({self.field.conductor}; [{inner}])"


def compose_shift(field: CyclotomicField, p: QPoly, c: CycElement) -> CycPoly:
    """p(x + c) for rational p, via binomial expansion (cheaper than Horner
    in the field when deg p is large)."""
    n = p.degree
    powers = [field.one()]
    for _ in range(n):
        powers.append(powers[-1] * c)
    pascal = [[1]]
    for i in range(1, n + 1):
        prev = pascal[-1]
        pascal.append([1] + [prev[k - 1] + prev[k]
                             for k in range(1, i)] + [1])
    out = []
    for j in range(n + 1):
        acc = field.zero()
        for i in range(j, n + 1):
            a = p[i]
            if a:
                acc = acc + powers[i - j] * (a * pascal[i][j])
        out.append(acc)
    return CycPoly(field, out)
