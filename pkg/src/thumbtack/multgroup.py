"""Finitely generated multiplicative subgroups of Q^x and of Q(t)^x.

Q^x is modeled as {+-1} x (free abelian group on the primes): a
FactoredRational is a sign plus a sparse prime-exponent vector, and a
MultSubgroup carries the exponent matrix of its generators (one column per
generator, one row per support prime) together with the row of sign bits.

Elements of Q(t)^x are factored against a basis of monic irreducible
labels; the rational constant is kept separate because over an
algebraically closed constant field every constant is divisible, so
constants never contribute to power-membership questions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DependentGeneratorsError
from .primes import factorint
from .qpoly import QPoly
from .zassenhaus import factor_over_rationals
from .zlattice import (IntMatrix, integer_kernel, kernel_mod, saturation,
                       smith_normal_form)


class FactoredRational:
    """sign * prod(p^e): exact factored form of a nonzero rational."""

    __slots__ = ("sign", "exponents")

    def __init__(self, sign: int, exponents):
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        exps = tuple((int(p), int(e)) for p, e in exponents if e != 0)
        primes_seen = [p for p, _ in exps]
        if primes_seen != sorted(set(primes_seen)):
            raise ValueError("exponents must be sorted by distinct primes")
        self.sign = sign
        self.exponents = exps

    def value(self) -> Fraction:
        v = Fraction(self.sign)
        for p, e in self.exponents:
            v *= Fraction(p) ** e
        return v

    def exponent_of(self, p: int) -> int:
        for q, e in self.exponents:
            if q == p:
                return e
        return 0

    def support(self) -> list[int]:
        return [p for p, _ in self.exponents]

    def is_one(self) -> bool:
        return self.sign == 1 and not self.exponents

    def is_torsion(self) -> bool:
        return not self.exponents

    def __mul__(self, other: FactoredRational) -> FactoredRational:
        exps: dict[int, int] = dict(self.exponents)
        for p, e in other.exponents:
            exps[p] = exps.get(p, 0) + e
        return FactoredRational(self.sign * other.sign,
                                sorted((p, e) for p, e in exps.items()
                                       if e != 0))

    def __pow__(self, n: int) -> FactoredRational:
        sign = self.sign if n % 2 else 1
        return FactoredRational(sign, [(p, e * n) for p, e in self.exponents])

    def __eq__(self, other):
        return isinstance(other, FactoredRational) and \
            self.sign == other.sign and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.sign, self.exponents))

    def to_str(self) -> str:
        body = "*".join(f"{p}^{e}" for p, e in self.exponents)
        sign = "+" if self.sign == 1 else "-"
        return sign + (body if body else "1")

    @staticmethod
    def from_str(s: str) -> FactoredRational:
        s = s.strip()
        sign = 1
        if s and s[0] in "+-":
            sign = -1 if s[0] == "-" else 1
            s = s[1:]
        if s in ("", "1"):
            return FactoredRational(sign, [])
        exps = []
        for part in s.split("*"):
            if "^" in part:
                p, e = part.split("^")
            else:
                p, e = part, "1"
            exps.append((int(p), int(e)))
        return FactoredRational(sign, sorted(exps))

    def __repr__(self):
        return f"FactoredRational({self.to_str()!r})"


def factor_rational(q) -> FactoredRational:
    """Exact sign and prime factorization of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("cannot factor zero")
    sign = 1 if q > 0 else -1
    exps: dict[int, int] = {}
    for p, e in factorint(abs(q.numerator)).items():
        exps[p] = exps.get(p, 0) + e
    for p, e in factorint(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    return FactoredRational(sign, sorted(exps.items()))


class MultSubgroup:
    """Subgroup of Q^x generated by a tuple of nonzero rationals."""

    def __init__(self, generators):
        gens = []
        for g in generators:
            if not isinstance(g, FactoredRational):
                g = factor_rational(g)
            gens.append(g)
        if not gens:
            raise ValueError("at least one generator required")
        self.generators = gens
        support: set[int] = set()
        for g in gens:
            support.update(g.support())
        self.support = sorted(support)
        self.exponent_matrix = IntMatrix(
            [[g.exponent_of(p) for g in gens] for p in self.support],
            cols=len(gens))
        self.torsion_row = [0 if g.sign == 1 else 1 for g in gens]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def element_from_exponents(self, e) -> FactoredRational:
        out = FactoredRational(1, [])
        for g, k in zip(self.generators, e):
            out = out * g ** int(k)
        return out

    def contains(self, x: FactoredRational) -> bool:
        """Solve the exponent system over Z and match the sign."""
        target = [x.exponent_of(p) for p in self.support]
        if any(p not in self.support for p in x.support()):
            return False
        sol = _solve_integer(self.exponent_matrix, target)
        if sol is None:
            return False
        # all solutions differ by kernel vectors; signs must match for some
        base_sign = sum(s * e for s, e in zip(self.torsion_row, sol)) % 2
        want = 0 if x.sign == 1 else 1
        if base_sign == want:
            return True
        for k in integer_kernel(self.exponent_matrix):
            if sum(s * e for s, e in zip(self.torsion_row, k)) % 2 == 1:
                return True
        return False

    def to_json(self):
        return [g.to_str() for g in self.generators]

    @staticmethod
    def from_json(obj) -> MultSubgroup:
        return MultSubgroup([FactoredRational.from_str(s) for s in obj])

    def __repr__(self):
        vals = ", ".join(str(g.value()) for g in self.generators)
        return f"MultSubgroup(<{vals}>)"


def _solve_integer(A: IntMatrix, b):
    """One integer solution x of A x = b, or None."""
    dec = smith_normal_form(A)
    # A = Uinv D Vinv; solve D y = U b, then x = V y
    ub = [sum(r * v for r, v in zip(row, b)) for row in dec.U.data]
    y = []
    for i in range(A.cols):
        d = dec.D.data[i][i] if i < min(A.rows, A.cols) else 0
        rhs = ub[i] if i < A.rows else 0
        if d == 0:
            if i < A.rows and rhs != 0:
                return None
            y.append(0)
        else:
            if rhs % d:
                return None
            y.append(rhs // d)
    for i in range(A.cols, A.rows):
        if ub[i] != 0:
            return None
    return [sum(row[j] * y[j] for j in range(A.cols)) for row in dec.V.data]


@dataclass
class IndependenceVerdict:
    independent: bool
    witness: list[int] | None = None


def independence_check(gamma: MultSubgroup) -> IndependenceVerdict:
    """Multiplicative independence: no nontrivial power product is a root
    of unity.  Over Q the only roots of unity are +-1, and both are ruled
    out exactly when the exponent matrix has full column rank."""
    kernel = integer_kernel(gamma.exponent_matrix)
    if not kernel:
        return IndependenceVerdict(True)
    w = kernel[0]
    g = 0
    for v in w:
        g = math.gcd(g, v)
    w = [v // g for v in w]
    first = next(v for v in w if v)
    if first < 0:
        w = [-v for v in w]
    value = gamma.element_from_exponents(w)
    assert value.is_torsion(), "witness failed reconstruction"
    return IndependenceVerdict(False, w)


@dataclass
class DivisionGroupReport:
    """Division group of a finitely generated subgroup of Q^x.

    division_generators generate {x : x^n in Gamma for some n >= 1}; for
    each one, powers records an explicit n with generator^n in Gamma, and
    index is [Gamma' : Gamma] (always finite).
    """
    index: int
    division_generators: list[FactoredRational]
    powers: list[int]


def division_group(gamma: MultSubgroup) -> DivisionGroupReport:
    """Saturation of the exponent lattice extended by the torsion {+-1};
    the index combines the free saturation defect with the sign defect."""
    basis, _ = saturation(gamma.exponent_matrix)
    s = basis.cols
    free_gens = []
    for j in range(s):
        col = basis.column(j)
        free_gens.append(FactoredRational(
            1, [(p, e) for p, e in zip(gamma.support, col) if e]))
    torsion = FactoredRational(-1, [])

    # index via the presentation of Gamma'/Gamma over Z/2 (+) Z^s:
    # columns are the generators of Gamma written in the Gamma'-basis,
    # plus the relation (-1)^2 = 1
    cols = []
    for j, g in enumerate(gamma.generators):
        target = gamma.exponent_matrix.column(j)
        coeffs = _solve_integer(basis, target)
        assert coeffs is not None, "generator outside its own saturation"
        eps = 0 if g.sign == 1 else 1
        cols.append([eps] + coeffs)
    cols.append([2] + [0] * s)
    pres = IntMatrix(cols, cols=s + 1).transpose()
    divisors = smith_normal_form(pres).divisors
    assert all(d != 0 for d in divisors), "division index not finite"
    index = math.prod(divisors)

    gens = [torsion] + free_gens
    powers = []
    for g in gens:
        n = 1
        while n <= 2 * index + 2:
            if gamma.contains(g ** n):
                powers.append(n)
                break
            n += 1
        else:  # pragma: no cover
            raise AssertionError("division generator without a power in Gamma")
    return DivisionGroupReport(index, gens, powers)


@dataclass
class PowerIntersectionVerdict:
    status: str                       # "pass" | "not-applicable" | "fail"
    counterexample: list[int] | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def power_intersection_check(gamma: MultSubgroup,
                             n: int) -> PowerIntersectionVerdict:
    """Verify Gamma^n = Gamma cap Q^{x n} for n coprime to twice the
    division index: every exponent class e mod n with gamma^e an n-th power
    must be the zero class.  Coprimality failures report not-applicable."""
    if n < 1:
        raise ValueError("n must be positive")
    idx = division_group(gamma).index
    if math.gcd(n, 2 * idx) != 1:
        return PowerIntersectionVerdict("not-applicable")
    for l, m in factorint(n).items():
        q = l ** m
        ker = kernel_mod(gamma.exponent_matrix, q)
        if not ker.is_trivial():
            # lift a nonzero kernel class to a counterexample mod n
            gen = next(row for row in ker.generator_matrix.data
                       if any(v % q for v in row))
            rest = n // q
            inv = pow(rest, -1, q)
            e = [v * rest * inv % n for v in gen]
            # verified: gamma^e is an n-th power with e nonzero mod n
            val = gamma.element_from_exponents(e)
            assert any(v % n for v in e)
            assert all(ex % n == 0 for _, ex in val.exponents)
            return PowerIntersectionVerdict("fail", e)
    return PowerIntersectionVerdict("pass")


# ---------------------------------------------------------------------------
# function-field elements

@dataclass(frozen=True)
class FunctionFieldElement:
    """constant * prod(label^e) with monic squarefree pairwise-coprime
    labels of degree >= 1."""
    constant: Fraction
    factors: tuple  # ((QPoly, int), ...)

    def __post_init__(self):
        for f, e in self.factors:
            if not f.is_monic() or f.degree < 1 or e == 0:
                raise ValueError(f"bad label/exponent ({f}, {e})")

    def labels(self) -> list[QPoly]:
        return [f for f, _ in self.factors]

    def exponent_of(self, label: QPoly) -> int:
        for f, e in self.factors:
            if f == label:
                return e
        return 0

    def is_constant(self) -> bool:
        return not self.factors

    def to_json(self):
        return {"constant": f"{self.constant.numerator}/"
                            f"{self.constant.denominator}",
                "factors": [[poly_str(f), e] for f, e in self.factors]}

    @staticmethod
    def from_json(obj) -> FunctionFieldElement:
        factors = tuple((parse_poly(lbl), int(e))
                        for lbl, e in obj["factors"])
        return FunctionFieldElement(Fraction(obj["constant"]), factors)


def poly_str(p: QPoly, var: str = "t") -> str:
    """Compact rendering like t^2-2t+1 (parse_poly reads it back)."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        c = abs(c)
        if i == 0:
            body = str(c)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if c == 1 else f"{c}{v}"
        parts.append(sign + body)
    return "".join(parts)


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    """Recursive descent over +, -, *, /, ^, parentheses, integers and the
    variable t; implicit multiplication (2t, 2(t+1)) is accepted.  Values
    are exact rational functions: pairs (numerator, denominator) of QPoly.
    """

    def __init__(self, text: str, var: str = "t"):
        self.text = text
        self.var = var
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        num, den = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected character {self.text[self.pos]!r}",
                             self.pos)
        return num, den

    def _expr(self):
        acc = self._term()
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                acc = _rf_add(acc, self._term())
            elif ch == "-":
                self.pos += 1
                acc = _rf_add(acc, _rf_neg(self._term()))
            else:
                return acc

    def _term(self):
        acc = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                acc = _rf_mul(acc, self._factor())
            elif ch == "/":
                self.pos += 1
                acc = _rf_div(acc, self._factor(), self.pos)
            elif ch.isdigit() or ch == self.var or ch == "(":
                acc = _rf_mul(acc, self._factor())  # implicit multiplication
            else:
                return acc

    def _factor(self):
        ch = self._peek()
        if ch == "-":
            self.pos += 1
            return _rf_neg(self._factor())
        if ch == "+":
            self.pos += 1
            return self._factor()
        base = self._atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            neg = False
            if self._peek() == "-":
                neg = True
                self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and \
                    self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise ParseError("expected integer exponent", self.pos)
            e = int(self.text[start:self.pos])
            out = _rf_pow(base, e, start)
            if neg:
                out = _rf_div((QPoly([1]), QPoly([1])), out, start)
            return out
        return base

    def _atom(self):
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return inner
        if ch == self.var:
            self.pos += 1
            return QPoly([0, 1]), QPoly([1])
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and \
                    self.text[self.pos].isdigit():
                self.pos += 1
            return QPoly([int(self.text[start:self.pos])]), QPoly([1])
        raise ParseError(f"unexpected character {ch!r}"
                         if ch else "unexpected end of input", self.pos)


def _rf_add(a, b):
    return a[0] * b[1] + b[0] * a[1], a[1] * b[1]


def _rf_neg(a):
    return -a[0], a[1]


def _rf_mul(a, b):
    return a[0] * b[0], a[1] * b[1]


def _rf_div(a, b, pos):
    if b[0].is_zero():
        raise ParseError("division by zero", pos)
    return a[0] * b[1], a[1] * b[0]


def _rf_pow(a, e, pos):
    return a[0] ** e, a[1] ** e


def parse_poly(text: str, var: str = "t") -> QPoly:
    num, den = _Parser(text, var).parse()
    if den.degree != 0:
        raise ParseError("expected a polynomial, got a rational function", 0)
    return num * (1 / den[0])


def parse_function_field(expr: str, var: str = "t") -> FunctionFieldElement:
    """Exact parse and factorization of a nonzero rational function: monic
    irreducible labels with integer exponents, constant kept separate."""
    num, den = _Parser(expr, var).parse()
    if num.is_zero():
        raise ValueError("the zero function is not a group element")
    fnum = factor_over_rationals(num)
    fden = factor_over_rationals(den)
    merged: dict[QPoly, int] = {}
    for f, e in fnum.factors:
        merged[f] = merged.get(f, 0) + e
    for f, e in fden.factors:
        merged[f] = merged.get(f, 0) - e
    factors = tuple(sorted(((f, e) for f, e in merged.items() if e != 0),
                           key=lambda fe: (fe[0].degree, fe[0].coeffs)))
    constant = fnum.constant / fden.constant
    return FunctionFieldElement(constant, factors)
