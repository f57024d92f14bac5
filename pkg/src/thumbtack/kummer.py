"""Finite-level Kummer images over Q, openness certificates, and the
geometric (function-field) counterpart.

For a multiplicatively independent tuple generating Gamma <= Q^x and a
prime-power level l^m, the relation lattice

    R = {e mod l^m : gamma^e in Q(zeta_{l^m})^{x l^m}}

is assembled from linear congruences on the exponent matrix.  For odd l a
rational is an l^j-th power in the cyclotomic tower exactly when all its
prime exponents are divisible by l^j (adjoining any other radical would
create a non-abelian subfield of an abelian extension).  For l = 2 the
tower is entangled: odd primes still need full divisibility, while the
(-1, 2)-component is decided by a memoized table per (m, j), filled by the
exact factorization oracle; sqrt(2), sqrt(-2) and i account for the three
quadratic subfields, and deeper membership is whatever the oracle certifies.

The image of the level-l^m Kummer cocycle is the annihilator of R under
the standard pairing on (Z/l^m)^r; its order always equals the Kummer
degree [Q(zeta_{l^m}, Gamma^{1/l^m}) : Q(zeta_{l^m})].
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import cyclotomic_field
from .cycfactor import nth_root_in_cyclotomic
from .errors import DependentGeneratorsError, SizeLimitError, VerificationError
from .multgroup import (FactoredRational, FunctionFieldElement, MultSubgroup,
                        division_group, factor_rational, independence_check)
from .primes import is_prime
from .qpoly import QPoly
from .zlattice import (IntMatrix, ModSubgroup, integer_kernel, kernel_mod,
                       orthogonal_complement_mod)

MEMBERSHIP_HEADROOM = 2  # j may exceed m by at most this factor


@dataclass(frozen=True)
class KummerLevel:
    """The prime-power level l^m."""
    l: int
    m: int

    def __post_init__(self):
        if not is_prime(self.l):
            raise ValueError(f"{self.l} is not prime")
        if self.m < 1:
            raise ValueError("level exponent must be >= 1")

    @property
    def conductor(self) -> int:
        return self.l ** self.m

    def field(self):
        return cyclotomic_field(self.conductor)


@dataclass
class RelationLattice:
    level: KummerLevel
    rank: int
    subgroup: ModSubgroup

    def quotient_order(self) -> int:
        return self.subgroup.index()


@dataclass
class LevelImage:
    level: KummerLevel
    rank: int
    image: ModSubgroup
    index: int

    def divisor_exponents(self) -> list[int]:
        """k_i with image elementary divisors l^{k_i}."""
        return [_l_valuation(d, self.level.l) for d in self.image.divisors]


@dataclass
class OpennessCertificate:
    l: int
    levels: list  # (m, divisors of image, index)
    stabilized: bool
    limit_divisors: list[int] | None
    failure_witness: list[int] | None = None

    def to_json(self, gamma=None):
        out = {"l": self.l,
               "levels": [{"m": m,
                           "divisors": [str(d) for d in divs],
                           "index": str(idx)}
                          for m, divs, idx in self.levels],
               "stabilized": self.stabilized,
               "limit": [str(d) for d in self.limit_divisors]
               if self.limit_divisors is not None else None}
        if gamma is not None:
            out = {"gamma": gamma.to_json(), **out}
        if self.failure_witness is not None:
            out["failure_witness"] = [str(v) for v in self.failure_witness]
        return out


@dataclass
class DescentWitness:
    """c with c^(l^m) = a^kappa, verified exactly."""
    a: FactoredRational
    level: KummerLevel
    kappa: int
    c: Fraction


@dataclass
class SahDescentResult:
    hypothesis_holds: bool
    witness: DescentWitness | None = None


def _l_valuation(d: int, l: int) -> int:
    v = 0
    while d % l == 0 and d > 1:
        d //= l
        v += 1
    return v


# ---------------------------------------------------------------------------
# membership of rationals among l^j-th powers in Q(zeta_{l^m})

_table_lock = threading.Lock()
_component_tables: dict[tuple[int, int], frozenset] = {}


def _distilled(a) -> FactoredRational:
    if isinstance(a, FactoredRational):
        return a
    return factor_rational(a)


def _fill_component_table(m: int, j: int, limit=None) -> frozenset:
    """Membership table T = {(s, t) : (-1)^s 2^t in Q(zeta_{2^m})^{x 2^j}}.

    T is a subgroup of Z/2 x Z/2^j (kernel of a homomorphism into the
    power-class group), so a binary descent on the 2-part plus at most two
    sign candidates pins it down with a handful of oracle calls; every
    member the oracle certifies carries an exact root witness.
    """
    F = cyclotomic_field(2 ** m)
    n = 2 ** j

    def oracle(s, t):
        value = Fraction((-1) ** s * 2 ** t)
        ok, _ = nth_root_in_cyclotomic(value, n, F, limit)
        return ok

    k = j
    while k > 0 and oracle(0, 2 ** (k - 1)):
        k -= 1
    members = {(0, 0)}
    step = (2 ** k) % n
    if step:
        t = step
        while t:
            members.add((0, t))
            t = (t + step) % n
    candidates = [(1, 0)]
    if k >= 1:
        candidates.append((1, (2 ** (k - 1)) % n))
    for s0, t0 in candidates:
        if oracle(s0, t0):
            members |= {(1, (t0 + t) % n) for _, t in list(members)}
            break
    return frozenset(members)


def component_table(m: int, j: int, limit=None) -> frozenset:
    """Memoized (write-once) table of dyadic power classes; concurrent
    fills compute identical values, so last-write-wins is harmless."""
    key = (m, j)
    tab = _component_tables.get(key)
    if tab is None:
        tab = _fill_component_table(m, j, limit)
        with _table_lock:
            _component_tables.setdefault(key, tab)
            tab = _component_tables[key]
    return tab


def cyclotomic_power_membership(a, j: int, level: KummerLevel,
                                limit=None, force_oracle=False) -> bool:
    """Decide a in Q(zeta_{l^m})^{x l^j} for a nonzero rational a."""
    fa = _distilled(a)
    if fa.sign == 1 and not fa.exponents and j >= 0:
        return True
    if j < 1 or j > MEMBERSHIP_HEADROOM * level.m:
        raise ValueError(f"power exponent {j} outside headroom for level")
    l, m = level.l, level.m
    n = l ** j
    if force_oracle:
        ok, _ = nth_root_in_cyclotomic(fa.value(), n, level.field(), limit)
        return ok
    if l != 2:
        # odd towers acquire no new rational radicals: a is an l^j-th power
        # iff it already is one in Q up to sign, and the sign is free
        return all(e % n == 0 for _, e in fa.exponents)
    # 2-part: odd primes need full divisibility ...
    if any(p != 2 and e % n for p, e in fa.exponents):
        return False
    s = 0 if fa.sign == 1 else 1
    t = fa.exponent_of(2) % n
    if j == 1 and m >= 3:
        # the three quadratic subfields: sqrt(-1), sqrt(2), sqrt(-2)
        return True  # odd part is square by the check above; (s, t) free
    # ... and the (-1, 2)-component is settled by the oracle table
    return (s, t) in component_table(m, j, limit)


# ---------------------------------------------------------------------------
# relation lattices and images

def _embedded_component_rows(gamma: MultSubgroup, level: KummerLevel,
                             limit=None) -> list[list[int]]:
    """Linear congruence rows (mod 2^m) encoding membership of the
    (-1, 2)-component of gamma^e in the table subgroup."""
    q = level.conductor
    m = level.m
    tab = component_table(m, m, limit)
    # embed Z/2 x Z/2^m into (Z/2^m)^2 via (s, t) -> (s*2^(m-1), t)
    emb = [[(s * (q // 2)) % q, t % q] for s, t in tab]
    T = ModSubgroup(q, 2, emb)
    comp = orthogonal_complement_mod(T)
    sigma = gamma.torsion_row
    delta = [g.exponent_of(2) for g in gamma.generators]
    rows = []
    for c1, c2 in comp.generator_matrix.data:
        rows.append([(c1 * (q // 2) * sg + c2 * dg) % q
                     for sg, dg in zip(sigma, delta)])
    return rows


def relation_lattice(gamma: MultSubgroup, level: KummerLevel,
                     limit=None) -> RelationLattice:
    """R = {e mod l^m : gamma^e is an l^m-th power in Q(zeta_{l^m})},
    assembled from congruence conditions and re-verified entrywise."""
    verdict = independence_check(gamma)
    if not verdict.independent:
        raise DependentGeneratorsError("generators are dependent",
                                       verdict.witness)
    q = level.conductor
    if level.l != 2:
        sub = kernel_mod(gamma.exponent_matrix, q)
    else:
        rows = [row[:] for p, row in
                zip(gamma.support, gamma.exponent_matrix.data) if p != 2]
        rows += _embedded_component_rows(gamma, level, limit)
        if not rows:
            rows = [[0] * gamma.rank]
        sub = kernel_mod(IntMatrix(rows, cols=gamma.rank), q)
    for gen in sub.generator_matrix.data:
        if any(v % q for v in gen):
            value = gamma.element_from_exponents(gen)
            if not cyclotomic_power_membership(value, level.m, level, limit):
                raise VerificationError(
                    "relation lattice generator failed re-verification",
                    witness=gen)
    return RelationLattice(level, gamma.rank, sub)


def relation_lattice_enumerated(gamma: MultSubgroup, level: KummerLevel,
                                limit=None, cap=512) -> RelationLattice:
    """Oracle-only cross-check: test every class e in (Z/l^m)^r with the
    factorization oracle.  Exponentially slow on purpose; guarded by cap."""
    verdict = independence_check(gamma)
    if not verdict.independent:
        raise DependentGeneratorsError("generators are dependent",
                                       verdict.witness)
    q = level.conductor
    r = gamma.rank
    if q ** r > cap:
        raise SizeLimitError(f"enumeration space {q**r} exceeds cap {cap}")
    F = level.field()
    members = []
    idx = [0] * r
    while True:
        value = gamma.element_from_exponents(idx).value()
        ok, _ = nth_root_in_cyclotomic(value, q, F, limit)
        if ok:
            members.append(list(idx))
        for i in range(r):
            idx[i] += 1
            if idx[i] < q:
                break
            idx[i] = 0
        else:
            break
    return RelationLattice(level, r, ModSubgroup(q, r, members))


def kummer_degree(gamma: MultSubgroup, level: KummerLevel,
                  limit=None) -> int:
    """[Q(zeta_{l^m}, Gamma^{1/l^m}) : Q(zeta_{l^m})] = |(Z/l^m)^r / R|."""
    return relation_lattice(gamma, level, limit).quotient_order()


def rho_image(gamma: MultSubgroup, level: KummerLevel,
              limit=None) -> LevelImage:
    """Image of the level-l^m Kummer cocycle inside (Z/l^m)^r: the
    annihilator of the relation lattice (the extension's character group)."""
    rel = relation_lattice(gamma, level, limit)
    image = orthogonal_complement_mod(rel.subgroup)
    q = level.conductor
    degree = rel.quotient_order()
    if image.order() != degree:
        raise VerificationError(
            "image order disagrees with the Kummer degree",
            witness={"image": image.to_json(), "degree": str(degree)})
    index = q ** gamma.rank // image.order()
    return LevelImage(level, gamma.rank, image, index)


# ---------------------------------------------------------------------------
# certificates

@dataclass
class HorizontalEntry:
    l: int
    coprime_to_threshold: bool
    full: bool
    first_failure_m: int | None = None
    witness: list[int] | None = None


@dataclass
class HorizontalReport:
    division_index: int
    m_max: int
    entries: list[HorizontalEntry]

    def exceptional_primes(self) -> list[int]:
        return [e.l for e in self.entries if not e.full]

    def all_coprime_full(self) -> bool:
        return all(e.full for e in self.entries if e.coprime_to_threshold)


def horizontal_certificate(gamma: MultSubgroup, prime_range, m_max: int,
                           limit=None) -> HorizontalReport:
    """Surjectivity sweep: for each prime l in range and each m <= m_max,
    is the image all of (Z/l^m)^r?  Primes coprime to twice the division
    index are asserted full (the sufficient condition); the others are
    computed and reported rather than skipped."""
    idx = division_group(gamma).index
    entries = []
    for l in sorted(l for l in set(prime_range) if is_prime(l)):
        coprime = math.gcd(l, 2 * idx) == 1
        full = True
        fail_m = None
        witness = None
        for m in range(1, m_max + 1):
            img = rho_image(gamma, KummerLevel(l, m), limit)
            if not img.image.is_full():
                full = False
                fail_m = m
                rel = relation_lattice(gamma, KummerLevel(l, m), limit)
                witness = next(row for row in
                               rel.subgroup.generator_matrix.data
                               if any(v % rel.subgroup.modulus for v in row))
                break
        if coprime and not full:
            raise VerificationError(
                f"horizontal surjectivity failed at coprime prime {l}",
                witness={"l": l, "m": fail_m, "relation": witness})
        entries.append(HorizontalEntry(l, coprime, full, fail_m, witness))
    return HorizontalReport(idx, m_max, entries)


def vertical_certificate(gamma: MultSubgroup, l: int, m_max: int,
                         limit=None) -> OpennessCertificate:
    """Image tower at l^1, ..., l^{m_max}.

    Tower check: the mod-l^m reduction of the level-(m+1) image always lies
    inside the level-m image (restricting an automorphism of the bigger
    radical-cyclotomic extension fixes the smaller base).  Equality can
    fail exactly while new entanglement enters (e.g. sqrt(2) joining the
    cyclotomic base); stabilization demands the elementary-divisor pattern
    repeat on the final two levels *with* equality of the reduction there,
    which pins down the open subgroup l^{k_1} Z_l x ... x l^{k_r} Z_l.
    Non-stabilization within m_max is inconclusive, never a failure.
    """
    images = []
    for m in range(1, m_max + 1):
        images.append(rho_image(gamma, KummerLevel(l, m), limit))
    for lo, hi in zip(images, images[1:]):
        reduced = hi.image.reduce_mod(lo.level.conductor)
        if not reduced.issubset(lo.image):
            raise VerificationError(
                "image tower is not compatible",
                witness={"m": lo.level.m,
                         "level": lo.image.to_json(),
                         "reduced": reduced.to_json()})
    levels = [(img.level.m, img.image.divisors, img.index) for img in images]
    stabilized = False
    limit_divisors = None
    if m_max >= 2:
        k_last = images[-1].divisor_exponents()
        k_prev = images[-2].divisor_exponents()
        tail_equal = images[-1].image.reduce_mod(
            images[-2].level.conductor) == images[-2].image
        if k_last == k_prev and tail_equal:
            stabilized = True
            limit_divisors = [l ** k for k in k_last]
    return OpennessCertificate(l, levels, stabilized, limit_divisors)


# ---------------------------------------------------------------------------
# Sah descent

def descent_exponent(l: int) -> int:
    """kappa = l: the automorphism raising roots of unity to the power
    l + 1 exists over Q for every l (l + 1 is an l-adic unit), and the
    multiplicative translation of the centrality identity trivializes the
    kappa-th power of a vanishing cocycle, not the (l+1)-st."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    return l


def sah_descent_check(a, level: KummerLevel, limit=None) -> SahDescentResult:
    """If a^(1/l^m) generates a trivial extension over Q(zeta_{l^m}) (the
    root already lies in the cyclotomic field), produce c in Q with
    c^(l^m) = a^kappa, kappa = descent_exponent(l)."""
    fa = _distilled(a)
    F = level.field()
    q = level.conductor
    ok, _ = nth_root_in_cyclotomic(fa.value(), q, F, limit)
    if not ok:
        return SahDescentResult(False)
    kappa = descent_exponent(level.l)
    target = fa ** kappa
    bad = [(p, e) for p, e in target.exponents if e % q]
    if bad:
        raise VerificationError(
            "descent target is not an l^m-th power: counterexample to the "
            "corrected descent exponent", witness={"a": fa.to_str(),
                                                   "offending": bad})
    c = Fraction(1)
    for p, e in target.exponents:
        c *= Fraction(p) ** (e // q)
    if target.sign == -1:
        if q % 2 == 0:
            raise VerificationError(
                "negative descent target at an even level",
                witness={"a": fa.to_str()})
        c = -c
    if c ** q != fa.value() ** kappa:
        raise VerificationError("descent witness failed reconstruction",
                                witness={"a": fa.to_str(), "c": str(c)})
    return SahDescentResult(True, DescentWitness(fa, level, kappa, c))


# ---------------------------------------------------------------------------
# injectivity profiles

@dataclass
class InjectivityProfile:
    x: FactoredRational
    l: int
    degrees: list[int]
    strictly_increasing_from: int | None

    def nontrivial(self) -> bool:
        return self.strictly_increasing_from is not None


def injectivity_profile(x, l: int, m_max: int,
                        limit=None) -> InjectivityProfile:
    """Kummer degree sequence of the cyclic group <x> along the l-power
    tower; a strictly increasing tail certifies that the profinite Kummer
    class of x is nontrivial (x admits no unbounded nest of roots in Q)."""
    fx = _distilled(x)
    if fx.is_torsion():
        raise ValueError("torsion element: injectivity excludes roots of "
                         "unity")
    gamma = MultSubgroup([fx])
    degrees = [kummer_degree(gamma, KummerLevel(l, m), limit)
               for m in range(1, m_max + 1)]
    start = None
    for i in range(len(degrees) - 1):
        if all(degrees[k + 1] > degrees[k] for k in range(i, len(degrees) - 1)):
            start = i + 1
            break
    return InjectivityProfile(fx, l, degrees, start)


# ---------------------------------------------------------------------------
# geometric case

def geometric_relation_matrix(elements: list[FunctionFieldElement]):
    """Label-exponent matrix: rows indexed by the merged label basis."""
    labels: set[QPoly] = set()
    for el in elements:
        if el.is_constant():
            raise ValueError("constant function-field element")
        labels.update(el.labels())
    basis = sorted(labels, key=lambda f: (f.degree, f.coeffs))
    matrix = IntMatrix([[el.exponent_of(lbl) for el in elements]
                        for lbl in basis], cols=len(elements))
    return basis, matrix


def geometric_rho_image(elements: list[FunctionFieldElement],
                        level: KummerLevel) -> LevelImage:
    """Kummer image for a tuple in a rational function field over an
    algebraically closed constant field: constants are divisible and drop
    out, labels with disjoint root sets cannot entangle, so the relation
    lattice is exactly the kernel of the label matrix mod l^m."""
    _, matrix = geometric_relation_matrix(elements)
    kern = integer_kernel(matrix)
    if kern:
        w = kern[0]
        g = 0
        for v in w:
            g = math.gcd(g, v)
        w = [v // g for v in w]
        if next(v for v in w if v) < 0:
            w = [-v for v in w]
        raise DependentGeneratorsError(
            "elements are dependent modulo constants", w)
    q = level.conductor
    rel = kernel_mod(matrix, q)
    image = orthogonal_complement_mod(rel)
    index = q ** matrix.cols // image.order()
    return LevelImage(level, matrix.cols, image, index)
