"""Integer matrix normal forms and subgroup calculus modulo prime powers.

Everything is arbitrary-precision; the matrices arising here are tiny
(rank <= number of primes in play), so correctness beats cleverness.

Conventions: Smith decompositions satisfy D = U * A * V with U, V
unimodular (verified); Hermite forms are row-style, reduced, with zero rows
dropped; a canonical ModSubgroup of (Z/q)^r is stored through the Hermite
basis of its preimage lattice q*Z^r <= L <= Z^r together with the elementary
divisors of that lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import VerificationError
from .primes import factorint


class IntMatrix:
    """Dense integer matrix; data is a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = [list(r) for r in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else (cols or 0)
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged matrix")
        self.data = data

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix([[1 if i == j else 0 for j in range(n)]
                          for i in range(n)], cols=n)

    @staticmethod
    def zeros(r: int, c: int) -> IntMatrix:
        return IntMatrix([[0] * c for _ in range(r)], cols=c)

    def copy(self) -> IntMatrix:
        return IntMatrix([r[:] for r in self.data], cols=self.cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)], cols=self.rows)

    def __mul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose().data
        return IntMatrix([[sum(a * b for a, b in zip(row, col))
                           for col in ot] for row in self.data],
                         cols=other.cols)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data \
            and self.cols == other.cols

    def __hash__(self):
        return hash((self.cols, tuple(tuple(r) for r in self.data)))

    def column(self, j: int) -> list[int]:
        return [self.data[i][j] for i in range(self.rows)]

    def det(self) -> int:
        """Exact determinant (fraction-free Bareiss)."""
        if self.rows != self.cols:
            raise ValueError("determinant of a nonsquare matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [r[:] for r in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_json(self):
        return [[str(v) for v in row] for row in self.data]

    @staticmethod
    def from_json(obj) -> IntMatrix:
        return IntMatrix([[int(v) for v in row] for row in obj])

    def __repr__(self):
        return f"IntMatrix({self.data})"


@dataclass
class SmithDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    Uinv: IntMatrix

    @property
    def divisors(self) -> list[int]:
        n = min(self.D.rows, self.D.cols)
        return [self.D.data[i][i] for i in range(n)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d != 0)


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Verified Smith decomposition D = U*A*V with the divisibility chain
    d1 | d2 | ...; pivot selection (smallest |entry|, ties by position) is
    deterministic, so equal inputs give identical decompositions."""
    M = A.copy()
    r, c = M.rows, M.cols
    U = IntMatrix.identity(r)
    Uinv = IntMatrix.identity(r)
    V = IntMatrix.identity(c)
    m = M.data

    def row_op(i, k, q):  # row_i -= q * row_k
        m[i] = [a - q * b for a, b in zip(m[i], m[k])]
        U.data[i] = [a - q * b for a, b in zip(U.data[i], U.data[k])]
        for row in Uinv.data:  # col_k += q * col_i
            row[k] += q * row[i]

    def col_op(j, k, q):  # col_j -= q * col_k
        for row in m:
            row[j] -= q * row[k]
        for row in V.data:
            row[j] -= q * row[k]

    def row_swap(i, k):
        m[i], m[k] = m[k], m[i]
        U.data[i], U.data[k] = U.data[k], U.data[i]
        for row in Uinv.data:
            row[i], row[k] = row[k], row[i]

    def col_swap(j, k):
        for row in m:
            row[j], row[k] = row[k], row[j]
        for row in V.data:
            row[j], row[k] = row[k], row[j]

    def row_negate(i):
        m[i] = [-a for a in m[i]]
        U.data[i] = [-a for a in U.data[i]]
        for row in Uinv.data:
            row[i] = -row[i]

    for k in range(min(r, c)):
        while True:
            # deterministic pivot: smallest absolute nonzero, ties by position
            best = None
            for i in range(k, r):
                for j in range(k, c):
                    v = m[i][j]
                    if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best != (k, k):
                if best[0] != k:
                    row_swap(k, best[0])
                if best[1] != k:
                    col_swap(k, best[1])
            if m[k][k] < 0:
                row_negate(k)
            piv = m[k][k]
            dirty = False
            for i in range(k + 1, r):
                if m[i][k]:
                    row_op(i, k, m[i][k] // piv)
                    if m[i][k]:
                        dirty = True
            for j in range(k + 1, c):
                if m[k][j]:
                    col_op(j, k, m[k][j] // piv)
                    if m[k][j]:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if m[i][j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(k, offender, -1)  # pulls the offending row into row k

    D = IntMatrix(m, cols=c)
    dec = SmithDecomposition(U, D, V, Uinv)
    _verify_snf(A, dec)
    return dec


def _verify_snf(A: IntMatrix, dec: SmithDecomposition):
    if dec.U * A * dec.V != dec.D:
        raise VerificationError("Smith decomposition failed D = U*A*V",
                                witness=(A.to_json(), dec.D.to_json()))
    if abs(dec.U.det()) != 1 or abs(dec.V.det()) != 1:
        raise VerificationError("Smith transform not unimodular")
    if dec.U * dec.Uinv != IntMatrix.identity(A.rows):
        raise VerificationError("tracked inverse of U is wrong")
    ds = dec.divisors
    for i in range(len(ds) - 1):
        if ds[i] < 0 or (ds[i + 1] % ds[i] if ds[i] else ds[i + 1]):
            raise VerificationError(f"divisor chain broken: {ds}")


def hermite_normal_form(A: IntMatrix) -> IntMatrix:
    """Reduced row Hermite normal form, zero rows dropped: the canonical
    basis of the row lattice (pivots positive, entries above in [0, pivot))."""
    m = [r[:] for r in A.data]
    rows, cols = len(m), A.cols
    pivot_row = 0
    pivots = []
    for j in range(cols):
        # clear column j below pivot_row by gcd steps
        nz = [i for i in range(pivot_row, rows) if m[i][j]]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda i: (abs(m[i][j]), i))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][j] // m[i0][j]
                m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
            nz = [i for i in nz if m[i][j]]
        i0 = nz[0]
        m[pivot_row], m[i0] = m[i0], m[pivot_row]
        if m[pivot_row][j] < 0:
            m[pivot_row] = [-a for a in m[pivot_row]]
        # reduce the entries above into [0, pivot)
        piv = m[pivot_row][j]
        for i in range(pivot_row):
            q = m[i][j] // piv
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[pivot_row])]
        pivots.append(j)
        pivot_row += 1
        if pivot_row == rows:
            break
    return IntMatrix(m[:pivot_row], cols=cols)


def integer_kernel(A: IntMatrix) -> list[list[int]]:
    """Basis of {x in Z^cols : A x = 0} (columns of V at zero divisors)."""
    dec = smith_normal_form(A)
    ds = dec.divisors
    out = []
    for i in range(A.cols):
        d = ds[i] if i < len(ds) else 0
        if d == 0:
            out.append(dec.V.column(i))
    return out


def saturation(L: IntMatrix):
    """Saturation of the column lattice of L inside Z^rows.

    Returns (basis, index): basis columns span {v : k*v in L for some k>=1}
    in column Hermite form, and index = [saturation : L] = product of the
    nonzero elementary divisors.
    """
    dec = smith_normal_form(L)
    ds = [d for d in dec.divisors if d != 0]
    s = len(ds)
    index = math.prod(ds)
    cols = [dec.Uinv.column(i) for i in range(s)]
    if not cols:
        return IntMatrix.zeros(L.rows, 0), 1
    basis_rows = hermite_normal_form(IntMatrix(cols, cols=L.rows))
    return basis_rows.transpose(), index


class ModSubgroup:
    """Canonical subgroup of (Z/q)^rank, q a prime power.

    generator_matrix rows are the Hermite basis of the preimage lattice
    (reduced mod q, zero rows kept out); divisors d1 | ... | d_rank are the
    elementary divisors of that lattice, so the subgroup order is
    prod(q // d_i).
    """

    __slots__ = ("modulus", "rank", "divisors", "generator_matrix")

    def __init__(self, modulus: int, rank: int, gens):
        f = factorint(modulus)
        if len(f) != 1:
            raise ValueError(f"modulus {modulus} is not a prime power")
        self.modulus = modulus
        self.rank = rank
        rows = [list(g) for g in gens if any(v % modulus for v in g)]
        stacked = rows + [[modulus if i == j else 0 for j in range(rank)]
                          for i in range(rank)]
        M = IntMatrix(stacked, cols=rank)
        H = hermite_normal_form(M)
        assert H.rows == rank
        self.generator_matrix = IntMatrix(
            [[v % modulus for v in row] for row in H.data], cols=rank)
        # elementary divisors of the preimage lattice
        self.divisors = [d for d in smith_normal_form(M).divisors]

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        return math.prod(self.modulus // d for d in self.divisors)

    def is_full(self) -> bool:
        return all(d == 1 for d in self.divisors)

    def is_trivial(self) -> bool:
        return all(d == self.modulus for d in self.divisors)

    def index(self) -> int:
        """Index in the ambient (Z/q)^rank."""
        return math.prod(self.divisors)

    def issubset(self, other: ModSubgroup) -> bool:
        if self.modulus != other.modulus or self.rank != other.rank:
            raise ValueError("subgroups of different ambient groups")
        return all(other.contains(row)
                   for row in self.generator_matrix.data)

    def contains(self, vec) -> bool:
        """Triangular reduction against the Hermite basis."""
        v = [x % self.modulus for x in vec]
        H = self.generator_matrix.data
        # pivots: H is upper triangular after mod-q reduction of HNF rows,
        # with pivot of row i at column i (full-rank square form)
        for i in range(self.rank):
            piv = H[i][i] if H[i][i] else self.modulus
            if v[i] % piv:
                return False
            q = v[i] // piv
            if q:
                v = [(a - q * b) % self.modulus
                     for a, b in zip(v, H[i])]
            v[i] = 0
        return all(x % self.modulus == 0 for x in v)

    def __eq__(self, other):
        return isinstance(other, ModSubgroup) and \
            self.modulus == other.modulus and self.rank == other.rank and \
            self.generator_matrix == other.generator_matrix

    def __hash__(self):
        return hash((self.modulus, self.rank, self.generator_matrix))

    def elements(self, cap: int = 1 << 20):
        """All elements (tuples), by closure under generator addition."""
        if self.order() > cap:
            raise ValueError(f"subgroup too large to enumerate: {self.order()}")
        gens = [tuple(v % self.modulus for v in row)
                for row in self.generator_matrix.data]
        seen = {tuple([0] * self.rank)}
        frontier = [tuple([0] * self.rank)]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((a + b) % self.modulus for a, b in zip(cur, g))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return sorted(seen)

    def reduce_mod(self, q2: int) -> ModSubgroup:
        """Image of the subgroup in (Z/q2)^rank for q2 | q."""
        if self.modulus % q2:
            raise ValueError("can only reduce to a divisor modulus")
        return ModSubgroup(q2, self.rank,
                           [[v % q2 for v in row]
                            for row in self.generator_matrix.data])

    def to_json(self):
        return {"modulus": self.modulus,
                "divisors": [str(d) for d in self.divisors],
                "generators": self.generator_matrix.to_json()}

    @staticmethod
    def from_json(obj) -> ModSubgroup:
        gens = [[int(v) for v in row] for row in obj["generators"]]
        rank = len(gens[0]) if gens else len(obj["divisors"])
        return ModSubgroup(int(obj["modulus"]), rank, gens)

    def __repr__(self):
        return (f"ModSubgroup(q={self.modulus}, rank={self.rank}, "
                f"divisors={self.divisors})")


def full_subgroup(q: int, rank: int) -> ModSubgroup:
    return ModSubgroup(q, rank, IntMatrix.identity(rank).data)


def trivial_subgroup(q: int, rank: int) -> ModSubgroup:
    return ModSubgroup(q, rank, [])


def kernel_mod(A: IntMatrix, q: int) -> ModSubgroup:
    """{e in (Z/q)^cols : A e = 0 mod q} as a canonical ModSubgroup."""
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"modulus {q} is not a prime power")
    dec = smith_normal_form(A)
    ds = dec.divisors
    gens = []
    for i in range(A.cols):
        d = ds[i] if i < len(ds) else 0
        g = q // math.gcd(d, q)
        col = dec.V.column(i)
        gens.append([g * v % q for v in col])
    return ModSubgroup(q, A.cols, gens)


def orthogonal_complement_mod(S: ModSubgroup) -> ModSubgroup:
    """{c : c . e = 0 mod q for all e in S}."""
    return kernel_mod(S.generator_matrix, S.modulus)


def kernel_gens_mod(rows, cols: int, q: int) -> list[list[int]]:
    """Generators of {x in (Z/q)^cols : A x = 0 mod q} for any modulus q,
    by tracked integer column reduction of [A | q*I].  Unlike kernel_mod
    this skips canonicalization and verification: it is the inner-loop
    routine for the cohomology solver."""
    r = len(rows)
    width = cols + r
    # columns of the working matrix; tracker records column operations
    work = [[rows[i][j] for i in range(r)] for j in range(cols)]
    work += [[q if i == k else 0 for i in range(r)] for k in range(r)]
    track = [[1 if i == j else 0 for i in range(width)] for j in range(width)]
    row = 0
    col = 0
    while row < r and col < width:
        nz = [j for j in range(col, width) if work[j][row]]
        if not nz:
            row += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda j: (abs(work[j][row]), j))
            j0 = nz[0]
            for j in nz[1:]:
                t = work[j][row] // work[j0][row]
                work[j] = [a - t * b for a, b in zip(work[j], work[j0])]
                track[j] = [a - t * b for a, b in zip(track[j], track[j0])]
            nz = [j for j in nz if work[j][row]]
        j0 = nz[0]
        work[col], work[j0] = work[j0], work[col]
        track[col], track[j0] = track[j0], track[col]
        row += 1
        col += 1
    gens = []
    for j in range(col, width):
        vec = [track[j][i] % q for i in range(cols)]
        if any(vec):
            gens.append(vec)
    return gens
