"""Independent test oracles.

These deliberately avoid the package's own normal-form machinery: the
Sylvester determinant is Bareiss elimination from scratch, and the
division-group counter works in Z^s x Z/2 with its own textbook triangular
reduction, so each cross-check really is a second route to the answer.
"""

from itertools import product


def sylvester_resultant(A, B):
    """Resultant via the Sylvester matrix determinant (exact Bareiss)."""
    da, db = len(A) - 1, len(B) - 1
    if da < 0 or db < 0:
        return 0
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    n = da + db
    Ah, Bh = A[::-1], B[::-1]
    m = [[0] * i + list(Ah) + [0] * (n - da - 1 - i) for i in range(db)]
    m += [[0] * i + list(Bh) + [0] * (n - db - 1 - i) for i in range(da)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
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


def triangular_basis(vectors):
    """Triangular lattice basis (one row per pivot column) by plain
    Euclidean elimination; rows have positive pivot entries."""
    basis = {}
    stack = [list(v) for v in vectors if any(v)]
    while stack:
        v = stack.pop()
        while any(v):
            piv = next(i for i, x in enumerate(v) if x)
            if piv not in basis:
                basis[piv] = v if v[piv] > 0 else [-x for x in v]
                break
            b = basis[piv]
            q = v[piv] // b[piv]
            v = [x - q * y for x, y in zip(v, b)]
            if v[piv]:
                # remainder is smaller: swap it in, keep reducing the old row
                basis[piv] = v if v[piv] > 0 else [-x for x in v]
                v = b
    return [basis[p] for p in sorted(basis)]


def reduce_vector(basis, vec):
    """Unique coset representative of vec modulo the row lattice."""
    v = list(vec)
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        q = v[piv] // b[piv]
        if q:
            v = [x - q * y for x, y in zip(v, b)]
    return tuple(v)


def brute_force_division_index(generators, exp_bound=6, power_bound=12):
    """Count [Gamma':Gamma] by raw search.

    generators: list of (sign, {prime: exponent}).  Q^x restricted to the
    support embeds in Z^s x Z/2 ~ Z^(s+1) / (0,..,0,2); Gamma becomes the
    lattice spanned by the generator columns plus the sign relation, and
    every question (membership of x^n, coset identity) is a lattice
    reduction.  Candidates are +-prod p^f with |f| <= exp_bound, tested for
    x^n in Gamma with n <= power_bound.
    """
    support = sorted({p for _, e in generators for p in e})
    s = len(support)
    gamma_rows = [[e.get(p, 0) for p in support] + [0 if sg == 1 else 1]
                  for sg, e in generators]
    gamma_rows.append([0] * s + [2])
    basis = triangular_basis(gamma_rows)

    def in_gamma(vec_with_sign):
        return not any(reduce_vector(basis, vec_with_sign))

    cosets = set()
    for f in product(range(-exp_bound, exp_bound + 1), repeat=s):
        for sign_bit in (0, 1):
            for n in range(1, power_bound + 1):
                if in_gamma([n * x for x in f] + [n * sign_bit]):
                    cosets.add(reduce_vector(basis, list(f) + [sign_bit]))
                    break
    return len(cosets)
