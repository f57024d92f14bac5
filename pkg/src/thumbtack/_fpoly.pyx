# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for dense F_p[x] arithmetic (p < 2^31).

Same contract as _fpoly_py: lists of ints in [0, p), lowest degree first,
no trailing zeros.  Schoolbook loops over C arrays; the interpreter is only
touched at the list boundaries.
"""

from libc.stdlib cimport malloc, free

BACKEND = "c"


cdef long long* _to_arr(list a) except NULL:
    cdef Py_ssize_t n = len(a)
    cdef long long* buf = <long long*> malloc((n if n else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _to_list(long long* a, Py_ssize_t n):
    while n > 0 and a[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = a[i]
    return out


cdef void _mul_raw(long long* a, Py_ssize_t na, long long* b, Py_ssize_t nb,
                   long long* out, long long p) noexcept:
    # out must have room for na + nb - 1 entries and be zeroed
    cdef Py_ssize_t i, j
    cdef long long ai
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] = (out[i + j] + ai * b[j]) % p
    return


cdef long long _inv_mod(long long x, long long p) noexcept:
    # Fermat inverse; p prime, x not 0 mod p
    cdef long long r = 1, base = x % p, e = p - 2
    while e:
        if e & 1:
            r = r * base % p
        base = base * base % p
        e >>= 1
    return r


cdef Py_ssize_t _rem_raw(long long* r, Py_ssize_t nr, long long* b,
                         Py_ssize_t nb, long long binv, long long p) noexcept:
    # reduces r (length nr) modulo b in place, returns trimmed length
    cdef Py_ssize_t i, j
    cdef long long t
    for i in range(nr - nb, -1, -1):
        t = r[i + nb - 1] * binv % p
        if t:
            for j in range(nb):
                r[i + j] = (r[i + j] - t * b[j]) % p
                if r[i + j] < 0:
                    r[i + j] += p
    cdef Py_ssize_t n = nb - 1
    while n > 0 and r[n - 1] == 0:
        n -= 1
    return n


def mul(list a, list b, long long p):
    if not a or not b:
        return []
    cdef Py_ssize_t na = len(a), nb = len(b), i
    cdef long long* ca = _to_arr(a)
    cdef long long* cb = _to_arr(b)
    cdef long long* out = <long long*> malloc((na + nb - 1) * sizeof(long long))
    if out == NULL:
        free(ca); free(cb)
        raise MemoryError()
    for i in range(na + nb - 1):
        out[i] = 0
    _mul_raw(ca, na, cb, nb, out, p)
    result = _to_list(out, na + nb - 1)
    free(ca); free(cb); free(out)
    return result


def pdivmod(list a, list b, long long p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na < nb:
        return [], list(a)
    cdef long long* r = _to_arr(a)
    cdef long long* cb = _to_arr(b)
    cdef long long binv = _inv_mod(b[nb - 1], p)
    cdef long long* q = <long long*> malloc((na - nb + 1) * sizeof(long long))
    if q == NULL:
        free(r); free(cb)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long long t
    for i in range(na - nb, -1, -1):
        t = r[i + nb - 1] * binv % p
        q[i] = t
        if t:
            for j in range(nb):
                r[i + j] = (r[i + j] - t * b[j]) % p
                if r[i + j] < 0:
                    r[i + j] += p
    quot = _to_list(q, na - nb + 1)
    rem = _to_list(r, nb - 1)
    free(r); free(cb); free(q)
    return quot, rem


def gcd(list a, list b, long long p):
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    cdef long long inv
    cdef Py_ssize_t n = len(a)
    if n and a[n - 1] != 1:
        inv = _inv_mod(a[n - 1], p)
        a = [c * inv % p for c in a]
    return list(a)


def mulmod(list a, list b, list f, long long p):
    if len(f) < 2:
        return []
    prod = mul(a, b, p)
    if len(prod) < len(f):
        return prod
    return pdivmod(prod, f, p)[1]


def powmod(list a, object e, list f, long long p):
    if len(f) < 2:
        return []
    cdef Py_ssize_t nf = len(f), nbuf = 2 * nf, i
    a = pdivmod(a, f, p)[1]
    cdef long long* cf = _to_arr(f)
    cdef long long finv = _inv_mod(f[nf - 1], p)
    cdef long long* base = <long long*> malloc(nbuf * sizeof(long long))
    cdef long long* acc = <long long*> malloc(nbuf * sizeof(long long))
    cdef long long* tmp = <long long*> malloc(nbuf * sizeof(long long))
    if base == NULL or acc == NULL or tmp == NULL:
        free(cf)
        if base != NULL: free(base)
        if acc != NULL: free(acc)
        if tmp != NULL: free(tmp)
        raise MemoryError()
    cdef Py_ssize_t nbase = len(a), nacc = 1
    for i in range(nbuf):
        base[i] = 0; acc[i] = 0; tmp[i] = 0
    for i in range(nbase):
        base[i] = a[i]
    acc[0] = 1
    cdef object ee = e
    cdef Py_ssize_t nprod
    while ee:
        if ee & 1:
            nprod = nacc + nbase - 1 if nacc and nbase else 0
            for i in range(nbuf):
                tmp[i] = 0
            if nprod:
                _mul_raw(acc, nacc, base, nbase, tmp, p)
                if nprod >= nf:
                    nprod = _rem_raw(tmp, nprod, cf, nf, finv, p)
            for i in range(nbuf):
                acc[i] = tmp[i] if i < nprod else 0
            nacc = nprod
            while nacc > 0 and acc[nacc - 1] == 0:
                nacc -= 1
        ee >>= 1
        if ee:
            nprod = 2 * nbase - 1 if nbase else 0
            for i in range(nbuf):
                tmp[i] = 0
            if nprod:
                _mul_raw(base, nbase, base, nbase, tmp, p)
                if nprod >= nf:
                    nprod = _rem_raw(tmp, nprod, cf, nf, finv, p)
            for i in range(nbuf):
                base[i] = tmp[i] if i < nprod else 0
            nbase = nprod
            while nbase > 0 and base[nbase - 1] == 0:
                nbase -= 1
    result = _to_list(acc, nacc)
    free(cf); free(base); free(acc); free(tmp)
    return result
