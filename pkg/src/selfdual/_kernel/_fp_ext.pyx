# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled integer tree search; same contract as ``fp_py.enumerate_levels``.

All arithmetic is on 64-bit integers. The caller guarantees (via
``fits_int64``) that no intermediate value can overflow.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc, realloc


cdef struct Buffer:
    long long* data
    size_t length
    size_t capacity
    int failed


cdef inline long long floordiv(long long x, long long y) noexcept nogil:
    # y > 0
    cdef long long q = x / y
    if x % y != 0 and x < 0:
        q -= 1
    return q


cdef inline long long isqrt_ll(long long x) noexcept nogil:
    if x <= 0:
        return 0
    cdef long long r = <long long>sqrt(<double>x)
    while r > 0 and r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


cdef int push(Buffer* buf, long long* v, int n) noexcept nogil:
    cdef size_t newcap
    cdef long long* grown
    cdef int i
    if buf.length + n > buf.capacity:
        newcap = buf.capacity * 2 + <size_t>n * 64
        grown = <long long*>realloc(buf.data, newcap * sizeof(long long))
        if grown == NULL:
            buf.failed = 1
            return -1
        buf.data = grown
        buf.capacity = newcap
    for i in range(n):
        buf.data[buf.length + i] = v[i]
    buf.length += n
    return 0


cdef void search(int n, long long* w, long long* b, long long* a, long long budget,
                 char* zero, int use_top, long long top_lo, long long top_hi,
                 Buffer* out) noexcept nogil:
    cdef long long* v = <long long*>malloc(n * sizeof(long long))
    cdef long long* lo = <long long*>malloc(n * sizeof(long long))
    cdef long long* hi = <long long*>malloc(n * sizeof(long long))
    cdef long long* shift = <long long*>malloc(n * sizeof(long long))
    cdef long long* rem = <long long*>malloc((n + 1) * sizeof(long long))
    cdef int k, j
    cdef long long bound, m, s
    if v == NULL or lo == NULL or hi == NULL or shift == NULL or rem == NULL:
        out.failed = 1
    else:
        for j in range(n):
            v[j] = 0
        rem[n] = budget
        k = n - 1
        # enter level k
        while True:
            s = 0
            for j in range(k + 1, n):
                s += a[j * n + k] * v[j]
            shift[k] = s
            bound = isqrt_ll(rem[k + 1] / w[k])
            lo[k] = -floordiv(bound + s, b[k])
            hi[k] = floordiv(bound - s, b[k])
            if zero[k]:
                if lo[k] < 0:
                    lo[k] = 0
                if hi[k] > 0:
                    hi[k] = 0
            if use_top and k == n - 1:
                if lo[k] < top_lo:
                    lo[k] = top_lo
                if hi[k] > top_hi:
                    hi[k] = top_hi
            v[k] = lo[k] - 1
            # advance at level k, climbing when exhausted
            while True:
                v[k] += 1
                if v[k] > hi[k]:
                    v[k] = 0
                    k += 1
                    if k == n:
                        break
                    continue
                m = b[k] * v[k] + shift[k]
                rem[k] = rem[k + 1] - w[k] * m * m
                if k == 0:
                    if rem[0] == 0:
                        if push(out, v, n) != 0:
                            k = n
                            break
                    continue
                break
            if k == n:
                break
            k -= 1
    free(v)
    free(lo)
    free(hi)
    free(shift)
    free(rem)


def enumerate_levels(w, b, a, long long budget, zero_mask, top=None):
    cdef int n = len(w)
    cdef int i, j
    cdef Buffer out
    cdef long long* cw
    cdef long long* cb
    cdef long long* ca
    cdef char* cz
    cdef int use_top = 0
    cdef long long top_lo = 0, top_hi = 0
    if n == 0:
        return []
    if top is not None:
        use_top = 1
        top_lo, top_hi = top
    cw = <long long*>malloc(n * sizeof(long long))
    cb = <long long*>malloc(n * sizeof(long long))
    ca = <long long*>malloc(n * n * sizeof(long long))
    cz = <char*>malloc(n * sizeof(char))
    out.data = NULL
    out.length = 0
    out.capacity = 0
    out.failed = 0
    try:
        if cw == NULL or cb == NULL or ca == NULL or cz == NULL:
            raise MemoryError()
        for i in range(n):
            cw[i] = w[i]
            cb[i] = b[i]
            cz[i] = 1 if zero_mask[i] else 0
            for j in range(n):
                ca[i * n + j] = a[i][j]
        with nogil:
            search(n, cw, cb, ca, budget, cz, use_top, top_lo, top_hi, &out)
        if out.failed:
            raise MemoryError("enumeration buffer allocation failed")
        result = []
        for i in range(<int>(out.length // n)):
            result.append(tuple([out.data[i * n + j] for j in range(n)]))
        return result
    finally:
        free(cw)
        free(cb)
        free(ca)
        free(cz)
        free(out.data)
