# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact kernels over Gaussian integers.

Same contract as ``_kernels_py``.  Entries remain Python ints (they grow
without bound), so the speedup comes from typed loop indices and skipping
interpreter dispatch, not from machine arithmetic.
"""

__all__ = ["matmul", "gauss_jordan", "gdiv"]


cpdef tuple gdiv(object ar, object ai, object br, object bi):
    cdef object norm
    if bi == 0:
        return ar // br, ai // br
    norm = br * br + bi * bi
    return (ar * br + ai * bi) // norm, (ai * br - ar * bi) // norm


cdef list _matmul_real(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef list out = [0] * (n * m)
    cdef Py_ssize_t i, t, j, base, bt
    cdef object x
    for i in range(n):
        base = i * m
        for t in range(k):
            x = a[i * k + t]
            if x == 0:
                continue
            bt = t * m
            for j in range(m):
                out[base + j] = out[base + j] + x * b[bt + j]
    return out


def matmul(list ar, object ai, list br, object bi, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef list cr, ci, lai, lbi
    cdef Py_ssize_t i, t, j, base, bt, idx
    cdef object xr, xi, yr, yi
    if n == 0 or m == 0 or k == 0:
        return [0] * (n * m), None
    if ai is None and bi is None:
        return _matmul_real(ar, br, n, k, m), None
    if ai is None:
        return _matmul_real(ar, br, n, k, m), _matmul_real(ar, <list>bi, n, k, m)
    if bi is None:
        return _matmul_real(ar, br, n, k, m), _matmul_real(<list>ai, br, n, k, m)
    lai = <list>ai
    lbi = <list>bi
    cr = [0] * (n * m)
    ci = [0] * (n * m)
    for i in range(n):
        base = i * m
        for t in range(k):
            xr = ar[i * k + t]
            xi = lai[i * k + t]
            if xr == 0 and xi == 0:
                continue
            bt = t * m
            for j in range(m):
                yr = br[bt + j]
                yi = lbi[bt + j]
                idx = base + j
                cr[idx] = cr[idx] + xr * yr - xi * yi
                ci[idx] = ci[idx] + xr * yi + xi * yr
    return cr, ci


cdef tuple _gj_real(list a, Py_ssize_t rows, Py_ssize_t cols):
    cdef object prev = 1
    cdef object piv, f, x
    cdef list pivots = []
    cdef list prow, row, new
    cdef Py_ssize_t r = 0, c, p, j, t
    for c in range(cols):
        if r == rows:
            break
        p = r
        while p < rows and (<list>a[p])[c] == 0:
            p += 1
        if p == rows:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = <list>a[r]
        piv = prow[c]
        for j in range(rows):
            if j == r:
                continue
            row = <list>a[j]
            f = row[c]
            new = [0] * cols
            if f == 0:
                if piv == prev:
                    continue
                for t in range(cols):
                    x = row[t]
                    if x != 0:
                        new[t] = (piv * x) // prev
            else:
                for t in range(cols):
                    new[t] = (piv * row[t] - f * prow[t]) // prev
            a[j] = new
        prev = piv
        pivots.append(c)
        r += 1
    return prev, pivots


cdef tuple _gj_complex(list ar, list ai, Py_ssize_t rows, Py_ssize_t cols):
    cdef object prev_r = 1, prev_i = 0
    cdef object vr, vi, fr, fi, sr, si
    cdef list pivots = []
    cdef list pr, pi, xr, xi, new_r, new_i
    cdef Py_ssize_t r = 0, c, p, j, t
    for c in range(cols):
        if r == rows:
            break
        p = r
        while p < rows and (<list>ar[p])[c] == 0 and (<list>ai[p])[c] == 0:
            p += 1
        if p == rows:
            continue
        if p != r:
            ar[p], ar[r] = ar[r], ar[p]
            ai[p], ai[r] = ai[r], ai[p]
        pr = <list>ar[r]
        pi = <list>ai[r]
        vr = pr[c]
        vi = pi[c]
        for j in range(rows):
            if j == r:
                continue
            xr = <list>ar[j]
            xi = <list>ai[j]
            fr = xr[c]
            fi = xi[c]
            new_r = [0] * cols
            new_i = [0] * cols
            for t in range(cols):
                sr = vr * xr[t] - vi * xi[t] - (fr * pr[t] - fi * pi[t])
                si = vr * xi[t] + vi * xr[t] - (fr * pi[t] + fi * pr[t])
                new_r[t], new_i[t] = gdiv(sr, si, prev_r, prev_i)
            ar[j] = new_r
            ai[j] = new_i
        prev_r = vr
        prev_i = vi
        pivots.append(c)
        r += 1
    return (prev_r, prev_i), pivots


def gauss_jordan(list re, object im, Py_ssize_t rows, Py_ssize_t cols):
    cdef Py_ssize_t i
    cdef list a, ar, ai
    if im is None:
        a = [list(re[i * cols:(i + 1) * cols]) for i in range(rows)]
        scale, pivots = _gj_real(a, rows, cols)
        return [x for row in a for x in row], None, pivots, (scale, 0)
    ar = [list(re[i * cols:(i + 1) * cols]) for i in range(rows)]
    ai = [list((<list>im)[i * cols:(i + 1) * cols]) for i in range(rows)]
    scale, pivots = _gj_complex(ar, ai, rows, cols)
    return ([x for row in ar for x in row], [x for row in ai for x in row],
            pivots, scale)
