"""Pure-Python exact kernels over Gaussian integers.

Matrices are flat row-major lists of Python ints, one list for the real
parts and one for the imaginary parts.  ``None`` stands for an all-zero
imaginary part so that real inputs never pay for complex arithmetic.

The compiled twin in ``_kernels.pyx`` implements the same functions with
the same signatures; ``drazinkit.kernels`` picks one at import time.
"""
from operator import mul

__all__ = ["matmul", "gauss_jordan", "gdiv"]


def gdiv(ar, ai, br, bi):
    """Exact quotient of Gaussian integers (ar + ai i) / (br + bi i)."""
    if bi == 0:
        return ar // br, ai // br
    norm = br * br + bi * bi
    return (ar * br + ai * bi) // norm, (ai * br - ar * bi) // norm


def _columns(flat, k, m):
    return [flat[j::m] for j in range(m)]


def matmul(ar, ai, br, bi, n, k, m):
    """Product of an n-by-k and a k-by-m Gaussian-integer matrix."""
    if n == 0 or m == 0:
        return [0] * (n * m), None
    if k == 0:
        return [0] * (n * m), None
    bcr = _columns(br, k, m)
    rows_r = [ar[i * k:(i + 1) * k] for i in range(n)]
    if ai is None and bi is None:
        out = []
        for row in rows_r:
            if any(row):
                out.extend([sum(map(mul, row, col)) for col in bcr])
            else:
                out.extend([0] * m)
        return out, None

    cr = []
    ci = []
    if ai is None:
        bci = _columns(bi, k, m)
        for row in rows_r:
            cr.extend([sum(map(mul, row, col)) for col in bcr])
            ci.extend([sum(map(mul, row, col)) for col in bci])
        return cr, ci

    rows_i = [ai[i * k:(i + 1) * k] for i in range(n)]
    if bi is None:
        for rr, ri in zip(rows_r, rows_i):
            cr.extend([sum(map(mul, rr, col)) for col in bcr])
            ci.extend([sum(map(mul, ri, col)) for col in bcr])
        return cr, ci

    bci = _columns(bi, k, m)
    for rr, ri in zip(rows_r, rows_i):
        for colr, coli in zip(bcr, bci):
            cr.append(sum(map(mul, rr, colr)) - sum(map(mul, ri, coli)))
            ci.append(sum(map(mul, rr, coli)) + sum(map(mul, ri, colr)))
    return cr, ci


def _gauss_jordan_real(a, rows, cols):
    prev = 1
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = r
        while p < rows and a[p][c] == 0:
            p += 1
        if p == rows:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        prow = a[r]
        piv = prow[c]
        for j in range(rows):
            if j == r:
                continue
            row = a[j]
            f = row[c]
            if f == 0:
                if piv != prev:
                    a[j] = [(piv * x) // prev if x else 0 for x in row]
            else:
                a[j] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
        prev = piv
        pivots.append(c)
        r += 1
    return prev, pivots


def _gauss_jordan_complex(ar, ai, rows, cols):
    prev_r, prev_i = 1, 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = r
        while p < rows and ar[p][c] == 0 and ai[p][c] == 0:
            p += 1
        if p == rows:
            continue
        if p != r:
            ar[p], ar[r] = ar[r], ar[p]
            ai[p], ai[r] = ai[r], ai[p]
        pr, pi = ar[r], ai[r]
        vr, vi = pr[c], pi[c]
        for j in range(rows):
            if j == r:
                continue
            xr, xi = ar[j], ai[j]
            fr, fi = xr[c], xi[c]
            new_r = []
            new_i = []
            for t in range(cols):
                # piv * x - f * y, then exact division by the previous pivot
                sr = vr * xr[t] - vi * xi[t] - (fr * pr[t] - fi * pi[t])
                si = vr * xi[t] + vi * xr[t] - (fr * pi[t] + fi * pr[t])
                qr, qi = gdiv(sr, si, prev_r, prev_i)
                new_r.append(qr)
                new_i.append(qi)
            ar[j] = new_r
            ai[j] = new_i
        prev_r, prev_i = vr, vi
        pivots.append(c)
        r += 1
    return (prev_r, prev_i), pivots


def gauss_jordan(re, im, rows, cols):
    """Fraction-free Gauss-Jordan elimination.

    Returns ``(out_re, out_im, pivots, scale)``: the reduced matrix equals
    ``scale`` times the reduced row echelon form, every pivot entry equals
    ``scale`` (a Gaussian integer pair) and all entries stay Gaussian
    integers because every division is exact.
    """
    if im is None:
        a = [list(re[i * cols:(i + 1) * cols]) for i in range(rows)]
        scale, pivots = _gauss_jordan_real(a, rows, cols)
        return [x for row in a for x in row], None, pivots, (scale, 0)
    ar = [list(re[i * cols:(i + 1) * cols]) for i in range(rows)]
    ai = [list(im[i * cols:(i + 1) * cols]) for i in range(rows)]
    scale, pivots = _gauss_jordan_complex(ar, ai, rows, cols)
    return ([x for row in ar for x in row], [x for row in ai for x in row],
            pivots, scale)
