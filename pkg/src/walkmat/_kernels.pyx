# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact kernels, a twin of ``_kernels_py``.

Entries stay Python ints (arbitrary precision); the win over the pure
version comes from removing interpreter loop overhead in the inner
elimination and Toeplitz products.
"""


def det_bareiss(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, r
    cdef int sign = 1
    if n == 0:
        return 1
    cdef list a = [list(row) for row in rows]
    cdef list ai, ak
    prev = 1
    for k in range(n - 1):
        ak = a[k]
        if ak[k] == 0:
            for r in range(k + 1, n):
                if (<list>a[r])[k] != 0:
                    a[k], a[r] = a[r], a[k]
                    ak = a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * pivot - aik * ak[j]) // prev
            ai[k] = 0
        prev = pivot
    return sign * (<list>a[n - 1])[n - 1]


def charpoly(rows):
    """Coefficients of det(xI - A), constant term first, by Berkowitz."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t r, k, i, j, step
    if n == 0:
        return [1]
    cdef list a = [list(row) for row in rows]
    cdef list coeffs = [1, -(<list>a[n - 1])[n - 1]]
    cdef list row, col, t, v, w, new, bi
    for r in range(n - 2, -1, -1):
        k = n - r - 1
        row = a[r]
        col = [(<list>a[i])[r] for i in range(r + 1, n)]
        t = [1, -row[r]]
        v = col
        for step in range(k):
            s = 0
            for j in range(k):
                s = s + row[r + 1 + j] * v[j]
            t.append(-s)
            if step < k - 1:
                w = [0] * k
                for i in range(k):
                    bi = a[r + 1 + i]
                    acc = 0
                    for j in range(k):
                        acc = acc + bi[r + 1 + j] * v[j]
                    w[i] = acc
                v = w
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(min(i, k) + 1):
                acc = acc + t[i - j] * coeffs[j]
            new[i] = acc
        coeffs = new
    coeffs.reverse()
    return coeffs
