"""Pure-Python exact kernels: Bareiss determinant and Berkowitz charpoly.

Both operate on square matrices given as lists of lists of Python ints.
A compiled twin of this module lives in ``_kernels.pyx``; ``kernels``
picks whichever is available at import time.
"""


def det_bareiss(rows):
    """Exact determinant by fraction-free (Bareiss) elimination.

    All intermediate divisions are exact, so only integer arithmetic is
    used. A zero pivot column short-circuits to 0; row swaps flip the sign.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            ak = a[k]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * pivot - aik * ak[j]) // prev
            ai[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly(rows):
    """Coefficients of det(xI - A), constant term first, by Berkowitz.

    Division-free; the returned list has length n+1 with leading
    coefficient 1.
    """
    n = len(rows)
    if n == 0:
        return [1]
    # Charpoly of the trailing 1x1 principal submatrix, highest power first.
    coeffs = [1, -rows[n - 1][n - 1]]
    for r in range(n - 2, -1, -1):
        k = n - r - 1  # size of the trailing block below/right of row r
        row = rows[r]
        col = [rows[i][r] for i in range(r + 1, n)]
        # Toeplitz column: 1, -a, -R C, -R B C, -R B^2 C, ...
        t = [1, -row[r]]
        v = col
        for step in range(k):
            s = 0
            for j in range(k):
                s += row[r + 1 + j] * v[j]
            t.append(-s)
            if step < k - 1:
                w = [0] * k
                for i in range(k):
                    bi = rows[r + 1 + i]
                    acc = 0
                    for j in range(k):
                        acc += bi[r + 1 + j] * v[j]
                    w[i] = acc
                v = w
        # Apply the lower-triangular Toeplitz matrix built from t.
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(min(i, k) + 1):
                acc += t[i - j] * coeffs[j]
            new[i] = acc
        coeffs = new
    coeffs.reverse()
    return coeffs
