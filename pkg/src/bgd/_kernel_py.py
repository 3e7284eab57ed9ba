"""Pure-numpy row reduction kernel over prime fields.

Fallback for :mod:`bgd._kernel_cy`.  Same contract: ``rref_mod`` takes a
C-contiguous int64 matrix with entries already reduced mod p and returns
the reduced row echelon form together with the pivot columns.
"""

import numpy as np

BACKEND_NAME = "numpy"


def rref_mod(m: np.ndarray, p: int):
    """Reduced row echelon form of ``m`` over F_p.

    Returns ``(r, pivots)`` where ``r`` holds only the nonzero rows and
    ``pivots`` is the list of pivot column indices.  ``m`` is consumed.
    """
    m = np.ascontiguousarray(m, dtype=np.int64) % p
    nrows, ncols = m.shape
    inv = [0] * p
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        sub = m[r:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        lead = int(m[r, c])
        if lead != 1:
            m[r] = (m[r] * inv[lead]) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r].copy(), pivots
