"""Sturm-sequence bisection for symmetric tridiagonal matrices."""

import numpy as np
from numba import njit

_EPS = np.finfo(float).eps


@njit(cache=True)
def sturm_count(d, e2, x, pivmin):
    """Number of eigenvalues strictly below ``x``; ``e2`` holds squared off-diagonals."""
    count = 0
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _bisect(d, e, first, count, max_iter):
    n = d.shape[0]
    e2 = e * e
    lo = d[0] - abs(e[0]) if n > 1 else d[0]
    hi = d[0] + abs(e[0]) if n > 1 else d[0]
    for i in range(1, n):
        r = abs(e[i - 1])
        if i < n - 1:
            r += abs(e[i])
        lo = min(lo, d[i] - r)
        hi = max(hi, d[i] + r)
    scale = max(abs(lo), abs(hi))
    pivmin = max(1e-300, _EPS * _EPS * max(1.0, np.max(e2)))
    lo -= 2.0 * _EPS * scale + pivmin
    hi += 2.0 * _EPS * scale + pivmin

    out = np.empty(count)
    floor = lo
    for j in range(count):
        idx = first + j
        a = floor
        b = hi
        for _ in range(max_iter):
            mid = 0.5 * (a + b)
            if mid == a or mid == b:
                break
            if sturm_count(d, e2, mid, pivmin) > idx:
                b = mid
            else:
                a = mid
            if b - a <= 2.0 * _EPS * max(abs(a), abs(b)) + pivmin:
                break
        out[j] = 0.5 * (a + b)
        floor = a
    return out


def tridiagonal_eigenvalues(diagonal, offdiagonal, first=0, count=1, max_iter=200):
    """Eigenvalues ``first .. first+count-1`` (ascending) of a symmetric tridiagonal matrix.

    Each eigenvalue is bracketed by Gershgorin bounds and bisected on the
    Sturm count until the bracket is a few ulps wide.
    """
    d = np.ascontiguousarray(diagonal, dtype=float)
    e = np.ascontiguousarray(offdiagonal, dtype=float)
    if e.shape[0] != d.shape[0] - 1:
        raise ValueError("off-diagonal must have one element fewer than the diagonal")
    if first < 0 or first + count > d.shape[0]:
        raise ValueError(f"eigenvalue indices {first}..{first + count - 1} outside matrix of size {d.shape[0]}")
    if d.shape[0] == 1:
        return d.copy()
    return _bisect(d, e, int(first), int(count), int(max_iter))
