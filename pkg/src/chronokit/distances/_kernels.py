"""Compiled dynamic-programming kernels for the elastic distances.

Every kernel takes two ``(n_channels, n_timepoints)`` float64 arrays and
returns the ``(n + 1, m + 1)`` accumulated cost matrix, padded with a
boundary row and column. ``bound`` encodes the band: cell ``(i, j)``
(0-based point indices) is admissible iff ``|i*m - j*n| <= bound``; pass
``inf`` for no band.
"""

import numpy as np
from numba import njit

_jit = dict(cache=True, nogil=True)


@njit(**_jit)
def _sq(x, i, y, j):
    s = 0.0
    for k in range(x.shape[0]):
        d = x[k, i] - y[k, j]
        s += d * d
    return s


@njit(**_jit)
def _norm(x, i, y, j):
    return np.sqrt(_sq(x, i, y, j))


@njit(**_jit)
def _norm_to(x, i, value):
    s = 0.0
    for k in range(x.shape[0]):
        d = x[k, i] - value
        s += d * d
    return np.sqrt(s)


@njit(**_jit)
def _within(x, i, y, j, epsilon):
    for k in range(x.shape[0]):
        if abs(x[k, i] - y[k, j]) > epsilon:
            return False
    return True


@njit(**_jit)
def squared_lockstep(x, y):
    s = 0.0
    for i in range(x.shape[1]):
        s = _sq(x, i, y, i) + s
    return s


@njit(**_jit)
def dtw_matrix(x, y, bound, weights):
    """DTW with squared pointwise cost scaled by ``weights[|i - j|]``."""
    n = x.shape[1]
    m = y.shape[1]
    D = np.full((n + 1, m + 1), np.inf)
    D[0, 0] = 0.0
    for i in range(n):
        for j in range(m):
            if abs(i * m - j * n) > bound:
                continue
            best = D[i, j]
            if D[i, j + 1] < best:
                best = D[i, j + 1]
            if D[i + 1, j] < best:
                best = D[i + 1, j]
            D[i + 1, j + 1] = _sq(x, i, y, j) * weights[abs(i - j)] + best
    return D


@njit(**_jit)
def erp_matrix(x, y, bound, gap):
    n = x.shape[1]
    m = y.shape[1]
    D = np.full((n + 1, m + 1), np.inf)
    D[0, 0] = 0.0
    for i in range(1, n + 1):
        if abs((i - 1) * m) > bound:
            break
        D[i, 0] = D[i - 1, 0] + _norm_to(x, i - 1, gap)
    for j in range(1, m + 1):
        if abs((j - 1) * n) > bound:
            break
        D[0, j] = D[0, j - 1] + _norm_to(y, j - 1, gap)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if abs((i - 1) * m - (j - 1) * n) > bound:
                continue
            match = D[i - 1, j - 1] + _norm(x, i - 1, y, j - 1)
            del_x = D[i - 1, j] + _norm_to(x, i - 1, gap)
            del_y = D[i, j - 1] + _norm_to(y, j - 1, gap)
            D[i, j] = min(match, del_x, del_y)
    return D


@njit(**_jit)
def edr_matrix(x, y, bound, epsilon):
    """Unnormalised EDR edit counts."""
    n = x.shape[1]
    m = y.shape[1]
    D = np.full((n + 1, m + 1), np.inf)
    D[0, 0] = 0.0
    for i in range(1, n + 1):
        if abs((i - 1) * m) > bound:
            break
        D[i, 0] = float(i)
    for j in range(1, m + 1):
        if abs((j - 1) * n) > bound:
            break
        D[0, j] = float(j)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if abs((i - 1) * m - (j - 1) * n) > bound:
                continue
            sub = 0.0 if _within(x, i - 1, y, j - 1, epsilon) else 1.0
            D[i, j] = min(D[i - 1, j - 1] + sub, D[i - 1, j] + 1.0, D[i, j - 1] + 1.0)
    return D


@njit(**_jit)
def lcss_table(x, y, bound, epsilon):
    """Longest common subsequence lengths; ``-inf`` marks cells outside the band."""
    n = x.shape[1]
    m = y.shape[1]
    L = np.full((n + 1, m + 1), -np.inf)
    L[0, 0] = 0.0
    for i in range(1, n + 1):
        if abs((i - 1) * m) > bound:
            break
        L[i, 0] = 0.0
    for j in range(1, m + 1):
        if abs((j - 1) * n) > bound:
            break
        L[0, j] = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if abs((i - 1) * m - (j - 1) * n) > bound:
                continue
            best = max(L[i - 1, j - 1], L[i - 1, j], L[i, j - 1])
            if _within(x, i - 1, y, j - 1, epsilon) and L[i - 1, j - 1] + 1.0 > best:
                best = L[i - 1, j - 1] + 1.0
            L[i, j] = best
    return L


@njit(**_jit)
def _msm_cost(x, i, y, j, z, k, c):
    # cost of splitting/merging point x[i] next to its neighbours y[j] and z[k]
    diameter = 0.0
    to_mid = 0.0
    for ch in range(x.shape[0]):
        d = y[ch, j] - z[ch, k]
        diameter += d * d
        mid = (y[ch, j] + z[ch, k]) / 2.0
        e = mid - x[ch, i]
        to_mid += e * e
    if np.sqrt(to_mid) <= np.sqrt(diameter) / 2.0:
        return c
    return c + min(_norm(x, i, y, j), _norm(x, i, z, k))


@njit(**_jit)
def msm_matrix(x, y, bound, c):
    n = x.shape[1]
    m = y.shape[1]
    D = np.full((n + 1, m + 1), np.inf)
    D[0, 0] = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if abs((i - 1) * m - (j - 1) * n) > bound:
                continue
            best = D[i - 1, j - 1] + _norm(x, i - 1, y, j - 1)
            if i >= 2 and D[i - 1, j] < np.inf:
                v = D[i - 1, j] + _msm_cost(x, i - 1, x, i - 2, y, j - 1, c)
                if v < best:
                    best = v
            if j >= 2 and D[i, j - 1] < np.inf:
                v = D[i, j - 1] + _msm_cost(y, j - 1, x, i - 1, y, j - 2, c)
                if v < best:
                    best = v
            D[i, j] = best
    return D


@njit(**_jit)
def twe_matrix(x, y, bound, nu, lmbda):
    """TWE over series padded with a leading zero point at time 0."""
    n = x.shape[1]
    m = y.shape[1]
    C = x.shape[0]
    xp = np.zeros((C, n + 1))
    yp = np.zeros((C, m + 1))
    xp[:, 1:] = x
    yp[:, 1:] = y
    D = np.full((n + 1, m + 1), np.inf)
    D[0, 0] = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if abs((i - 1) * m - (j - 1) * n) > bound:
                continue
            match = (
                D[i - 1, j - 1]
                + _norm(xp, i, yp, j)
                + _norm(xp, i - 1, yp, j - 1)
                + nu * 2.0 * abs(i - j)
            )
            del_x = D[i - 1, j] + _norm(xp, i, xp, i - 1) + nu + lmbda
            del_y = D[i, j - 1] + _norm(yp, j, yp, j - 1) + nu + lmbda
            D[i, j] = min(match, del_x, del_y)
    return D
