"""Independent oracle implementations used by the test suite.

Everything here is written directly from the defining formulas, on
purpose duplicating nothing from the library internals: scalar-loop
wave evolution, brute-force convolution, cofactor-expansion
determinants, the reversed connecting matrix assembled entrywise, and
the admissible-kernel constructor that forces even entries through the
unit-determinant condition.  numpy.linalg appears only here and never
inside the library, so cross-checks are genuinely two-route.
"""

import numpy as np


def brute_convolve(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0 or b.size == 0:
        return np.zeros(0)
    out = np.zeros(a.size + b.size - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def wave_oracle(b, f, T, wall=None):
    """Scalar-loop controlled lattice evolution.

    Returns the (n, t) table for 0 <= n, t <= T computed entry by
    entry; with wall=N the sites n > N are clamped to zero (finite
    interval with a Dirichlet wall at N + 1).
    """
    b = np.asarray(b, dtype=float)
    f = np.asarray(f, dtype=float)

    def pot(n):
        return b[n - 1] if n - 1 < b.size else 0.0

    def ctl(t):
        return f[t] if 0 <= t < f.size else 0.0

    top = T if wall is None else wall
    u = {}

    def get(n, t):
        if t < 0:
            return 0.0
        if n == 0:
            return ctl(t)
        if wall is not None and n > wall:
            return 0.0
        return u.get((n, t), 0.0)

    for t in range(T):
        for n in range(1, top + 1):
            u[(n, t + 1)] = (get(n + 1, t) + get(n - 1, t)
                             - pot(n) * get(n, t) - get(n, t - 1))
    size = (T + 1) if wall is None else (wall + 2)
    table = np.zeros((size, T + 1))
    for t in range(T + 1):
        table[0, t] = ctl(t) if t < T else 0.0
        for n in range(1, size):
            table[n, t] = get(n, t)
    return table


def minor_det(M):
    """Recursive cofactor-expansion determinant (exact formula route)."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    if n == 0:
        return 1.0
    if n == 1:
        return float(M[0, 0])
    total = 0.0
    for j in range(n):
        sub = np.delete(M[1:], j, axis=1)
        total += ((-1.0) ** j) * M[0, j] * minor_det(sub)
    return float(total)


def cbar_direct(r, T):
    """Reversed connecting matrix straight from the entry formula.

    cbar[i-1, j-1] = sum_{k=0}^{min(i,j)-1} r_{|i-j| + 2k}.
    """
    r = np.asarray(r, dtype=float)
    out = np.zeros((T, T))
    for i in range(1, T + 1):
        for j in range(1, T + 1):
            out[i - 1, j - 1] = sum(
                r[abs(i - j) + 2 * k] for k in range(min(i, j)))
    return out


def connecting_direct(r, T):
    """Connecting matrix straight from the entry formula."""
    r = np.asarray(r, dtype=float)
    out = np.zeros((T, T))
    for i in range(1, T + 1):
        for j in range(1, T + 1):
            out[i - 1, j - 1] = sum(
                r[abs(i - j) + 2 * k] for k in range(T - max(i, j) + 1))
    return out


def lambda0_trace(b, alpha, beta, T):
    """Trace recurrence y_{n+1} = b_n y_n - y_{n-1}, y_0, y_1 given."""
    b = np.asarray(b, dtype=float)
    y = np.zeros(T + 1)
    y[0] = alpha
    if T >= 1:
        y[1] = beta
    for n in range(1, T):
        y[n + 1] = b[n - 1] * y[n] - y[n - 1]
    return y


def build_admissible_kernel(rng, T, amplitude=0.5):
    """Random admissible kernel prefix (r_0, ..., r_{2T-2}).

    Odd entries are free draws; each even entry r_{2m} is then forced
    by requiring det of the order-(m+1) leading block of the reversed
    connecting matrix to be one.  r_{2m} sits once, with unit
    cofactor, at the (m+1, m+1) position of that block, so the forced
    value is 1 - det(block with r_{2m} = 0).  The construction makes
    every leading determinant exactly one, hence the prefix is
    admissible and positive definite.
    """
    r = np.zeros(2 * T - 1)
    r[0] = 1.0
    for idx in range(1, 2 * T - 1, 2):
        r[idx] = rng.uniform(-amplitude, amplitude)
    for m in range(1, T):
        block = cbar_direct(r, m + 1)
        r[2 * m] = 1.0 - np.linalg.det(block)
    return r


def response_toeplitz(r, T):
    """Dense lower-triangular matrix of the response convolution."""
    r = np.asarray(r, dtype=float)
    M = np.zeros((T, T))
    for t in range(1, T + 1):
        for s in range(t):
            M[t - 1, t - 1 - s] = r[s]
    return M
