"""Boundary operators: response kernel, control map, connecting matrix.

The response kernel r is the boundary trace of the delta-driven wave,
r_s = u^delta_{1,s+1}; it is also the first row of the triangular
kernel, r_s = w_{1,s} with r_0 = 1.  Everything the inverse solvers
need is assembled here from r alone: the time convolution R, its
adjoint, the control-to-state matrix W^T, and the connecting (Gram)
matrix C^T together with its reversed-index form.
"""

from __future__ import annotations

import numpy as np

from .core import as_float_array, check_horizon, check_kernel, convolve
from .forward import solve_goursat, solve_semi_infinite


def response_kernel(b, K):
    """Kernel prefix (r_0, ..., r_K) for the potential b.

    r_0 = 1 exactly; deeper entries come from the triangular kernel's
    first row.  The potential is zero-padded as needed; entries beyond
    b_ceil(K/2) cannot influence the returned prefix.
    """
    if not isinstance(K, (int, np.integer)) or K < 0:
        raise ValueError("kernel order must be nonnegative")
    K = int(K)
    r = np.zeros(K + 1)
    r[0] = 1.0
    if K >= 1:
        b = as_float_array(b, "potential")
        bp = np.zeros(K)
        bp[:min(b.size, K)] = b[:K]
        w = solve_goursat(bp, K)
        r[1:] = w.table[1, 1:]
    return r


def apply_response(r, f):
    """Boundary response (R f)_t = sum_{s=0}^{t-1} r_s f_{t-1-s}, t = 1..T.

    A pure causal convolution: entry j of the output is the response
    at time j+1 to the control prefix f = (f_0, ..., f_{T-1}).
    """
    f = as_float_array(f, "control")
    r = check_kernel(r)
    T = f.size
    if T == 0:
        return np.zeros(0)
    if r.size < T:
        raise ValueError("kernel too short for control length")
    return convolve(r[:T], f)[:T]


def apply_response_adjoint(r, g):
    """Adjoint pairing (R^* g)_j = sum_{t=j+1}^{T} r_{t-1-j} g_t.

    g is indexed by observation times 1..T (entry j holds g_{j+1});
    the output is indexed like a control.  Implemented as the reversed
    convolution, which is the transpose of the lower-triangular
    Toeplitz form of apply_response.
    """
    g = as_float_array(g, "observation")
    r = check_kernel(r)
    T = g.size
    if T == 0:
        return np.zeros(0)
    if r.size < T:
        raise ValueError("kernel too short for observation length")
    return convolve(g[::-1], r[:T])[:T][::-1]


def control_matrix(b, T):
    """Dense matrix of the control-to-final-state map W^T.

    Row n (1-based) applied to a control f gives u_{n,T}: the leading
    free translation f_{T-n} plus the triangular kernel correction.
    Requires len(b) >= T - 1.  W^T J is unit upper triangular, so
    det W^T = +-1 and the map is always invertible.
    """
    T = check_horizon(T)
    b = as_float_array(b, "potential")
    if b.size < T - 1:
        raise ValueError("potential too short for horizon")
    W = np.zeros((T, T))
    W[np.arange(T), T - 1 - np.arange(T)] = 1.0
    if T >= 2:
        w = solve_goursat(b, T - 1)
        for n in range(1, T):
            s = np.arange(n, T)
            W[n - 1, T - 1 - s] += w.table[n, s]
    return W


def connecting_matrix(r, T):
    """Connecting matrix C^T from the kernel prefix alone.

    C_{ij} = sum_{k=0}^{T - max(i,j)} r_{|i-j| + 2k}  (1-based i, j).

    Requires the kernel to cover index 2T - 2.  C is symmetric with
    C_{TT} = r_0 = 1, and its last row is the reversed kernel prefix.
    """
    T = check_horizon(T)
    r = check_kernel(r)
    if r.size < 2 * T - 1:
        raise ValueError("kernel too short for horizon")
    C = np.empty((T, T))
    for i in range(1, T + 1):
        for j in range(i, T + 1):
            k = np.arange(0, T - j + 1)
            value = float(np.sum(r[(j - i) + 2 * k]))
            C[i - 1, j - 1] = value
            C[j - 1, i - 1] = value
    return C


def rotated_connecting(C):
    """Reversed-index form C-bar with entries indexed from the wall.

    C-bar_{ij} = C_{T+1-j, T+1-i}; the first row of C-bar is the kernel
    prefix (1, r_1, ..., r_{T-1}) and every leading principal block is
    the reversed-index connecting matrix of the shorter horizon, which
    is what the layer-stripping solvers and the characterization test
    consume.
    """
    C = np.asarray(C, dtype=float)
    if C.ndim != 2 or C.shape[0] != C.shape[1]:
        raise ValueError("connecting matrix must be square")
    return np.flip(C, (0, 1)).T.copy()


def connecting_via_waves(b, T):
    """Connecting matrix as the Gram matrix of basis wave fields.

    Column i of W^T is realized by driving the lattice with the basis
    control e_i; the Gram matrix of the resulting final states equals
    C^T.  Used as the independent oracle route for connecting_matrix.
    Requires len(b) >= T - 1.
    """
    T = check_horizon(T)
    b = as_float_array(b, "potential")
    if b.size < T - 1:
        raise ValueError("potential too short for horizon")
    states = np.empty((T, T))
    for i in range(T):
        f = np.zeros(T)
        f[i] = 1.0
        field = solve_semi_infinite(b, f, T)
        states[:, i] = field.values[1:T + 1, T]
    return states.T @ states
