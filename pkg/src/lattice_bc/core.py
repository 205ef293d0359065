"""Shared numerical conventions: tolerances, causal sequences, input checks.

All sequences are 1-D float arrays indexed from zero.  A potential
``b = (b_1, ..., b_M)`` is stored with ``b[n-1] = b_n``; boundary controls
``f = (f_0, ..., f_{T-1})`` and response kernels ``r = (r_0, r_1, ...)``
are stored at their natural offsets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared across characterization and spectral code.

    det_tol   : admissibility slack for unit-determinant checks.
    pivot_tol : positivity floor for elimination pivots and for the
                first eigenvector component used in trace rescaling.
    eig_tol   : relative residual target for eigenpairs.
    """

    det_tol: float = 1e-9
    pivot_tol: float = 1e-12
    eig_tol: float = 1e-10

    def __post_init__(self):
        for name in ("det_tol", "pivot_tol", "eig_tol"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be finite and nonnegative")


def as_float_array(values, name="values"):
    """Coerce to a 1-D float64 array, rejecting non-finite entries."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_kernel(r, name="kernel"):
    """Validate a response kernel prefix: r_0 = 1 exactly."""
    arr = as_float_array(r, name)
    if arr.size == 0 or arr[0] != 1.0:
        raise ValueError(f"{name} must start with r_0 = 1")
    return arr


def check_horizon(T):
    if not isinstance(T, (int, np.integer)) or T < 1:
        raise ValueError("horizon must be a positive integer")
    return int(T)


def convolve(a, b):
    """Full causal convolution c_t = sum_s a_s b_{t-s}.

    Output has length len(a) + len(b) - 1; empty inputs give an empty
    output.  Used for response application and Chebyshev coefficient
    sequences; both are plain Cauchy products of causal sequences.
    """
    a = as_float_array(a, "a")
    b = as_float_array(b, "b")
    if a.size == 0 or b.size == 0:
        return np.zeros(0)
    return np.convolve(a, b)


def chebyshev_seq(t_max, lam):
    """First-kind Chebyshev values with the lattice normalization.

    Returns (T_0, ..., T_{t_max}) where T_0 = 0, T_1 = 1 and
    T_{t+1} = lam * T_t - T_{t-1}.  These solve the free boundary value
    problem: for b = 0 the wave driven by a delta control is
    u_{n,t} = T_{t-n+1} shifted to the light cone.
    """
    if not isinstance(t_max, (int, np.integer)) or t_max < 1:
        raise ValueError("t_max must be a positive integer")
    out = np.empty(int(t_max) + 1)
    out[0] = 0.0
    out[1] = 1.0
    for t in range(1, int(t_max)):
        out[t + 1] = lam * out[t] - out[t - 1]
    return out


def kappa_seq(T):
    """Discrete harmonic weight (kappa_0, ..., kappa_{T-1}).

    Defined backward from kappa_T = 0, kappa_{T-1} = 1 by
    kappa_{t-1} = -kappa_{t+1}; the interior identity
    kappa_{t+1} + kappa_{t-1} = 0 makes t -> kappa_t annihilate the
    second difference in time, which is what the trace extraction of
    the Krein solver needs.  Values cycle through 0, +1, 0, -1.
    """
    T = check_horizon(T)
    out = np.zeros(T + 1)
    out[T] = 0.0
    out[T - 1] = 1.0
    for t in range(T - 1, 0, -1):
        out[t - 1] = -out[t + 1]
    return out[:T]
