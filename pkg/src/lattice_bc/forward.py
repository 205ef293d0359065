"""Forward lattice dynamics with boundary control.

The evolution is the discrete wave equation associated with the Jacobi
operator (potential on the diagonal, unit hopping):

    u_{n,t+1} = u_{n+1,t} + u_{n-1,t} - b_n u_{n,t} - u_{n,t-1}

posed on n >= 1 with zero initial data u_{n,-1} = u_{n,0} = 0 and a
boundary control u_{0,t} = f_t injected at the virtual site n = 0.
Signals propagate one site per step, so u_{n,t} = 0 for n > t and a
horizon-T simulation never sees sites beyond n = T: truncating the
half-line at n = T is exact, not an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_float_array, check_horizon


@dataclass(frozen=True)
class WaveField:
    """Solution table values[n, t] for 0 <= n <= n_max, 0 <= t <= t_max.

    Row 0 carries the control (or the boundary condition of an interval
    problem); rows n >= 1 are interior amplitudes.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("field table must be a nonempty 2-D array")
        object.__setattr__(self, "values", arr)

    @property
    def n_max(self):
        return self.values.shape[0] - 1

    @property
    def t_max(self):
        return self.values.shape[1] - 1

    def boundary_trace(self):
        """The observed row (u_{1,1}, ..., u_{1,t_max})."""
        if self.n_max < 1:
            raise ValueError("field has no interior row")
        return self.values[1, 1:].copy()


@dataclass(frozen=True)
class GoursatKernel:
    """Triangular kernel table w_{n,s}, 0 <= n, s <= order.

    Entries with n > s (outside the wedge) and the whole row n = 0 are
    stored as exact zeros, so recurrences may read the table blindly.
    """

    table: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.table, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError("kernel table must be square")
        object.__setattr__(self, "table", arr)

    @property
    def order(self):
        return self.table.shape[0] - 1

    def value(self, n, s):
        """w_{n,s} with the implicit zeros outside the stored wedge."""
        if n < 0 or s < 0:
            raise ValueError("kernel indices must be nonnegative")
        if n > self.order or s > self.order:
            raise ValueError("kernel index beyond stored order")
        return float(self.table[n, s])


def _padded_potential(b, length):
    b = as_float_array(b, "potential")
    if b.size >= length:
        return b[:length].copy()
    out = np.zeros(length)
    out[:b.size] = b
    return out


def solve_semi_infinite(b, f, T):
    """Evolve the controlled half-line lattice for T steps.

    Returns a WaveField of shape (T+1, T+1); row 0 holds the control
    padded with a leading zero so that values[0, t] = f_t for t < T.
    The potential is zero-padded beyond len(b): by finite speed the
    entries b_n with n > T never influence the table, and a shorter b
    means the tail of the half-line is free.
    """
    T = check_horizon(T)
    f = as_float_array(f, "control")
    if f.size != T:
        raise ValueError("horizon and control length mismatch")
    bp = _padded_potential(b, T)
    u = np.zeros((T + 1, T + 1))
    u[0, :T] = f
    for t in range(T):
        above = np.concatenate((u[2:, t], [0.0]))
        prev = u[1:, t - 1] if t >= 1 else 0.0
        u[1:, t + 1] = above + u[:-1, t] - bp * u[1:, t] - prev
    return WaveField(u)


def solve_goursat(b, S):
    """Fill the triangular kernel w up to order S for the potential b.

    Characteristic data on the diagonal, w_{n,n} = -(b_1 + ... + b_n),
    and the interior recurrence (increasing second index)

        w_{n,s} = w_{n+1,s-1} + w_{n-1,s-1} - b_n w_{n,s-1} - w_{n,s-2}

    with w_{0,s} = 0 and implicit zeros below the diagonal.  Requires
    len(b) >= S since b_S enters the last diagonal entry.
    """
    if not isinstance(S, (int, np.integer)) or S < 1:
        raise ValueError("order must be a positive integer")
    b = as_float_array(b, "potential")
    if b.size < S:
        raise ValueError("potential too short for requested order")
    S = int(S)
    w = np.zeros((S + 1, S + 1))
    diag = -np.cumsum(b[:S])
    w[np.arange(1, S + 1), np.arange(1, S + 1)] = diag
    for s in range(2, S + 1):
        n = np.arange(1, s)
        w[n, s] = (w[n + 1, s - 1] + w[n - 1, s - 1]
                   - b[n - 1] * w[n, s - 1] - w[n, s - 2])
    return GoursatKernel(w)


def apply_representation(kernel, f, n, t):
    """Evaluate u_{n,t} = f_{t-n} + sum_{s=n}^{t-1} w_{n,s} f_{t-s-1}.

    The control f is treated as zero outside its stored range.  The
    kernel must cover second indices up to t-1 whenever the sum is
    nonempty.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("site index must be a positive integer")
    if not isinstance(t, (int, np.integer)) or t < 0:
        raise ValueError("time index must be nonnegative")
    f = as_float_array(f, "control")
    n, t = int(n), int(t)
    if t > n and kernel.order < t - 1:
        raise ValueError("kernel coverage insufficient for requested time")
    total = f[t - n] if 0 <= t - n < f.size else 0.0
    for s in range(n, t):
        j = t - s - 1
        if 0 <= j < f.size:
            total += kernel.table[n, s] * f[j]
    return float(total)


def solve_interval(b, N, f, T):
    """Evolve the finite interval 1..N with a Dirichlet wall at N+1.

    Same recurrence and boundary control as the half-line problem but
    with u_{N+1,t} = 0 enforced; returns a WaveField of shape
    (N+2, T+1).  Requires len(b) >= N.
    """
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("interval size must be a positive integer")
    T = check_horizon(T)
    f = as_float_array(f, "control")
    if f.size != T:
        raise ValueError("horizon and control length mismatch")
    b = as_float_array(b, "potential")
    if b.size < N:
        raise ValueError("potential too short for interval size")
    N = int(N)
    v = np.zeros((N + 2, T + 1))
    v[0, :T] = f
    bn = b[:N]
    for t in range(T):
        prev = v[1:N + 1, t - 1] if t >= 1 else 0.0
        v[1:N + 1, t + 1] = (v[2:N + 2, t] + v[0:N, t]
                             - bn * v[1:N + 1, t] - prev)
    return WaveField(v)


def interval_fourier_solution(sd, f, T):
    """Interval solution synthesized from spectral data.

    v_{n,t} = sum_k c^k_t phi^k_n with coefficients driven by the
    control through the eigenvalue recurrence; concretely c^k is the
    Cauchy product of the control with the Chebyshev sequence at
    lambda_k, weighted by 1/rho_k.  Requires eigenvectors in sd.
    Returns a WaveField of shape (N+2, T+1) matching solve_interval.
    """
    from .core import chebyshev_seq, convolve

    if sd.eigenvectors is None:
        raise ValueError("spectral data must include eigenvectors")
    T = check_horizon(T)
    f = as_float_array(f, "control")
    if f.size != T:
        raise ValueError("horizon and control length mismatch")
    N = sd.size
    v = np.zeros((N + 2, T + 1))
    v[0, :T] = f
    for k in range(N):
        cheb = chebyshev_seq(T, sd.eigenvalues[k])
        coeff = convolve(cheb, f)[:T + 1] / sd.norming[k]
        v[1:N + 1] += np.outer(sd.eigenvectors[k], coeff)
    return WaveField(v)
