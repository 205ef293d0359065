"""Dynamical inverse solvers and response-data characterization.

Three routes recover the potential from a response kernel prefix
(r_0, ..., r_{2T-2}):

* invert_krein           - solves the controllability system for the
                           lambda = 0 trace and reads b off its
                           three-term recurrence;
* invert_factorization   - layer stripping through the triangular
                           factorization of the reversed connecting
                           matrix;
* invert_gelfand_levitan - the discrete Gelfand-Levitan system, the
                           same linear systems assembled through the
                           identity-plus-perturbation form.

characterize_response decides whether a kernel prefix is the response
of any real potential: the reversed connecting matrix must be positive
definite with every leading principal determinant equal to one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .bc_ops import (apply_response_adjoint, connecting_matrix,
                     rotated_connecting)
from .core import Tolerances, check_horizon, check_kernel, kappa_seq


class InversionError(Exception):
    """Base class for failures of the inverse solvers."""


class DegenerateTrace(InversionError):
    """The lambda = 0 trace vanished at some site, blocking division."""

    def __init__(self, index):
        self.index = int(index)
        super().__init__(f"trace vanishes at site n = {self.index}")


class SingularConnecting(InversionError):
    """A connecting matrix was singular; the kernel is not admissible."""

    def __init__(self, horizon):
        self.horizon = int(horizon)
        super().__init__(
            f"connecting matrix singular at horizon {self.horizon}")


class SingularLeadingMinor(InversionError):
    """A leading block of the reversed connecting matrix was singular."""

    def __init__(self, order):
        self.order = int(order)
        super().__init__(f"singular leading block of order {self.order}")


@dataclass(frozen=True)
class KreinConfig:
    """Boundary data (alpha, beta) of the lambda = 0 comparison solution.

    The recovered trace satisfies y_0 = alpha, y_1 = beta; the default
    (0, 1) is the Dirichlet-like normalization.  degeneracy_tol is the
    relative floor below which a trace value counts as vanished.
    """

    alpha: float = 0.0
    beta: float = 1.0
    degeneracy_tol: float = 1e-8

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ValueError("alpha and beta must be finite")
        if self.alpha == 0.0 and self.beta == 0.0:
            raise ValueError("alpha and beta must not both vanish")
        if not np.isfinite(self.degeneracy_tol) or self.degeneracy_tol < 0.0:
            raise ValueError("degeneracy_tol must be finite and nonnegative")


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Outcome of the admissibility test for a kernel prefix.

    minor_values[l-1] holds det of the order-l leading block of the
    reversed connecting matrix; pivot_values are the successive ratios
    (the elimination pivots of the positive definite check).
    first_failing_order is the smallest l violating either condition,
    or None when admissible.
    """

    admissible: bool
    first_failing_order: int | None
    minor_values: np.ndarray
    pivot_values: np.ndarray


def _checked_kernel(r, T):
    T = check_horizon(T)
    r = check_kernel(r)
    if r.size < 2 * T - 1:
        raise ValueError("kernel must cover index 2T - 2")
    return r, T


def invert_krein(r, T, config=KreinConfig()):
    """Recover (b_1, ..., b_{T-1}) through the lambda = 0 trace.

    For each horizon tau = 1..T the control f^tau steering the system
    to the harmonic weight is found from the connecting system

        C^tau f^tau = beta kappa^tau - alpha R^tau* kappa^tau,

    and the trace value is the first control component, y_tau = f^tau_0,
    with y_0 = alpha.  The adjoint term pairs kappa with observation
    times: entry t of the paired sequence is kappa_{t} for t < tau and
    0 at t = tau, matching the summation-by-parts boundary term of the
    weighted trace identity.  The potential follows from the trace
    recurrence b_n = (y_{n+1} + y_{n-1}) / y_n; a relatively vanishing
    y_n raises DegenerateTrace(n).
    """
    r, T = _checked_kernel(r, T)
    if not isinstance(config, KreinConfig):
        raise ValueError("config must be a KreinConfig")
    y = np.empty(T + 1)
    y[0] = config.alpha
    for tau in range(1, T + 1):
        kap = kappa_seq(tau)
        rhs = config.beta * kap
        if config.alpha != 0.0:
            paired = np.append(kap[1:], 0.0)
            rhs = rhs - config.alpha * apply_response_adjoint(r, paired)
        C = connecting_matrix(r, tau)
        try:
            f_tau = linalg.solve(C, rhs)
        except linalg.SingularMatrixError as exc:
            raise SingularConnecting(tau) from exc
        y[tau] = f_tau[0]
    scale = float(np.max(np.abs(y)))
    b = np.empty(T - 1)
    for n in range(1, T):
        if np.abs(y[n]) <= config.degeneracy_tol * scale:
            raise DegenerateTrace(n)
        b[n - 1] = (y[n + 1] + y[n - 1]) / y[n]
    return b


def invert_factorization(r, T):
    """Recover (b_1, ..., b_{T-1}) by triangular factorization.

    The reversed connecting matrix admits C-bar = (I + K-bar)^T
    (I + K-bar) with K-bar strictly upper triangular, and the diagonal
    of the triangular factor carries the cumulative potential:
    k_{ll} = -(b_1 + ... + b_l) up to sign convention, so successive
    differences of the recovered diagonal give b.  Column l + 1 of the
    factor solves the order-l leading system against the next column
    of C-bar; only leading blocks enter, so entries of r beyond index
    2T - 2 can never influence the result.
    """
    r, T = _checked_kernel(r, T)
    cbar = rotated_connecting(connecting_matrix(r, T))
    kdiag = np.zeros(T)
    for ell in range(T - 1):
        try:
            x = linalg.solve(cbar[:ell + 1, :ell + 1],
                             -cbar[:ell + 1, ell + 1])
        except linalg.SingularMatrixError as exc:
            raise SingularLeadingMinor(ell + 1) from exc
        kdiag[ell + 1] = x[-1]
    return np.diff(kdiag)


def invert_gelfand_levitan(r, T):
    """Recover (b_1, ..., b_{T-1}) from the Gelfand-Levitan system.

    Writing the reversed connecting matrix of each horizon tau as
    I + C-tilde, the kernel row solves

        (I + C-tilde)[:tau-1, :tau-1] x = -C-tilde[:tau-1, tau-1]

    and the recovered diagonal entry is the last component.  These are
    the same linear systems as invert_factorization assembled in
    identity-plus-perturbation form, horizon by horizon.
    """
    r, T = _checked_kernel(r, T)
    kdiag = np.zeros(T)
    for tau in range(2, T + 1):
        cbar = rotated_connecting(connecting_matrix(r, tau))
        ctilde = cbar - np.eye(tau)
        system = np.eye(tau - 1) + ctilde[:tau - 1, :tau - 1]
        try:
            x = linalg.solve(system, -ctilde[:tau - 1, tau - 1])
        except linalg.SingularMatrixError as exc:
            raise SingularLeadingMinor(tau - 1) from exc
        kdiag[tau - 1] = x[-1]
    return np.diff(kdiag)


def characterize_response(r, T, tol=Tolerances()):
    """Decide whether (r_0, ..., r_{2T-2}) is admissible response data.

    Admissible means the prefix is the response kernel of some real
    potential of length T - 1, which holds iff the reversed connecting
    matrix is positive definite with every leading principal
    determinant equal to one.  Both facts are read off the leading
    minors: |m_l - 1| <= det_tol and the pivot ratios
    m_l / m_{l-1} > pivot_tol for l = 1..T.  Inadmissibility is a
    verdict, not an error.
    """
    r, T = _checked_kernel(r, T)
    if not isinstance(tol, Tolerances):
        raise ValueError("tol must be a Tolerances instance")
    cbar = rotated_connecting(connecting_matrix(r, T))
    minors = linalg.leading_minors(cbar)
    with np.errstate(divide="ignore", invalid="ignore"):
        pivots = minors / np.concatenate(([1.0], minors[:-1]))
    first = None
    for ell in range(T):
        det_ok = np.abs(minors[ell] - 1.0) <= tol.det_tol
        pivot_ok = pivots[ell] > tol.pivot_tol
        if not (det_ok and pivot_ok):
            first = ell + 1
            break
    return CharacterizationVerdict(
        admissible=first is None,
        first_failing_order=first,
        minor_values=minors,
        pivot_values=pivots,
    )
