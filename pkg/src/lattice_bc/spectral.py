"""Finite Jacobi operator: eigendata, spectral measure, spectral inversion.

The interval Hamiltonian is the N x N Jacobi matrix with diagonal -b_n
and unit off-diagonals.  Its eigenvalues are simple; the eigenvectors
rescaled to phi^k_1 = 1 define the norming constants rho_k = |phi^k|^2,
and the pairs (lambda_k, 1/rho_k) form a probability measure (total
mass one) that determines the potential.  The bridge to boundary data:
the response kernel of the half-line problem agrees with the spectral
moment sequence r_s = sum_k T_{s+1}(lambda_k)/rho_k for s <= 2N-1, and
at s = 2N the Dirichlet wall reflection contributes an extra +1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .core import Tolerances, as_float_array, chebyshev_seq, check_horizon
from .linalg import ConvergenceFailure

__all__ = [
    "Hamiltonian", "SpectralData", "SpectralMeasure", "ConvergenceFailure",
    "build_hamiltonian", "eigen_decompose", "phi_polynomial",
    "kernel_from_spectral", "connecting_from_spectral", "spectral_measure",
    "invert_spectral",
]


@dataclass(frozen=True)
class Hamiltonian:
    """Jacobi matrix data: diagonal entries -b_n, off-diagonal ones."""

    diag: np.ndarray

    def __post_init__(self):
        arr = as_float_array(self.diag, "diagonal")
        if arr.size < 1:
            raise ValueError("Hamiltonian must have positive size")
        object.__setattr__(self, "diag", arr)

    @property
    def size(self):
        return self.diag.size

    def to_dense(self):
        N = self.size
        H = np.diag(self.diag)
        idx = np.arange(N - 1)
        H[idx, idx + 1] = 1.0
        H[idx + 1, idx] = 1.0
        return H

    def norm_bound(self):
        """Row-sum bound on the operator norm."""
        radius = np.zeros(self.size)
        radius[:-1] += 1.0
        radius[1:] += 1.0
        return float(np.max(np.abs(self.diag) + radius))


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalues (ascending, simple) with norming constants.

    norming[k] is rho_k = |phi^k|^2 for the eigenvector rescaled to
    phi^k_1 = 1; eigenvectors (rows, in that rescaling) are optional
    and only needed for field synthesis.  The measure weights 1/rho_k
    sum to one for data coming from an actual operator.
    """

    eigenvalues: np.ndarray
    norming: np.ndarray
    eigenvectors: np.ndarray | None = None

    def __post_init__(self):
        lam = as_float_array(self.eigenvalues, "eigenvalues")
        rho = as_float_array(self.norming, "norming")
        if lam.size < 1 or lam.size != rho.size:
            raise ValueError("eigenvalues and norming lengths mismatch")
        if np.any(np.diff(lam) <= 0.0):
            raise ValueError("eigenvalues must be strictly increasing")
        if np.any(rho <= 0.0):
            raise ValueError("norming constants must be positive")
        object.__setattr__(self, "eigenvalues", lam)
        object.__setattr__(self, "norming", rho)
        if self.eigenvectors is not None:
            vec = np.asarray(self.eigenvectors, dtype=float)
            if vec.shape != (lam.size, lam.size):
                raise ValueError("eigenvector table shape mismatch")
            object.__setattr__(self, "eigenvectors", vec)

    @property
    def size(self):
        return self.eigenvalues.size


@dataclass(frozen=True)
class SpectralMeasure:
    """Atomic measure with jumps weights[k] at locations[k]."""

    locations: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        loc = as_float_array(self.locations, "locations")
        wts = as_float_array(self.weights, "weights")
        if loc.size != wts.size:
            raise ValueError("locations and weights lengths mismatch")
        if np.any(np.diff(loc) <= 0.0):
            raise ValueError("locations must be strictly increasing")
        if np.any(wts <= 0.0):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "locations", loc)
        object.__setattr__(self, "weights", wts)

    def evaluate(self, x):
        """Distribution value: total weight strictly below x."""
        return float(np.sum(self.weights[self.locations < x]))

    @property
    def total_mass(self):
        return float(np.sum(self.weights))


def build_hamiltonian(b, N):
    """Interval Hamiltonian of size N for the potential b (len(b) >= N)."""
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("size must be a positive integer")
    b = as_float_array(b, "potential")
    if b.size < N:
        raise ValueError("potential too short for requested size")
    return Hamiltonian(diag=-b[:int(N)].copy())


def eigen_decompose(H, tol=Tolerances()):
    """Full eigendata of the Jacobi matrix via bisection and inverse iteration.

    Eigenvalues come from Sturm-count bisection; eigenvectors from
    inverse iteration, orthogonalized within near-degenerate clusters.
    Each vector is rescaled to first component one, which requires
    |v_1| > pivot_tol; localized states at large size or strong
    potential legitimately have exponentially small first components,
    so callers probing that regime should relax pivot_tol.  Raises
    ConvergenceFailure on residual stall, eigenvalue collision, or an
    unusably small first component.
    """
    if not isinstance(H, Hamiltonian):
        raise ValueError("H must be a Hamiltonian")
    if not isinstance(tol, Tolerances):
        raise ValueError("tol must be a Tolerances instance")
    N = H.size
    d = H.diag
    e = np.ones(N - 1)
    lam = linalg.tridiag_eigenvalues(d, e)
    norm_h = max(H.norm_bound(), 1.0)
    if np.any(np.diff(lam) <= 0.0):
        raise ConvergenceFailure("eigenvalues collide at working precision")
    cluster_tol = 1e-6 * norm_h
    vectors = np.empty((N, N))
    raw = []
    for k in range(N):
        partners = [raw[j] for j in range(k)
                    if lam[k] - lam[j] <= cluster_tol]
        v = linalg.tridiag_eigenvector(d, e, lam[k], ortho=partners,
                                       rel_tol=tol.eig_tol)
        raw.append(v)
        if np.abs(v[0]) <= tol.pivot_tol:
            raise ConvergenceFailure(
                f"first eigenvector component below pivot tolerance "
                f"at eigenvalue index {k}")
        vectors[k] = v / v[0]
    rho = np.einsum("kn,kn->k", vectors, vectors)
    return SpectralData(eigenvalues=lam, norming=rho, eigenvectors=vectors)


def phi_polynomial(b, lam, N):
    """Polynomial solution (phi_0, ..., phi_{N+1}) at spectral point lam.

    phi_0 = 0, phi_1 = 1, phi_{i+1} = (lam + b_i) phi_i - phi_{i-1}.
    phi_{N+1}(lam) = 0 exactly when lam is an eigenvalue of the
    size-N Hamiltonian, and then (phi_1, ..., phi_N) is the rescaled
    eigenvector.  Requires len(b) >= N.
    """
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError("size must be a positive integer")
    b = as_float_array(b, "potential")
    if b.size < N:
        raise ValueError("potential too short for requested size")
    phi = np.zeros(int(N) + 2)
    phi[0] = 0.0
    phi[1] = 1.0
    for i in range(1, int(N) + 1):
        phi[i + 1] = (lam + b[i - 1]) * phi[i] - phi[i - 1]
    return phi


def kernel_from_spectral(sd, K, dirichlet_correction=False):
    """Kernel prefix (r_0, ..., r_K) from spectral data of size N.

    r_s = sum_k T_{s+1}(lambda_k) / rho_k, valid against the half-line
    response for s <= 2N - 1.  With dirichlet_correction the range
    extends to s = 2N, where the first wall reflection adds exactly +1.
    r_0 is pinned to 1 exactly: the computed mass sum equals one up to
    roundoff for any data produced by an actual operator.
    """
    if not isinstance(sd, SpectralData):
        raise ValueError("sd must be SpectralData")
    N = sd.size
    limit = 2 * N if dirichlet_correction else 2 * N - 1
    if not isinstance(K, (int, np.integer)) or K < 0:
        raise ValueError("kernel order must be nonnegative")
    if K > limit:
        raise ValueError("kernel order beyond spectral validity range")
    K = int(K)
    weights = 1.0 / sd.norming
    r = np.empty(K + 1)
    r[0] = 1.0
    t_prev = np.zeros(N)
    t_cur = np.ones(N)
    for s in range(1, K + 1):
        t_prev, t_cur = t_cur, sd.eigenvalues * t_cur - t_prev
        r[s] = float(weights @ t_cur)
    if dirichlet_correction and K == 2 * N:
        r[K] += 1.0
    return r


def connecting_from_spectral(sd, T):
    """Connecting matrix of horizon T <= N straight from spectral data.

    C_{lm} = sum_k T_{T-l+1}(lambda_k) T_{T-m+1}(lambda_k) / rho_k
    (1-based l, m); for horizons within the interval size this equals
    the kernel-built connecting matrix.
    """
    if not isinstance(sd, SpectralData):
        raise ValueError("sd must be SpectralData")
    T = check_horizon(T)
    N = sd.size
    if T > N:
        raise ValueError("horizon exceeds interval size")
    cheb = np.empty((T, N))
    t_prev = np.zeros(N)
    t_cur = np.ones(N)
    cheb[T - 1] = t_cur
    for j in range(2, T + 1):
        t_prev, t_cur = t_cur, sd.eigenvalues * t_cur - t_prev
        cheb[T - j] = t_cur
    return cheb @ np.diag(1.0 / sd.norming) @ cheb.T


def spectral_measure(sd):
    """Atomic measure with weight 1/rho_k at lambda_k."""
    if not isinstance(sd, SpectralData):
        raise ValueError("sd must be SpectralData")
    return SpectralMeasure(locations=sd.eigenvalues.copy(),
                           weights=1.0 / sd.norming)


def invert_spectral(sd):
    """Recover (b_1, ..., b_N) from spectral data of size N.

    Extends the spectral kernel to index 2N with the Dirichlet
    correction and hands it to the layer-stripping solver at horizon
    N + 1; the correction buys exactly the extra kernel entry needed
    for the last potential value.
    """
    from .inversion import invert_factorization

    if not isinstance(sd, SpectralData):
        raise ValueError("sd must be SpectralData")
    N = sd.size
    r = kernel_from_spectral(sd, 2 * N, dirichlet_correction=True)
    return invert_factorization(r, N + 1)
