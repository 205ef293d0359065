"""Jacobi eigendata, spectral measure, and the boundary-spectral bridge."""

import numpy as np
import pytest

from lattice_bc.bc_ops import connecting_matrix, response_kernel
from lattice_bc.core import Tolerances
from lattice_bc.forward import solve_interval, solve_semi_infinite
from lattice_bc.linalg import ConvergenceFailure
from lattice_bc.spectral import (Hamiltonian, SpectralData, SpectralMeasure,
                                 build_hamiltonian, connecting_from_spectral,
                                 eigen_decompose, invert_spectral,
                                 kernel_from_spectral, phi_polynomial,
                                 spectral_measure)


def delta(T):
    f = np.zeros(T)
    f[0] = 1.0
    return f


class TestHamiltonian:
    def test_single_site(self):
        H = build_hamiltonian([0.7], 1)
        assert np.array_equal(H.to_dense(), [[-0.7]])

    def test_free_two_site(self):
        H = build_hamiltonian(np.zeros(2), 2)
        assert np.array_equal(H.to_dense(), [[0.0, 1.0], [1.0, 0.0]])

    def test_diagonal_is_minus_potential(self):
        b = np.array([1.0, 2.0, 3.0])
        H = build_hamiltonian(b, 3)
        assert np.array_equal(np.diag(H.to_dense()), -b)
        assert H.size == 3

    def test_short_potential_rejected(self):
        with pytest.raises(ValueError):
            build_hamiltonian([1.0], 2)

    def test_norm_bound(self):
        H = build_hamiltonian([1.0, -3.0], 2)
        assert H.norm_bound() == 4.0


class TestEigenDecompose:
    def test_single_site(self):
        sd = eigen_decompose(build_hamiltonian([0.9], 1))
        assert np.array_equal(sd.eigenvalues, [-0.9])
        assert np.array_equal(sd.norming, [1.0])

    def test_free_two_site(self):
        sd = eigen_decompose(build_hamiltonian(np.zeros(2), 2))
        assert np.allclose(sd.eigenvalues, [-1.0, 1.0], atol=1e-12)
        assert np.allclose(sd.norming, [2.0, 2.0], atol=1e-10)
        assert np.allclose(sd.eigenvectors, [[1.0, -1.0], [1.0, 1.0]],
                           atol=1e-10)

    def test_matches_numpy_oracle(self):
        rng = np.random.default_rng(70)
        for N in (2, 5, 11, 24):
            b = rng.uniform(-2, 2, N)
            H = build_hamiltonian(b, N)
            sd = eigen_decompose(H)
            ref = np.linalg.eigvalsh(H.to_dense())
            scale = max(1.0, np.abs(ref).max())
            assert np.max(np.abs(sd.eigenvalues - ref)) <= 1e-12 * scale

    def test_unit_mass(self):
        rng = np.random.default_rng(71)
        for N in (1, 3, 8, 20, 32):
            b = rng.uniform(-2, 2, N)
            sd = eigen_decompose(build_hamiltonian(b, N))
            assert abs(np.sum(1.0 / sd.norming) - 1.0) <= 1e-10

    def test_eigenpair_residuals(self):
        rng = np.random.default_rng(72)
        N = 16
        b = rng.uniform(-2, 2, N)
        H = build_hamiltonian(b, N)
        sd = eigen_decompose(H)
        dense = H.to_dense()
        for k in range(N):
            phi = sd.eigenvectors[k]
            res = dense @ phi - sd.eigenvalues[k] * phi
            bound = 1e-10 * H.norm_bound() * np.sqrt(phi @ phi)
            assert np.sqrt(res @ res) <= bound

    def test_first_components_rescaled(self):
        rng = np.random.default_rng(73)
        sd = eigen_decompose(build_hamiltonian(rng.uniform(-1, 1, 9), 9))
        assert np.array_equal(sd.eigenvectors[:, 0], np.ones(9))

    def test_localized_state_guard(self):
        # a deep well at the far end localizes the ground state away
        # from the boundary; with a loose pivot floor the decomposition
        # succeeds, with a harsh one it must refuse to rescale
        b = np.zeros(24)
        b[-1] = 8.0
        H = build_hamiltonian(b, 24)
        sd = eigen_decompose(H, Tolerances(pivot_tol=0.0))
        assert abs(np.sum(1.0 / sd.norming) - 1.0) <= 1e-10
        with pytest.raises(ConvergenceFailure):
            eigen_decompose(H, Tolerances(pivot_tol=1e-3))

    def test_validation(self):
        with pytest.raises(ValueError):
            eigen_decompose(np.eye(3))
        with pytest.raises(ValueError):
            SpectralData(eigenvalues=[1.0, 0.5], norming=[2.0, 2.0])
        with pytest.raises(ValueError):
            SpectralData(eigenvalues=[0.5, 1.0], norming=[2.0, -2.0])


class TestPhiPolynomial:
    def test_free_potential_is_chebyshev(self):
        from lattice_bc.core import chebyshev_seq
        lam = 0.37
        phi = phi_polynomial(np.zeros(6), lam, 6)
        cheb = chebyshev_seq(7, lam)
        assert np.allclose(phi, cheb, atol=1e-14)

    def test_single_site_root(self):
        c = 0.8
        phi = phi_polynomial([c], -c, 1)
        assert np.array_equal(phi, [0.0, 1.0, 0.0])

    def test_vanishes_at_eigenvalues(self):
        rng = np.random.default_rng(74)
        for N in (2, 5, 10):
            b = rng.uniform(-1.5, 1.5, N)
            sd = eigen_decompose(build_hamiltonian(b, N))
            for lam in sd.eigenvalues:
                phi = phi_polynomial(b, lam, N)
                assert abs(phi[N + 1]) <= 1e-8 * np.abs(phi).max()

    def test_matches_eigenvectors(self):
        rng = np.random.default_rng(75)
        N = 7
        b = rng.uniform(-1.5, 1.5, N)
        sd = eigen_decompose(build_hamiltonian(b, N))
        for k in range(N):
            phi = phi_polynomial(b, sd.eigenvalues[k], N)
            scale = np.abs(sd.eigenvectors[k]).max()
            assert np.allclose(phi[1:N + 1], sd.eigenvectors[k],
                               atol=1e-8 * scale)

    def test_short_potential_rejected(self):
        with pytest.raises(ValueError):
            phi_polynomial([1.0], 0.0, 2)


class TestKernelFromSpectral:
    def test_normalized_head(self):
        rng = np.random.default_rng(76)
        sd = eigen_decompose(build_hamiltonian(rng.uniform(-1, 1, 5), 5))
        r = kernel_from_spectral(sd, 9)
        assert r[0] == 1.0

    def test_single_site_values(self):
        # raw moments at N = 1 are Chebyshev values at -c; the raw
        # s = 2 value is c^2 - 1 and the +1 wall correction lifts it
        # to the half-line kernel value c^2
        c = 0.9
        sd = eigen_decompose(build_hamiltonian([c], 1))
        r = kernel_from_spectral(sd, 2, dirichlet_correction=True)
        assert np.allclose(r, [1.0, -c, c * c], atol=1e-12)
        semi = response_kernel([c, 0.0], 2)
        assert np.allclose(r, semi, atol=1e-12)
        raw = kernel_from_spectral(sd, 1)
        assert np.allclose(raw, [1.0, -c], atol=1e-12)

    def test_agreement_range_and_discrepancy(self):
        rng = np.random.default_rng(77)
        for N in (1, 3, 6, 10):
            b = rng.uniform(-0.5, 0.5, N + 2 * N)
            sd = eigen_decompose(build_hamiltonian(b, N))
            r_spec = kernel_from_spectral(sd, 2 * N - 1)
            r_semi = response_kernel(b, 2 * N)
            assert np.max(np.abs(r_spec - r_semi[:2 * N])) <= 1e-9
            corrected = kernel_from_spectral(sd, 2 * N,
                                             dirichlet_correction=True)
            raw_tail = corrected[2 * N] - 1.0
            assert r_semi[2 * N] - raw_tail == pytest.approx(1.0, abs=1e-9)

    def test_range_validation(self):
        sd = eigen_decompose(build_hamiltonian([0.5, 0.5], 2))
        kernel_from_spectral(sd, 3)
        with pytest.raises(ValueError):
            kernel_from_spectral(sd, 4)
        kernel_from_spectral(sd, 4, dirichlet_correction=True)
        with pytest.raises(ValueError):
            kernel_from_spectral(sd, 5, dirichlet_correction=True)
        with pytest.raises(ValueError):
            kernel_from_spectral(sd, -1)


class TestConnectingFromSpectral:
    def test_single_site(self):
        sd = eigen_decompose(build_hamiltonian([0.3], 1))
        assert np.allclose(connecting_from_spectral(sd, 1), [[1.0]],
                           atol=1e-12)

    def test_free_two_site(self):
        sd = eigen_decompose(build_hamiltonian(np.zeros(2), 2))
        C = connecting_from_spectral(sd, 1)
        assert np.allclose(C, [[1.0]], atol=1e-12)

    def test_matches_kernel_route(self):
        rng = np.random.default_rng(78)
        for N in (2, 5, 9, 12):
            b = rng.uniform(-0.25, 0.25, 3 * N)
            sd = eigen_decompose(build_hamiltonian(b, N))
            for T in (1, N // 2 + 1, N):
                C_spec = connecting_from_spectral(sd, T)
                C_kernel = connecting_matrix(
                    response_kernel(b, 2 * T - 2), T)
                assert np.max(np.abs(C_spec - C_kernel)) <= 1e-9

    def test_horizon_beyond_size_rejected(self):
        sd = eigen_decompose(build_hamiltonian([0.5, 0.5], 2))
        with pytest.raises(ValueError):
            connecting_from_spectral(sd, 3)


class TestSpectralMeasure:
    def test_single_site_steps(self):
        sd = eigen_decompose(build_hamiltonian([0.9], 1))
        mu = spectral_measure(sd)
        assert mu.evaluate(-1.0) == 0.0
        assert mu.evaluate(-0.9) == 0.0  # strictly below the jump
        assert mu.evaluate(0.0) == 1.0
        assert mu.total_mass == 1.0

    def test_free_two_site_half_jumps(self):
        sd = eigen_decompose(build_hamiltonian(np.zeros(2), 2))
        mu = spectral_measure(sd)
        assert mu.evaluate(-2.0) == 0.0
        assert mu.evaluate(0.0) == pytest.approx(0.5, abs=1e-10)
        assert mu.evaluate(2.0) == pytest.approx(1.0, abs=1e-10)

    def test_validation(self):
        with pytest.raises(ValueError):
            SpectralMeasure(locations=[1.0, 0.0], weights=[0.5, 0.5])
        with pytest.raises(ValueError):
            SpectralMeasure(locations=[0.0, 1.0], weights=[0.5, 0.0])


class TestInvertSpectral:
    def test_single_site(self):
        sd = SpectralData(eigenvalues=[-0.8], norming=[1.0])
        assert np.allclose(invert_spectral(sd), [0.8], atol=1e-12)

    def test_free_two_site(self):
        sd = SpectralData(eigenvalues=[-1.0, 1.0], norming=[2.0, 2.0])
        assert np.allclose(invert_spectral(sd), [0.0, 0.0], atol=1e-10)

    def test_round_trip(self):
        rng = np.random.default_rng(79)
        for N in (1, 3, 6, 10, 12):
            b = rng.uniform(-0.25, 0.25, N)
            sd = eigen_decompose(build_hamiltonian(b, N))
            recovered = invert_spectral(sd)
            assert recovered.size == N
            assert np.max(np.abs(recovered - b)) <= 1e-6

    def test_interval_fourier_consistency(self):
        # delta-probe boundary data synthesized spectrally equals the
        # time-stepped interval solution for t <= 3N
        from lattice_bc.forward import interval_fourier_solution
        rng = np.random.default_rng(80)
        N = 6
        T = 3 * N
        b = rng.uniform(-0.25, 0.25, N)
        sd = eigen_decompose(build_hamiltonian(b, N))
        fourier = interval_fourier_solution(sd, delta(T), T)
        direct = solve_interval(b, N, delta(T), T)
        assert np.max(np.abs(fourier.values - direct.values)) <= 1e-9
