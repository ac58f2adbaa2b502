import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from multifiedler import (
    DimensionMismatch,
    DisconnectedGraph,
    NonConvergence,
    circulant,
    circulant_spectrum,
    degree_matrix,
    fiedler_space,
    gen_cycle,
    gen_modified_star,
    gen_petersen,
    gen_star,
    laplacian,
    seriation_objective,
    similarity,
    symmetric_eig,
)

CYCLE5_S = np.array(
    [
        [2, 1, 0, 0, 1],
        [1, 2, 1, 0, 0],
        [0, 1, 2, 1, 0],
        [0, 0, 1, 2, 1],
        [1, 0, 0, 1, 2],
    ]
)


def L_of(A):
    return laplacian(similarity(A))


class TestDegreeAndLaplacian:
    def test_degree_of_printed_cycle(self):
        assert degree_matrix(CYCLE5_S).tolist() == [4, 4, 4, 4, 4]

    def test_degree_trivial(self):
        assert degree_matrix(np.zeros((3, 3))).tolist() == [0, 0, 0]
        assert degree_matrix(np.eye(4)).tolist() == [1, 1, 1, 1]

    def test_cycle_laplacian_is_circulant(self):
        L = laplacian(CYCLE5_S)
        np.testing.assert_array_equal(L, circulant([2, -1, 0, 0, -1]))

    def test_identity_gives_zero(self):
        np.testing.assert_array_equal(laplacian(np.eye(3)), np.zeros((3, 3)))

    @pytest.mark.parametrize("n", [3, 6, 9])
    def test_star_laplacian_is_arrowhead(self, n):
        L = L_of(gen_star(n))
        expected = np.eye(n)
        expected[0, 0] = n - 1
        expected[0, 1:] = expected[1:, 0] = -1
        np.testing.assert_array_equal(L, expected)

    def test_rows_sum_to_zero_exactly(self, rng):
        S = rng.integers(0, 50, (12, 12))
        L = laplacian(S + S.T)
        assert np.all(L.sum(axis=1) == 0.0)

    def test_rows_sum_to_zero_float(self, rng):
        S = rng.random((12, 12))
        L = laplacian(S + S.T)
        assert np.all(np.abs(L.sum(axis=1)) <= 1e-14 * np.abs(L).sum(axis=1))

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError):
            laplacian(np.array([[0, 1], [2, 0]]))


class TestSymmetricEig:
    def test_star6(self):
        lam = symmetric_eig(L_of(gen_star(6))).eigenvalues
        np.testing.assert_allclose(lam, [0, 1, 1, 1, 1, 6], atol=1e-12)

    def test_identity(self):
        dec = symmetric_eig(np.eye(5))
        np.testing.assert_array_equal(dec.eigenvalues, np.ones(5))
        np.testing.assert_array_equal(dec.eigenvectors, np.eye(5))

    def test_cycle4(self):
        # 2 - 2 cos(2 pi k / 4), k = 0..3
        lam = symmetric_eig(L_of(gen_cycle(4))).eigenvalues
        np.testing.assert_allclose(lam, [0, 2, 2, 4], atol=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(arrays(np.float64, (7, 7), elements=st.floats(-10, 10)))
    def test_invariants_random(self, B):
        M = B + B.T
        tol = 1e-12
        dec = symmetric_eig(M, tol=tol)
        V, lam = dec.eigenvectors, dec.eigenvalues
        assert np.all(np.diff(lam) >= 0)
        assert np.max(np.abs(V.T @ V - np.eye(7))) <= 10 * tol
        scale = max(np.linalg.norm(M), 1e-300)
        assert np.linalg.norm(M - V @ np.diag(lam) @ V.T) <= max(tol * scale, 1e-13 * scale)

    def test_matches_numpy(self, rng):
        B = rng.standard_normal((15, 15))
        M = B + B.T
        np.testing.assert_allclose(
            symmetric_eig(M).eigenvalues, np.linalg.eigvalsh(M), atol=1e-10
        )

    def test_nonconvergence(self, rng):
        B = rng.standard_normal((8, 8))
        with pytest.raises(NonConvergence):
            symmetric_eig(B + B.T, max_sweeps=1)

    def test_zero_matrix(self):
        dec = symmetric_eig(np.zeros((3, 3)))
        assert dec.eigenvalues.tolist() == [0, 0, 0]


class TestCirculant:
    def test_c4(self):
        np.testing.assert_allclose(circulant_spectrum([2, -1, 0, -1]), [0, 2, 4, 2], atol=1e-14)

    def test_scaled_identity(self):
        np.testing.assert_allclose(circulant_spectrum([3.5, 0, 0, 0, 0, 0]), [3.5] * 6)

    def test_c5(self):
        k = np.arange(5)
        np.testing.assert_allclose(
            circulant_spectrum([2, -1, 0, 0, -1]), 2 - 2 * np.cos(2 * np.pi * k / 5), atol=1e-14
        )

    def test_empty(self):
        with pytest.raises(ValueError):
            circulant_spectrum([])

    @pytest.mark.parametrize("n", range(3, 13))
    def test_jacobi_agrees_with_closed_form(self, n):
        L = L_of(gen_cycle(n))
        closed = np.sort(circulant_spectrum(L[:, 0]).real)
        np.testing.assert_allclose(symmetric_eig(L).eigenvalues, closed, atol=1e-9)


class TestSpectralFamilies:
    @pytest.mark.parametrize("n", range(5, 11))
    def test_star_spectrum(self, n):
        lam = symmetric_eig(L_of(gen_star(n))).eigenvalues
        np.testing.assert_allclose(lam, [0] + [1] * (n - 2) + [n], atol=1e-9)

    @pytest.mark.parametrize("n", range(5, 11))
    def test_modified_star_spectrum(self, n):
        lam = symmetric_eig(L_of(gen_modified_star(n))).eigenvalues
        np.testing.assert_allclose(lam[:3], [0, 1, 1], atol=1e-9)
        assert abs(lam[-1] - n) < 1e-9
        rest = lam[3:-1]
        assert rest.size == n - 4
        assert np.all((rest > 1 + 1e-9) & (rest < 5))

    @pytest.mark.parametrize(
        "A", [gen_star(7), gen_modified_star(8), gen_cycle(9), gen_petersen(6)], ids=str
    )
    def test_laplacian_psd_with_null_ones(self, A):
        L = L_of(A)
        assert np.all(L @ np.ones(L.shape[0]) == 0)
        lam = symmetric_eig(L).eigenvalues
        assert abs(lam[0]) <= 1e-10
        assert np.all(lam >= -1e-10)


class TestFiedlerSpace:
    def test_modified_star6(self):
        fs = fiedler_space(L_of(gen_modified_star(6)))
        assert fs.multiplicity == 2
        assert abs(fs.value - 1) < 1e-12

    def test_star6(self):
        fs = fiedler_space(L_of(gen_star(6)))
        assert fs.multiplicity == 4
        assert abs(fs.value - 1) < 1e-12

    def test_cycle5(self):
        fs = fiedler_space(L_of(gen_cycle(5)))
        assert fs.multiplicity == 2
        assert abs(fs.value - (2 - 2 * np.cos(2 * np.pi / 5))) < 1e-12
        assert abs(fs.value - 1.381966011250105) < 1e-12

    def test_disconnected(self):
        S = np.zeros((4, 4))
        S[0, 1] = S[1, 0] = S[2, 3] = S[3, 2] = 1
        with pytest.raises(DisconnectedGraph):
            fiedler_space(laplacian(S))

    @pytest.mark.parametrize("family", ["modified_star", "cycle", "petersen"])
    @pytest.mark.parametrize("n", range(5, 11))
    def test_basis_invariants(self, space, family, n):
        fs = space(family, n)
        L = L_of({"modified_star": gen_modified_star, "cycle": gen_cycle, "petersen": gen_petersen}[family](n))
        ctol = 1e-8
        Q = fs.basis
        for q in Q.T:
            assert np.linalg.norm(L @ q - fs.value * q) <= ctol * np.linalg.norm(L)
            assert abs(q.sum()) <= ctol * np.sqrt(L.shape[0])
        assert np.max(np.abs(Q.T @ Q - np.eye(fs.multiplicity))) <= 10 * ctol


class TestObjective:
    def test_constant_vector(self, rng):
        F = rng.random((6, 6))
        assert seriation_objective(F + F.T, np.ones(6)) == 0

    def test_rayleigh_quotient_of_fiedler_vector(self, space):
        fs = space("cycle", 5)
        h = seriation_objective(CYCLE5_S, fs.basis[:, 0])
        assert abs(h - fs.value) < 1e-12

    def test_identity(self):
        assert seriation_objective(np.eye(2), [1, -1]) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            seriation_objective(np.eye(3), [1, 2])

    def test_matches_quadratic_form(self, rng):
        B = rng.random((9, 9))
        F = B + B.T
        L = laplacian(F)
        for _ in range(100):
            x = rng.standard_normal(9)
            q = x @ L @ x
            assert abs(seriation_objective(F, x) - q) <= 1e-10 * abs(q)
