"""Dense symmetric linear algebra for graph Laplacians.

Everything here works on small dense ``numpy`` arrays (a few hundred rows at
most).  The eigensolver is a cyclic Jacobi iteration, chosen because it is
deterministic and returns an orthonormal eigenbasis even for clustered
eigenvalues, which is exactly the situation a multiple Fiedler value creates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DisconnectedGraph, NonConvergence

__all__ = [
    "SpectralDecomposition",
    "FiedlerSpace",
    "as_symmetric",
    "degree_matrix",
    "laplacian",
    "symmetric_eig",
    "circulant_spectrum",
    "circulant",
    "fiedler_space",
    "seriation_objective",
]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in ascending order, column ``i`` of ``eigenvectors`` paired
    with ``eigenvalues[i]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0


@dataclass(frozen=True)
class FiedlerSpace:
    """The Fiedler value, its detected multiplicity and an orthonormal basis
    of the eigenspace (columns orthogonal to the all-ones vector)."""

    value: float
    multiplicity: int
    basis: np.ndarray

    @property
    def n(self) -> int:
        return self.basis.shape[0]


def as_symmetric(M, atol: float = 0.0) -> np.ndarray:
    """Return ``M`` as a float array, checking it is square and symmetric."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    if not np.allclose(A, A.T, rtol=0.0, atol=atol):
        raise ValueError("matrix is not symmetric")
    return A


def degree_matrix(S) -> np.ndarray:
    """Diagonal of the degree matrix: the row sums of ``S``."""
    S = as_symmetric(S)
    return S.sum(axis=1)


def laplacian(S) -> np.ndarray:
    """Unnormalized graph Laplacian ``D - S``.

    The diagonal is written as ``d_i - s_ii`` from the off-diagonal row sum so
    that every row of the result sums to zero exactly.
    """
    S = as_symmetric(S)
    L = -S.copy()
    np.fill_diagonal(L, 0.0)
    np.fill_diagonal(L, -L.sum(axis=1))
    return L


def symmetric_eig(M, tol: float = 1e-12, max_sweeps: int = 100) -> SpectralDecomposition:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Sweeps over all ``(p, q)`` pairs in row order until the off-diagonal
    Frobenius norm drops below ``tol * ||M||_F``.

    Raises
    ------
    NonConvergence
        If ``max_sweeps`` sweeps do not reach the tolerance.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = as_symmetric(M).copy()
    n = A.shape[0]
    V = np.eye(n)
    scale = np.linalg.norm(A)
    target = tol * scale

    offdiag = ~np.eye(n, dtype=bool)
    sweeps = 0
    while True:
        off = np.linalg.norm(A[offdiag])
        if off <= target or scale == 0.0:
            break
        if sweeps >= max_sweeps:
            raise NonConvergence(
                f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                h = A[q, q] - A[p, p]
                g = 100.0 * abs(apq)
                if abs(h) + g == abs(h):
                    # angle below rounding: tan(phi) ~ apq / h, avoids overflow of theta**2
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                ap = A[:, p].copy()
                aq = A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                ap = A[p, :].copy()
                aq = A[q, :].copy()
                A[p, :] = c * ap - s * aq
                A[q, :] = s * ap + c * aq
                A[p, q] = A[q, p] = 0.0

                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq

    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return SpectralDecomposition(w[order], V[:, order], sweeps)


def circulant_spectrum(first_column) -> np.ndarray:
    """Eigenvalues of the circulant matrix with the given first column.

    Evaluates ``sum_j c_j * omega**(-k*j)`` for ``k = 0..n-1`` by direct
    summation, ``omega = exp(2*pi*i/n)``.
    """
    c = np.asarray(first_column, dtype=complex).ravel()
    n = c.size
    if n == 0:
        raise ValueError("first_column must be nonempty")
    kj = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-2j * np.pi * kj / n) @ c


def circulant(first_column) -> np.ndarray:
    """Dense circulant matrix whose columns are cyclic shifts of ``first_column``."""
    c = np.asarray(first_column).ravel()
    n = c.size
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return c[idx]


def _mgs(Q: np.ndarray) -> np.ndarray:
    Q = Q.copy()
    for j in range(Q.shape[1]):
        for i in range(j):
            Q[:, j] -= (Q[:, i] @ Q[:, j]) * Q[:, i]
        Q[:, j] /= np.linalg.norm(Q[:, j])
    return Q


def fiedler_space(L, cluster_tol: float = 1e-8, tol: float = 1e-12) -> FiedlerSpace:
    """Fiedler value of a Laplacian, its multiplicity and eigenspace basis.

    Eigenvalues within ``cluster_tol * max(1, |lambda_2|)`` of the second
    smallest one are counted as copies of it.

    Raises
    ------
    DisconnectedGraph
        If the second smallest eigenvalue is not above ``cluster_tol``.
    """
    L = as_symmetric(L)
    n = L.shape[0]
    if n < 2:
        raise DimensionMismatch("a Laplacian of order >= 2 is required")
    dec = symmetric_eig(L, tol=tol)
    lam = dec.eigenvalues
    value = float(lam[1])
    if value <= cluster_tol:
        raise DisconnectedGraph(f"second eigenvalue {value:.3e} is not positive")
    idx = np.flatnonzero(np.abs(lam - value) <= cluster_tol * max(1.0, abs(value)))
    basis = dec.eigenvectors[:, idx]
    basis = basis - np.outer(np.ones(n), basis.sum(axis=0) / n)
    basis = _mgs(basis)
    return FiedlerSpace(value, int(idx.size), basis)


def seriation_objective(F, x) -> float:
    """``0.5 * sum_ij f_ij (x_i - x_j)**2``, which equals ``x @ laplacian(F) @ x``."""
    F = np.asarray(F, dtype=float)
    x = np.asarray(x, dtype=float).ravel()
    if F.ndim != 2 or F.shape != (x.size, x.size):
        raise DimensionMismatch(f"F has shape {F.shape}, x has length {x.size}")
    diff = x[:, None] - x[None, :]
    return 0.5 * float(np.sum(F * diff * diff))
