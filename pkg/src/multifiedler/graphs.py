"""Case-study data matrices, the similarity product and Robinson-form checks.

Data matrices are ``n x m`` nonnegative arrays whose rows are the units to
be ordered.  All generators below return small integer (0/1) arrays.
"""
from __future__ import annotations

from itertools import permutations

import numpy as np

from .errors import BadParameter, TooLarge
from .linalg import as_symmetric

__all__ = [
    "bidiagonal_block",
    "gen_star",
    "gen_modified_star",
    "gen_cycle",
    "gen_petersen",
    "gen_family",
    "FAMILIES",
    "similarity",
    "is_r_matrix",
    "r_form_witness",
    "is_pre_r_bruteforce",
]

FAMILIES = ("star", "modified_star", "cycle", "petersen")


def bidiagonal_block(k: int, ell: int) -> np.ndarray:
    """``k x (k - ell)`` lower bidiagonal 0/1 matrix (ones on the diagonal and
    the subdiagonal)."""
    B = np.zeros((k, k - ell), dtype=int)
    j = np.arange(k - ell)
    B[j, j] = 1
    B[j + 1, j] = 1
    return B


def gen_star(n: int) -> np.ndarray:
    """Data matrix ``[e^T; I]`` of size ``n x (n-1)``; its similarity is the
    adjacency of the star graph centered at unit 1."""
    if n < 3:
        raise BadParameter("star requires n >= 3")
    return np.vstack([np.ones((1, n - 1), dtype=int), np.eye(n - 1, dtype=int)])


def gen_modified_star(n: int) -> np.ndarray:
    """Star data matrix with ``n - 4`` extra types, each shared by two
    consecutive non-central units (``n x (2n - 5)``)."""
    if n < 5:
        raise BadParameter("modified star requires n >= 5")
    top = np.hstack([np.ones((1, n - 1), dtype=int), np.zeros((1, n - 4), dtype=int)])
    bottom = np.hstack([np.eye(n - 1, dtype=int), bidiagonal_block(n - 1, 3)])
    return np.vstack([top, bottom])


def gen_cycle(n: int) -> np.ndarray:
    """``n x n`` data matrix where unit ``i`` shares one type with ``i + 1``
    and the last unit closes the loop with the first."""
    if n < 3:
        raise BadParameter("cycle requires n >= 3")
    b = np.zeros((1, n), dtype=int)
    b[0, 0] = b[0, -1] = 1
    return np.vstack([bidiagonal_block(n, 1).T, b])


def _skip_incidence(n: int, skip: int) -> np.ndarray:
    # column i is the edge {i, i + skip} (mod n)
    E = np.zeros((n, n), dtype=int)
    i = np.arange(n)
    E[i, i] = 1
    E[(i + skip) % n, i] = 1
    return E


def gen_petersen(n: int, skip: int = 1) -> np.ndarray:
    """``2n x 3n`` data matrix of the generalized Petersen graph GPG(n, skip).

    Columns are the outer cycle edges, the spokes, and the inner skip-cycle
    edges.  For ``skip == 1`` this is ``[E^T I 0; 0 I E^T]`` with ``E`` the
    cycle data matrix.  Only ``skip == 1`` has closed-form spectral results.
    """
    if n < 5:
        raise BadParameter("generalized Petersen graph requires n >= 5")
    if not 1 <= skip < n / 2:
        raise BadParameter("skip must satisfy 1 <= skip < n/2")
    outer = gen_cycle(n).T
    inner = outer if skip == 1 else _skip_incidence(n, skip)
    Z = np.zeros((n, n), dtype=int)
    I = np.eye(n, dtype=int)
    return np.block([[outer, I, Z], [Z, I, inner]])


def gen_family(family: str, n: int, skip: int = 1) -> np.ndarray:
    """Dispatch on a family name from :data:`FAMILIES`."""
    if family == "star":
        return gen_star(n)
    if family == "modified_star":
        return gen_modified_star(n)
    if family == "cycle":
        return gen_cycle(n)
    if family == "petersen":
        return gen_petersen(n, skip)
    raise BadParameter(f"unknown family {family!r}; expected one of {FAMILIES}")


def similarity(A) -> np.ndarray:
    """``A @ A.T``: entry ``(i, j)`` counts the types shared by units i and j."""
    A = np.asarray(A)
    if A.ndim != 2:
        raise BadParameter("data matrix must be two-dimensional")
    return A @ A.T


def is_r_matrix(S, tol: float = 0.0) -> bool:
    """True if every row is nonincreasing moving away from the diagonal.

    Comparisons are non-strict; ``tol`` lets float data pass small
    violations and defaults to exact comparison.
    """
    S = as_symmetric(S)
    n = S.shape[0]
    if n < 2:
        return True
    step = S[:, 1:] - S[:, :-1]  # step[i, j] = s[i, j+1] - s[i, j]
    i, j = np.indices(step.shape)
    right = step[j >= i]
    left = step[j < i]
    return bool(np.all(right <= tol) and np.all(left >= -tol))


def r_form_witness(S, n_max: int = 9, tol: float = 0.0):
    """First simultaneous row/column permutation (1-based) putting ``S`` in
    R-form, or ``None`` if there is none.  Exhaustive over ``n!`` orders."""
    S = as_symmetric(S)
    n = S.shape[0]
    if n > n_max:
        raise TooLarge(f"order {n} exceeds n_max={n_max}")
    for p in permutations(range(n)):
        if p[0] > p[-1]:
            continue  # the reverse order was already tried
        idx = np.array(p)
        if is_r_matrix(S[np.ix_(idx, idx)], tol):
            return tuple(i + 1 for i in p)
    return None


def is_pre_r_bruteforce(S, n_max: int = 9, tol: float = 0.0) -> bool:
    """True if some simultaneous permutation of rows and columns yields an
    R-matrix."""
    S = as_symmetric(S)
    if S.shape[0] <= 1:
        return True
    return r_form_witness(S, n_max, tol) is not None
