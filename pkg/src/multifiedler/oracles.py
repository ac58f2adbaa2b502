"""Closed-form spectra, Fiedler bases and permutation counts for the three
case-study families (modified star, cycle, generalized Petersen GPG(n, 1)).

These are test oracles: they are derived by hand, never from the numerical
pipeline they are used to check.
"""
from __future__ import annotations

from math import cos, factorial, pi, sin

import mpmath
import numpy as np

from .errors import BadParameter
from .linalg import circulant_spectrum

__all__ = [
    "naive_count",
    "modified_star_count",
    "star_spectrum",
    "modified_star_fiedler_basis",
    "cycle_fiedler_basis",
    "cycle_fiedler_basis_mp",
    "cycle_fiedler_value",
    "petersen_fiedler_basis",
    "petersen_fiedler_value",
    "petersen_lower_bound",
    "TABLE_COUNTS",
]

# admissible permutation counts reported for the graphical method
TABLE_COUNTS = {
    "modified_star": {5: 18, 6: 72, 7: 360, 8: 2160, 9: 15120, 10: 120960},
    "cycle": {4: 8, 5: 15, 6: 30, 7: 49, 8: 88, 9: 135, 10: 230},
    "petersen": {5: 5600, 6: 48000, 7: 192640, 8: 1546240, 9: 5967360},
}


def naive_count(n: int, k: int) -> int:
    """``(k+1)! (n-k)!``: the count one gets by assuming the Fiedler basis is
    a set of coordinate vectors."""
    if not 1 <= k < n:
        raise BadParameter("need 1 <= k < n")
    return factorial(k + 1) * factorial(n - k)


def modified_star_count(n: int) -> int:
    """Admissible orderings of the modified star: ``3 (n-2)!``."""
    if n < 5:
        raise BadParameter("modified star requires n >= 5")
    return 3 * factorial(n - 2)


def star_spectrum(n: int) -> list[tuple[int, int]]:
    """Laplacian spectrum of the star as ``(eigenvalue, multiplicity)`` pairs."""
    if n < 3:
        raise BadParameter("star requires n >= 3")
    return [(0, 1), (1, n - 2), (n, 1)]


def modified_star_fiedler_basis(n: int) -> np.ndarray:
    """Unnormalized integer eigenvectors for the eigenvalue 1 of the modified
    star Laplacian.

    Columns ``(0, -1, ..., -1, n-3, 0)`` and ``(0, -1, ..., -1, n-2)``; they
    span the Fiedler plane but are not orthogonal.
    """
    if n < 5:
        raise BadParameter("modified star requires n >= 5")
    Q = np.zeros((n, 2), dtype=int)
    Q[1 : n - 2, 0] = -1
    Q[n - 2, 0] = n - 3
    Q[1 : n - 1, 1] = -1
    Q[n - 1, 1] = n - 2
    return Q


def cycle_fiedler_basis(n: int) -> np.ndarray:
    """Real Fourier pair ``cos(2 pi j/n)``, ``sin(2 pi j/n)``, ``j = 0..n-1``."""
    if n < 3:
        raise BadParameter("cycle requires n >= 3")
    t = 2.0 * np.pi * np.arange(n) / n
    return np.column_stack([np.cos(t), np.sin(t)])


def cycle_fiedler_basis_mp(n: int, dps: int = 50) -> tuple[list, list]:
    """The same pair evaluated in ``mpmath`` at ``dps`` digits, for the exact
    feasibility oracle."""
    if n < 3:
        raise BadParameter("cycle requires n >= 3")
    with mpmath.workdps(dps):
        t = [2 * mpmath.pi * j / n for j in range(n)]
        return [mpmath.cos(a) for a in t], [mpmath.sin(a) for a in t]


def cycle_fiedler_value(n: int) -> float:
    """``2 - 2 cos(2 pi / n)``."""
    if n < 3:
        raise BadParameter("cycle requires n >= 3")
    return 2.0 - 2.0 * cos(2.0 * pi / n)


def petersen_fiedler_value(n: int) -> float:
    """``sigma - 1`` with ``sigma`` the second smallest eigenvalue of
    ``circ(3, -1, 0, ..., 0, -1)``, taken from its circulant spectrum."""
    if n < 5:
        raise BadParameter("generalized Petersen graph requires n >= 5")
    col = np.zeros(n)
    col[0], col[1], col[-1] = 3.0, -1.0, -1.0
    sigma = np.sort(circulant_spectrum(col).real)
    return float(sigma[1] - 1.0)


def petersen_fiedler_basis(n: int) -> np.ndarray:
    """Cycle Fiedler pair stacked twice: ``[w1; w1]`` and ``[w2; w2]``."""
    if n < 5:
        raise BadParameter("generalized Petersen graph requires n >= 5")
    return np.vstack([cycle_fiedler_basis(n)] * 2)


def petersen_lower_bound(n: int) -> int:
    """``2**n * n``: the generic-direction orderings of GPG(n, 1)."""
    if n < 4:
        raise BadParameter("need n >= 4")
    return 2**n * n
