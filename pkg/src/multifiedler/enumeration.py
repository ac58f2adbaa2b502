"""Admissible orderings when the Fiedler value is double (or higher).

Every vector in a two-dimensional Fiedler plane spanned by ``v`` and ``w`` is,
up to scaling and sign, either ``w`` or ``v + gamma * w`` for some real
``gamma``.  Viewing each component ``v_i + gamma * w_i`` as a line in the
``(gamma, value)`` plane, the sorted order of the components can only change
where two lines cross.  :func:`graphical_method` therefore probes ``w``, one
point before the first crossing, every crossing, every interval midpoint and
one point after the last crossing, and expands ties at each probe.

:func:`monte_carlo_method` samples random directions instead and works for any
multiplicity, but misses orderings that only occur on measure-zero directions.

:func:`cone_feasible` and :func:`enumerate_by_oracle` decide admissibility of a
given ordering directly (a two-variable homogeneous feasibility problem) and
are used as ground truth.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import BadParameter, DegenerateBasis, TooLarge, UnsupportedMultiplicity
from .permutations import DEFAULT_CAP, PermutationSet, add_orderings, seriate_simple

__all__ = [
    "LineArrangement",
    "default_tau",
    "build_line_arrangement",
    "probe_points",
    "graphical_method",
    "monte_carlo_method",
    "cone_feasible",
    "enumerate_by_oracle",
    "seriate",
]


def default_tau(v, w) -> float:
    """``1e-9 * (max|v| + max|w|)``."""
    return 1e-9 * (float(np.max(np.abs(v))) + float(np.max(np.abs(w))))


def _scaled(tau: float, gamma: float) -> float:
    # absolute error of v + gamma*w grows with |gamma|
    return tau * max(1.0, abs(gamma))


@dataclass(frozen=True)
class LineArrangement:
    """The lines ``f_i(gamma) = v_i + gamma * w_i`` and their crossings.

    ``abscissae`` is sorted ascending; ``multiplicities[r]`` counts the
    crossing pairs merged into ``abscissae[r]``.
    """

    v: np.ndarray
    w: np.ndarray
    abscissae: np.ndarray
    multiplicities: np.ndarray
    tau: float

    @property
    def n(self) -> int:
        return self.v.size

    @property
    def m(self) -> int:
        return self.abscissae.size

    def values(self, gamma: float) -> np.ndarray:
        return self.v + gamma * self.w

    def table(self) -> list[tuple[float, int]]:
        return [(float(g), int(k)) for g, k in zip(self.abscissae, self.multiplicities)]


def _check_pair(v, w) -> tuple[np.ndarray, np.ndarray]:
    v = np.asarray(v, dtype=float).ravel()
    w = np.asarray(w, dtype=float).ravel()
    if v.size != w.size:
        raise BadParameter(f"v has length {v.size}, w has length {w.size}")
    if v.size < 2:
        raise BadParameter("at least two lines are needed")
    return v, w


def build_line_arrangement(v, w, tau: float | None = None) -> LineArrangement:
    """Crossing abscissae of all non-parallel line pairs, clustered.

    A pair is non-parallel when ``|w_i - w_j| > tau``.  Abscissae closer than
    ``tau * max(1, |gamma|)`` are merged transitively in sorted order; the
    cluster mean is stored with the number of pairs it absorbed.

    Raises
    ------
    DegenerateBasis
        If all slopes are equal within ``tau`` (no crossing exists).
    """
    v, w = _check_pair(v, w)
    if tau is None:
        tau = default_tau(v, w)
    if tau <= 0:
        raise BadParameter("tau must be positive")
    if np.ptp(w) <= tau:
        raise DegenerateBasis("all lines are parallel: w has no distinct entries")

    i, j = np.triu_indices(v.size, k=1)
    dw = w[j] - w[i]
    keep = np.abs(dw) > tau
    gam = np.sort((v[i][keep] - v[j][keep]) / dw[keep])

    breaks = np.flatnonzero(np.diff(gam) > tau * np.maximum(1.0, np.abs(gam[1:]))) + 1
    clusters = np.split(gam, breaks)
    abscissae = np.array([c.mean() for c in clusters])
    mult = np.array([c.size for c in clusters], dtype=int)
    return LineArrangement(v, w, abscissae, mult, float(tau))


def probe_points(arr: LineArrangement) -> list[tuple[np.ndarray, float]]:
    """The vectors examined by the graphical method, each paired with the
    tie tolerance used for it."""
    tau = arr.tau
    phi = arr.abscissae
    probes = [(arr.w, tau)]
    g = phi[0] - 1.0
    probes.append((arr.values(g), _scaled(tau, g)))
    for a, b in zip(phi[:-1], phi[1:]):
        mid = 0.5 * (a + b)
        probes.append((arr.values(a), _scaled(tau, a)))
        probes.append((arr.values(mid), _scaled(tau, mid)))
    g = phi[-1]
    probes.append((arr.values(g), _scaled(tau, g)))
    g = phi[-1] + 1.0
    probes.append((arr.values(g), _scaled(tau, g)))
    return probes


def _collect(n: int, probes, cap: int) -> PermutationSet:
    pset = PermutationSet(n)
    for x, tol in probes:
        add_orderings(pset, x, tol, cap)
    return pset


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("SERIATE_THREADS", "1") or 1)
    return max(1, workers)


def graphical_method(
    v, w, tau: float | None = None, cap: int = DEFAULT_CAP, workers: int | None = None
) -> PermutationSet:
    """All admissible orderings of the plane spanned by ``v`` and ``w``.

    ``workers > 1`` splits the probes across processes and merges the
    per-worker sets; the result does not depend on the split.  The default
    worker count comes from the ``SERIATE_THREADS`` environment variable.
    """
    arr = build_line_arrangement(v, w, tau)
    probes = probe_points(arr)
    nw = min(_workers(workers), len(probes))
    if nw == 1:
        return _collect(arr.n, probes, cap)
    chunks = [probes[k::nw] for k in range(nw)]
    out = PermutationSet(arr.n)
    with ProcessPoolExecutor(max_workers=nw) as pool:
        for part in pool.map(_collect, [arr.n] * nw, chunks, [cap] * nw):
            out.update(part)
    return out


def monte_carlo_method(
    basis, samples: int, seed=None, tol: float | None = None, cap: int = DEFAULT_CAP
) -> PermutationSet:
    """Orderings of ``samples`` random vectors of the Fiedler space.

    Coefficients are drawn uniformly on the unit sphere of ``R^k`` (a uniform
    angle when ``k == 2``) from ``numpy.random.default_rng(seed)``.
    """
    Q = np.asarray(basis, dtype=float)
    if Q.ndim != 2 or Q.shape[1] < 2:
        raise BadParameter("basis must be an n x k matrix with k >= 2")
    if samples < 1:
        raise BadParameter("samples must be >= 1")
    n, k = Q.shape
    rng = np.random.default_rng(seed)
    if k == 2:
        theta = rng.uniform(0.0, 2.0 * np.pi, size=samples)
        Y = np.stack([np.cos(theta), np.sin(theta)])
    else:
        Y = rng.standard_normal((k, samples))
        Y /= np.linalg.norm(Y, axis=0)
    X = Q @ Y
    pset = PermutationSet(n)
    for s in range(samples):
        add_orderings(pset, X[:, s], tol, cap)
    return pset


# exact feasibility oracle


def _independent(v, w, margin) -> bool:
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(v[i] * w[j] - v[j] * w[i]) > margin:
                return True
    return False


def _default_margin(v) -> float:
    # exact numeric types need no slack; floats (incl. mpmath) get 1e-12
    sample = v[0]
    if isinstance(sample, (int, np.integer)) or type(sample).__name__ == "Fraction":
        return 0
    return 1e-12


def cone_feasible(v: Sequence, w: Sequence, p: Sequence[int], margin=None) -> bool:
    """Is there a nonzero ``(alpha, beta)`` such that ``x = alpha*v + beta*w``
    satisfies ``x[p_1] <= x[p_2] <= ... <= x[p_n]``?

    Each consecutive pair gives a half-plane ``a*alpha + b*beta >= 0`` through
    the origin.  Their intersection is nontrivial exactly when one of the
    boundary directions ``+-(-b, a)`` satisfies every constraint, so only
    those candidates are tested.  Arithmetic follows the input entries:
    ``int``/``Fraction`` entries are decided exactly, floating entries
    (``float`` or ``mpmath.mpf``) with the slack ``margin`` (default 1e-12).

    Raises
    ------
    DegenerateBasis
        If ``v`` and ``w`` are linearly dependent.
    """
    v = list(v)
    w = list(w)
    n = len(v)
    if len(w) != n:
        raise BadParameter("v and w must have equal length")
    if margin is None:
        margin = _default_margin(v)
    if not _independent(v, w, margin):
        raise DegenerateBasis("v and w are linearly dependent")
    idx = [i - 1 for i in p]
    if sorted(idx) != list(range(n)):
        raise BadParameter(f"{tuple(p)} is not a permutation of 1..{n}")

    normals = []
    for a_, b_ in zip(idx[:-1], idx[1:]):
        a = v[b_] - v[a_]
        b = w[b_] - w[a_]
        if abs(a) > margin or abs(b) > margin:
            normals.append((a, b))
    if not normals:
        return True
    for a, b in normals:
        for ya, yb in ((-b, a), (b, -a)):
            if all(c * ya + d * yb >= -margin for c, d in normals):
                return True
    return False


def _pair_normals(v, w):
    n = len(v)
    return [[(v[j] - v[i], w[j] - w[i]) for j in range(n)] for i in range(n)]


def enumerate_by_oracle(v: Sequence, w: Sequence, n_max: int = 8, margin=None) -> PermutationSet:
    """Ground truth: test every ordering (one per reversal pair) with
    :func:`cone_feasible` and keep the feasible ones."""
    v = list(v)
    w = list(w)
    n = len(v)
    if n > n_max:
        raise TooLarge(f"n={n} exceeds n_max={n_max}")
    if margin is None:
        margin = _default_margin(v)
    if not _independent(v, w, margin):
        raise DegenerateBasis("v and w are linearly dependent")
    out = PermutationSet(n)
    if n == 1:
        out.add((1,))
        return out
    N = _pair_normals(v, w)
    for p in permutations(range(n)):
        if p[0] > p[-1]:
            continue  # feasibility is invariant under reversal (negate alpha, beta)
        normals = [N[a][b] for a, b in zip(p[:-1], p[1:])]
        normals = [(a, b) for a, b in normals if abs(a) > margin or abs(b) > margin]
        ok = not normals or any(
            all(c * ya + d * yb >= -margin for c, d in normals)
            for a, b in normals
            for ya, yb in ((-b, a), (b, -a))
        )
        if ok:
            out.add(tuple(i + 1 for i in p))
    return out


def seriate(
    fs,
    method: str = "auto",
    tau: float | None = None,
    samples: int = 1000,
    seed=None,
    tol: float | None = None,
    cap: int = DEFAULT_CAP,
    workers: int | None = None,
) -> tuple[PermutationSet, str]:
    """Pick the solver suited to the multiplicity of a Fiedler space.

    Returns the permutation set and the name of the method actually used.
    """
    k = fs.multiplicity
    if method not in ("auto", "graphical", "montecarlo", "oracle"):
        raise BadParameter(f"unknown method {method!r}")
    if k == 1:
        return seriate_simple(fs, tol, cap), "simple"
    if method == "montecarlo" or (method == "auto" and k > 2):
        return monte_carlo_method(fs.basis, samples, seed, tol, cap), "montecarlo"
    if k > 2:
        raise UnsupportedMultiplicity(f"method {method!r} needs multiplicity 2, got {k}")
    v, w = fs.basis[:, 0], fs.basis[:, 1]
    if method == "oracle":
        return enumerate_by_oracle(v, w), "oracle"
    return graphical_method(v, w, tau, cap, workers), "graphical"
