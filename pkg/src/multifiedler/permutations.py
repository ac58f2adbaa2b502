"""Orderings of units: canonical forms, deduplicated sets, tie expansion and
PQ-tree frontiers.

Permutations are 1-based tuples; position ``i`` holds the unit ranked
``i``-th.  A permutation and its reverse describe the same seriation, so sets
store only the lexicographically smaller of the two.

Inside :class:`PermutationSet` each member is kept as a compact key: the
0-based ordering packed into ``bytes`` when ``n < 256`` (a tuple otherwise).
Both key types compare lexicographically and reverse with ``[::-1]``, which
is all the canonical form needs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import chain, permutations, product
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import BadParameter, ExplosionGuard, MultipleFiedler

__all__ = [
    "DEFAULT_CAP",
    "check_permutation",
    "canonicalize",
    "PermutationSet",
    "tie_blocks",
    "tie_expand",
    "seriate_simple",
    "Leaf",
    "PNode",
    "QNode",
    "pq_frontier",
]

DEFAULT_CAP = 10**7

Permutation = tuple


def check_permutation(p: Sequence[int], n: int | None = None) -> tuple:
    """Return ``p`` as a tuple after checking it is a bijection on ``1..n``."""
    t = tuple(int(i) for i in p)
    n = len(t) if n is None else n
    if len(t) != n or sorted(t) != list(range(1, n + 1)):
        raise BadParameter(f"{t} is not a permutation of 1..{n}")
    return t


def canonicalize(p: Sequence[int]) -> tuple:
    """The lexicographically smaller of ``p`` and its reverse."""
    t = tuple(p)
    r = t[::-1]
    return t if t <= r else r


def _canonical_key(key):
    r = key[::-1]
    return key if key <= r else r


class PermutationSet:
    """Set of orderings of ``n`` units, identified up to reversal.

    Insertion is idempotent and adding ``p`` after ``reverse(p)`` is a no-op.
    Iteration yields canonical 1-based tuples in lexicographic order.
    """

    def __init__(self, n: int, members: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise BadParameter("n must be positive")
        self.n = n
        self._bytes = n < 256
        self._keys: set = set()
        for p in members:
            self.add(p)

    # key encoding
    def _encode(self, p0: Iterable[int]):
        return bytes(p0) if self._bytes else tuple(p0)

    def _join(self, parts):
        return b"".join(parts) if self._bytes else tuple(chain.from_iterable(parts))

    def _decode(self, key) -> tuple:
        return tuple(i + 1 for i in key)

    def add(self, p: Sequence[int]) -> bool:
        """Insert ``p`` (1-based); return True if its class was new."""
        t = check_permutation(p, self.n)
        key = _canonical_key(self._encode(i - 1 for i in t))
        if key in self._keys:
            return False
        self._keys.add(key)
        return True

    def _add_key(self, key) -> None:
        self._keys.add(_canonical_key(key))

    def update(self, other: Union["PermutationSet", Iterable[Sequence[int]]]) -> None:
        if isinstance(other, PermutationSet):
            self._check_compatible(other)
            self._keys |= other._keys
        else:
            for p in other:
                self.add(p)

    def _check_compatible(self, other: "PermutationSet") -> None:
        if other.n != self.n:
            raise BadParameter(f"cannot combine sets of order {self.n} and {other.n}")

    def __or__(self, other: "PermutationSet") -> "PermutationSet":
        self._check_compatible(other)
        out = PermutationSet(self.n)
        out._keys = self._keys | other._keys
        return out

    def __sub__(self, other: "PermutationSet") -> "PermutationSet":
        self._check_compatible(other)
        out = PermutationSet(self.n)
        out._keys = self._keys - other._keys
        return out

    def issubset(self, other: "PermutationSet") -> bool:
        self._check_compatible(other)
        return self._keys <= other._keys

    def __le__(self, other: "PermutationSet") -> bool:
        return self.issubset(other)

    def __contains__(self, p) -> bool:
        try:
            t = check_permutation(p, self.n)
        except BadParameter:
            return False
        return _canonical_key(self._encode(i - 1 for i in t)) in self._keys

    def __len__(self) -> int:
        return len(self._keys)

    def __iter__(self) -> Iterator[tuple]:
        for key in sorted(self._keys):
            yield self._decode(key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermutationSet):
            return NotImplemented
        return self.n == other.n and self._keys == other._keys

    def __repr__(self) -> str:
        return f"PermutationSet(n={self.n}, size={len(self)})"

    def to_array(self) -> np.ndarray:
        """Members as rows of an integer array, in lexicographic order."""
        if not self._keys:
            return np.zeros((0, self.n), dtype=int)
        return np.array(list(self), dtype=int)

    def _expand_blocks(self, blocks: list[list[int]]) -> None:
        # every ordering that keeps the blocks in sequence and permutes inside each
        choices = [
            [self._encode(q) for q in permutations(b)] if len(b) > 1 else [self._encode(b)]
            for b in blocks
        ]
        keys = self._keys
        join = self._join
        for parts in product(*choices):
            key = join(parts)
            r = key[::-1]
            keys.add(key if key <= r else r)


def tie_blocks(x, tol: float | None = None) -> list[list[int]]:
    """Group the 0-based indices of ``x`` into runs of tied values.

    Entries are sorted nondecreasingly (stable); neighbors in sorted order
    closer than ``tol`` share a block, so chains of near-equal values merge.
    ``tol`` defaults to ``1e-8 * max|x|``.
    """
    x = np.asarray(x, dtype=float).ravel()
    if x.size == 0:
        raise BadParameter("x must be nonempty")
    if tol is None:
        tol = 1e-8 * float(np.max(np.abs(x)))
    if tol < 0:
        raise BadParameter("tol must be nonnegative")
    order = np.argsort(x, kind="stable")
    gaps = np.diff(x[order]) > tol
    cuts = np.flatnonzero(gaps) + 1
    return [blk.tolist() for blk in np.split(order, cuts)]


def expansion_count(blocks: list[list[int]]) -> int:
    """Number of orderings produced by permuting inside every block."""
    return math.prod(math.factorial(len(b)) for b in blocks)


def _guard(blocks, cap: int) -> None:
    count = expansion_count(blocks)
    if count > cap:
        raise ExplosionGuard(f"tie expansion would produce {count} orderings (cap {cap})")


def add_orderings(pset: PermutationSet, x, tol: float | None = None, cap: int = DEFAULT_CAP) -> None:
    """Add every nondecreasing ordering of ``x`` (ties in any order) to ``pset``."""
    blocks = tie_blocks(x, tol)
    _guard(blocks, cap)
    pset._expand_blocks(blocks)


def tie_expand(x, tol: float | None = None, cap: int = DEFAULT_CAP) -> PermutationSet:
    """All orderings that sort ``x`` nondecreasingly, with each block of tied
    entries permuted freely, as a reversal-canonical set.

    Raises
    ------
    ExplosionGuard
        If the product of the block factorials exceeds ``cap``.
    """
    x = np.asarray(x, dtype=float).ravel()
    pset = PermutationSet(x.size)
    add_orderings(pset, x, tol, cap)
    return pset


def seriate_simple(fs, tol: float | None = None, cap: int = DEFAULT_CAP) -> PermutationSet:
    """Orderings of the Fiedler vector when the Fiedler value is simple."""
    if fs.multiplicity != 1:
        raise MultipleFiedler(
            f"Fiedler value has multiplicity {fs.multiplicity}; use the enumeration methods"
        )
    return tie_expand(fs.basis[:, 0], tol, cap)


# PQ-trees


@dataclass(frozen=True)
class Leaf:
    label: int


@dataclass(frozen=True)
class PNode:
    """Internal node whose children may appear in any order."""

    children: tuple


@dataclass(frozen=True)
class QNode:
    """Internal node whose children keep their order up to reversal."""

    children: tuple


def _leaves(t) -> list[int]:
    if isinstance(t, Leaf):
        return [t.label]
    return [lab for c in t.children for lab in _leaves(c)]


def _frontier_count(t) -> int:
    if isinstance(t, Leaf):
        return 1
    k = len(t.children)
    sub = math.prod(_frontier_count(c) for c in t.children)
    if isinstance(t, PNode):
        return math.factorial(k) * sub
    return (2 if k > 1 else 1) * sub


def _frontiers(t) -> Iterator[tuple]:
    if isinstance(t, Leaf):
        yield (t.label,)
        return
    kids = [list(_frontiers(c)) for c in t.children]
    if isinstance(t, PNode):
        orders = permutations(range(len(kids)))
    else:
        idx = tuple(range(len(kids)))
        orders = [idx, idx[::-1]] if len(kids) > 1 else [idx]
    for order in orders:
        for parts in product(*(kids[i] for i in order)):
            yield tuple(chain.from_iterable(parts))


def pq_frontier(t, cap: int = DEFAULT_CAP) -> PermutationSet:
    """Every leaf order the tree admits, as a reversal-canonical set."""
    labels = _leaves(t)
    n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise BadParameter("leaf labels must be exactly 1..n")
    count = _frontier_count(t)
    if count > cap:
        raise ExplosionGuard(f"frontier has {count} orderings (cap {cap})")
    return PermutationSet(n, _frontiers(t))
