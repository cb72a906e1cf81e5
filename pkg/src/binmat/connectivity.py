"""Connectivity function, k-separations, Tutte connectivity and internal 4-connectivity.

All exact.  The full rank function is tabulated once per matroid: for a binary
matroid with row space C of dimension r, the number of codewords whose support
avoids S is ``2**(r - r(S))``, so a subset-sum transform over the codewords
gives every rank at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matroid import BinaryMatroid, popcount

MAX_TABLE_ELEMENTS = 24


@dataclass(frozen=True)
class Separation:
    """A certified k-separation ``(side_x, side_y)`` with ``lam = lambda(side_x)``."""

    side_x: frozenset
    side_y: frozenset
    lam: int
    order: int

    def check(self, M: BinaryMatroid) -> bool:
        if self.side_x | self.side_y != M.ground_set or self.side_x & self.side_y:
            return False
        if connectivity(M, self.side_x) != self.lam:
            return False
        return min(len(self.side_x), len(self.side_y)) >= self.order and self.lam < self.order

    def to_json(self) -> dict:
        return {
            "X": sorted(map(str, self.side_x)),
            "Y": sorted(map(str, self.side_y)),
            "lambda": self.lam,
            "k": self.order,
        }


def connectivity(M: BinaryMatroid, X) -> int:
    """lambda_M(X) = r(X) + r(E - X) - r(M)."""
    m = M.mask(X)
    return M.rank_mask(m) + M.rank_mask(M.full_mask & ~m) - M.rank


def _zeta_count(words: list[int], n: int) -> np.ndarray:
    """f[T] = number of words that are subsets of T."""
    f = np.zeros(1 << n, dtype=np.int32)
    f[np.asarray(words, dtype=np.int64)] += 1
    for i in range(n):
        v = f.reshape(-1, 2, 1 << i)
        v[:, 1, :] += v[:, 0, :]
    return f


def _popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int16)


def rank_table(M: BinaryMatroid) -> np.ndarray:
    """Array ``t`` with ``t[mask] = r(mask)`` for every subset of E."""
    n = len(M)
    if n > MAX_TABLE_ELEMENTS:
        raise ValueError(f"rank table limited to {MAX_TABLE_ELEMENTS} elements")
    if M.rank <= M.corank:
        f = _zeta_count(M.cocycle_masks(), n)
        # avoid(S) = f[E - S]; E - S is the reversed index
        return (M.rank - np.log2(f[::-1]).astype(np.int16)).astype(np.int16)
    D = M.dual()
    f = _zeta_count(D.cocycle_masks(), n)
    dual_rank = (D.rank - np.log2(f[::-1]).astype(np.int16)).astype(np.int16)
    # r(S) = |S| + r*(E - S) - r*(E)
    return (_popcounts(n) + dual_rank[::-1] - D.rank).astype(np.int16)


def connectivity_table(M: BinaryMatroid) -> np.ndarray:
    t = rank_table(M)
    return (t + t[::-1] - M.rank).astype(np.int16)


def _lex_smallest(masks, n: int) -> int:
    return min(masks, key=lambda m: tuple(i for i in range(n) if (m >> i) & 1))


def _separation(M: BinaryMatroid, mask: int, lam: int, k: int) -> Separation:
    X = M.labels(mask)
    return Separation(X, M.ground_set - X, lam, k)


def _small_separation(M: BinaryMatroid) -> Separation | None:
    """Cheap witnesses of order 1 or 2 from loops, coloops, parallel and series pairs."""
    n = len(M)
    if n < 2:
        return None
    for i, c in enumerate(M.cols):
        if c == 0:
            return _separation(M, 1 << i, 0, 1)
    D = M.dual()
    for i, c in enumerate(D.cols):
        if c == 0:
            return _separation(M, 1 << i, 0, 1)
    if n < 4:
        return None
    for N in (M, D):
        seen: dict[int, int] = {}
        for i, c in enumerate(N.cols):
            if c in seen:
                pair = (1 << seen[c]) | (1 << i)
                lam = connectivity(M, M.labels(pair))
                return _separation(M, pair, lam, lam + 1)
            seen[c] = i
    return None


def find_separation(M: BinaryMatroid, k: int) -> Separation | None:
    """Some j-separation with j <= k, choosing the smallest j and then the
    lexicographically smallest side X; ``None`` if M is (k+1)-connected."""
    n = len(M)
    if n < 2:
        return None
    lam = connectivity_table(M)
    sizes = _popcounts(n)
    minside = np.minimum(sizes, n - sizes)
    for j in range(1, k + 1):
        hits = np.nonzero((lam < j) & (minside >= j))[0]
        if hits.size:
            m = _lex_smallest((int(h) for h in hits), n)
            return _separation(M, m, int(lam[m]), j)
    return None


def tau(M: BinaryMatroid) -> float:
    """Tutte connectivity: least k with a k-separation, or ``math.inf``."""
    n = len(M)
    if n < 2:
        return math.inf
    lam = connectivity_table(M)
    sizes = _popcounts(n)
    minside = np.minimum(sizes, n - sizes)
    ok = lam + 1 <= minside
    if not ok.any():
        return math.inf
    return int((lam[ok] + 1).min())


def is_connected(M: BinaryMatroid) -> bool:
    return find_separation(M, 1) is None


def is_three_connected(M: BinaryMatroid) -> bool:
    if _small_separation(M) is not None:
        return False
    return find_separation(M, 2) is None


def non_minimal_3_separation(M: BinaryMatroid) -> Separation | None:
    """A 3-separation with both sides of size >= 4 (lexicographically smallest X)."""
    n = len(M)
    if n < 8:
        return None
    lam = connectivity_table(M)
    sizes = _popcounts(n)
    hits = np.nonzero((lam <= 2) & (sizes >= 4) & (n - sizes >= 4))[0]
    if not hits.size:
        return None
    m = _lex_smallest((int(h) for h in hits), n)
    return _separation(M, m, int(lam[m]), 3)


def internal_4_witness(M: BinaryMatroid) -> Separation | None:
    """``None`` iff M is internally 4-connected; otherwise a separation showing it is not."""
    sep = _small_separation(M)
    if sep is not None and sep.order <= 2:
        return sep
    sep = find_separation(M, 2)
    if sep is not None:
        return sep
    return non_minimal_3_separation(M)


def is_internally_4_connected(M: BinaryMatroid) -> bool:
    return internal_4_witness(M) is None


def three_separation_sides_minimal(M: BinaryMatroid) -> bool:
    """Every 3-separation has a side that is a triangle or a triad."""
    n = len(M)
    lam = connectivity_table(M)
    sizes = _popcounts(n)
    tri = {frozenset(t) for t in M.triangles()} | {frozenset(t) for t in M.triads()}
    for h in np.nonzero((lam <= 2) & (sizes >= 3) & (n - sizes >= 3))[0]:
        m = int(h)
        side = m if popcount(m) == 3 else (M.full_mask & ~m)
        if popcount(side) != 3 or M.labels(side) not in tri:
            return False
    return True
