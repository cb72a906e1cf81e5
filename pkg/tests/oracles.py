"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the library's algorithms beyond the BinaryMatroid
container itself; ranks are recomputed by plain Gaussian elimination on 0/1
lists, isomorphisms by trying every bijection, minors by listing every
contraction/deletion pair.
"""

from __future__ import annotations

from itertools import combinations, permutations


def gf2_rank_lists(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def columns_as_lists(M) -> list[list[int]]:
    """Column j of M's representation as a 0/1 list over the rows."""
    return [[(row >> j) & 1 for row in M.rep.rows] for j in range(len(M))]


def rank_of(M, S) -> int:
    cols = columns_as_lists(M)
    idx = [M.elements.index(e) for e in S]
    if not idx:
        return 0
    return gf2_rank_lists([cols[j] for j in idx])


def all_circuits(M) -> set[frozenset]:
    E = list(M.elements)
    out = set()
    for k in range(1, len(E) + 1):
        for S in combinations(E, k):
            if rank_of(M, S) == k - 1 and all(rank_of(M, set(S) - {e}) == k - 1 for e in S):
                out.add(frozenset(S))
    return out


def all_cocircuits(M) -> set[frozenset]:
    """Minimal sets meeting every basis (complements of hyperplanes)."""
    E = list(M.elements)
    r = rank_of(M, E)
    out = set()
    for k in range(1, len(E) + 1):
        for S in combinations(E, k):
            rest = [e for e in E if e not in S]
            if rank_of(M, rest) < r and not any(c < frozenset(S) for c in out):
                out.add(frozenset(S))
    return out


def brute_isomorphic(M1, M2, root1=(), root2=()) -> bool:
    """Try every bijection; compare all ranks of all subsets."""
    if len(M1) != len(M2):
        return False
    E1 = list(M1.elements)
    E2 = list(M2.elements)
    rk1 = {frozenset(S): rank_of(M1, S) for k in range(len(E1) + 1) for S in combinations(E1, k)}
    rk2 = {frozenset(S): rank_of(M2, S) for k in range(len(E2) + 1) for S in combinations(E2, k)}
    r1, r2 = set(root1), set(root2)
    for perm in permutations(E2):
        f = dict(zip(E1, perm))
        if {f[e] for e in r1} != r2:
            continue
        if all(rk2[frozenset(f[e] for e in S)] == v for S, v in rk1.items()):
            return True
    return False


def all_minors(M):
    """Every minor M / C \\ D with C independent, as (C, D, minor)."""
    E = list(M.elements)
    for k in range(len(E) + 1):
        for C in combinations(E, k):
            if rank_of(M, C) != k:
                continue
            rest = [e for e in E if e not in C]
            N = M.contract(C)
            for j in range(len(rest) + 1):
                for D in combinations(rest, j):
                    yield frozenset(C), frozenset(D), N.delete(D)


def brute_tau(M) -> float:
    E = list(M.elements)
    r = rank_of(M, E)
    best = float("inf")
    for k in range(1, len(E)):
        for X in combinations(E, k):
            Y = [e for e in E if e not in X]
            lam = rank_of(M, X) + rank_of(M, Y) - r
            if min(len(X), len(Y)) >= lam + 1:
                best = min(best, lam + 1)
    return best


def subset_ranks(cols: list[int]) -> list[int]:
    """Rank of every subset of the column list, by growing spans one column at a time."""
    n = len(cols)
    spans: list = [None] * (1 << n)
    spans[0] = frozenset({0})
    ranks = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        sp = spans[rest]
        v = cols[low]
        if v in sp:
            spans[mask], ranks[mask] = sp, ranks[rest]
        else:
            spans[mask] = sp | {x ^ v for x in sp}
            ranks[mask] = ranks[rest] + 1
    return ranks


def tau_from_columns(cols: list[int]) -> float:
    """Same answer as brute_tau, working on raw column vectors."""
    n = len(cols)
    rk = subset_ranks(cols)
    full = (1 << n) - 1
    r = rk[full]
    best = float("inf")
    for X in range(1, full):
        k = bin(X).count("1")
        lam = rk[X] + rk[full ^ X] - r
        if min(k, n - k) >= lam + 1:
            best = min(best, lam + 1)
    return best
