from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from binmat.catalog import k4_double_prime, k4_prime, named
from binmat.graphs import bond_matroid, complete_bipartite, cycle_matroid, prism, wheel
from binmat.matroid import from_columns
from binmat.minors import (RootedPattern, find_minor, find_rooted_minor, has_minor,
                           has_rooted_minor, is_cographic, is_graphic, is_p9_free, is_regular,
                           is_triangle, witness_is_valid)
from conftest import matroids
from oracles import all_minors, brute_isomorphic


def brute_has_minor(M, N, T=(), root=()):
    for C, D, H in all_minors(M):
        if (C | D) & set(T):
            continue
        if len(H) == len(N) and H.rank == N.rank and brute_isomorphic(H, N, T, root):
            return True
    return False


def test_examples():
    P9 = named("P9")
    assert not has_minor(named("Y16"), P9)
    assert has_minor(P9, P9)
    assert not has_minor(named("X10"), P9)
    assert is_regular(named("R10"))
    assert not is_regular(named("F7"))
    assert is_graphic(cycle_matroid(wheel(4)))
    K33 = bond_matroid(complete_bipartite(3, 3))
    assert is_regular(K33) and not is_graphic(K33) and is_cographic(K33)
    assert not is_cographic(named("F7"))
    assert is_p9_free(named("Y16"))


def test_witness_replays():
    for host, target in (("P9*", "F7"), ("Y16", "X10"), ("X12", "F7*"), ("P9", "P9")):
        M, N = named(host), named(target)
        w = find_minor(M, N)
        assert w is not None and witness_is_valid(M, N, w)
        assert witness_is_valid(M.dual(), N.dual(), type(w)(w.deleted, w.contracted))


def test_rooted_examples():
    K4 = named("M(K4)")
    root = frozenset(K4.triangles()[0])
    pat = RootedPattern(K4, root)
    for name in ("F7", "P9*", "M*(K3,3)", "X10"):
        M = named(name)
        for T in M.triangles():
            assert has_rooted_minor(M, T, pat)
    K33 = bond_matroid(complete_bipartite(3, 3))
    kpp = k4_double_prime()
    assert all(not has_rooted_minor(K33, T, kpp) for T in K33.triangles())
    Pr = cycle_matroid(prism())
    assert all(not has_rooted_minor(Pr, T, kpp) for T in Pr.triangles())
    not_tri = next(S for S in (K33.elements[i:i + 3] for i in range(7)) if not is_triangle(K33, S))
    with pytest.raises(ValueError):
        has_rooted_minor(K33, not_tri, kpp)


def test_rooted_pattern_validation():
    K4 = named("M(K4)")
    with pytest.raises(ValueError):
        RootedPattern(K4, frozenset(K4.elements[:2]))
    assert len(k4_prime().target) == 7 and len(k4_double_prime().target) == 8


def test_rooted_witness_valid():
    M = bond_matroid(wheel(5))
    kpp = k4_double_prime()
    for T in M.triangles():
        w = find_rooted_minor(M, T, kpp)
        assert w is not None
        assert witness_is_valid(M, kpp.target, w, T, kpp.root)
        assert not (w.contracted | w.deleted) & set(T)


targets = st.sampled_from([
    from_columns([1, 2, 3], 2, ["a", "b", "c"]),                  # triangle
    from_columns([1, 2, 3, 3], 2, ["a", "b", "c", "d"]),          # triangle with a parallel mate
    from_columns([1, 2, 4, 7], 3, ["a", "b", "c", "d"]),          # 4-circuit
    from_columns([1, 2, 3, 4, 5, 6], 3, list("abcdef")),          # M(K4)
    from_columns([1, 1], 1, ["a", "b"]),                          # parallel pair
])


@settings(max_examples=40)
@given(matroids(max_size=6, min_size=2), targets)
def test_has_minor_matches_oracle(M, N):
    assert has_minor(M, N) == brute_has_minor(M, N)
    w = find_minor(M, N)
    if w is not None:
        assert witness_is_valid(M, N, w)


@settings(max_examples=30)
@given(matroids(max_size=6, min_size=3), targets)
def test_minor_duality(M, N):
    assert has_minor(M, N) == has_minor(M.dual(), N.dual())


@settings(max_examples=25)
@given(matroids(max_rank=3, max_size=7, min_size=4))
def test_rooted_matches_oracle(M):
    tris = M.triangles()
    if not tris:
        return
    K4 = named("M(K4)")
    pat = RootedPattern(K4, frozenset(K4.triangles()[0]))
    T = tris[0]
    got = has_rooted_minor(M, T, pat)
    assert got == brute_has_minor(M, K4, T, pat.root)
    if got:
        assert has_minor(M, K4)  # rooted implies free


def test_transitivity_on_catalog():
    chain = ["Y16", "X13", "X10", "F7"]
    for a, b in zip(chain, chain[1:]):
        assert has_minor(named(a), named(b))
    assert has_minor(named("Y16"), named("F7"))
    assert has_minor(named("X12"), named("F7*")) and has_minor(named("Y16"), named("F7*"))


def _rank3_hosts():
    """Every column set drawn from PG(2,2), optionally with one doubled point."""
    for mask in range(1, 1 << 7):
        cols = [v for v in range(1, 8) if mask >> (v - 1) & 1]
        if len(cols) < 4:
            continue
        yield from_columns(cols, 3, [f"p{v}" for v in cols])
        yield from_columns(cols + [cols[0]], 3, [f"p{v}" for v in cols] + ["q"])


def test_exhaustive_rank3_against_oracle():
    K4 = named("M(K4)")
    tri_pp = from_columns([1, 2, 3, 3], 2, ["a", "b", "c", "d"])
    pat = RootedPattern(K4, frozenset(K4.triangles()[0]))
    positives = rooted_pos = 0
    for M in _rank3_hosts():
        if M.rank < 3:
            continue
        for N in (K4, tri_pp):
            got = has_minor(M, N)
            assert got == brute_has_minor(M, N)
            positives += got
        for T in M.triangles()[:2]:
            got = has_rooted_minor(M, T, pat)
            assert got == brute_has_minor(M, K4, T, pat.root)
            rooted_pos += got
    assert positives > 50 and rooted_pos > 20


def test_rank4_samples_against_oracle(seed):
    import random

    rnd = random.Random(seed)
    K4 = named("M(K4)")
    seen = 0
    for _ in range(40):
        cols = rnd.sample(range(1, 16), 7)
        M = from_columns(cols, 4, [f"c{i}" for i in range(7)])
        if M.rank < 4:
            continue
        assert has_minor(M, K4) == brute_has_minor(M, K4)
        seen += 1
    assert seen > 10


def test_splitter_pruning_agrees_with_general_search():
    from binmat.minors import _Target, _search, clear_caches

    hosts = ["P9*", "P9", "X10", "X11", "Y11", "S8", "Z4", "Z4*", "M*(K3,3)", "R10", "starfish(0,3,1)"]
    targets = ["F7", "F7*", "P9", "M(K4)", "W4", "S8", "AG(3,2)", "M*(K3,3)"]
    checked = 0
    for h in hosts:
        M = named(h)
        for t in targets:
            N = named(t)
            if len(M) < len(N) or M.rank < N.rank or M.corank < N.corank:
                continue
            tg = _Target(N)
            if not tg.splitter_ok:
                continue
            clear_caches()
            pruned = _search(M, frozenset(), tg, frozenset(), frozenset(), True) is not None
            clear_caches()
            tg = _Target(N)
            full = _search(M, frozenset(), tg, frozenset(), frozenset(), False) is not None
            assert pruned == full, (h, t)
            checked += 1
    assert checked > 30
