from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from binmat.canonical import (are_isomorphic, canonical_key, invariants, is_isomorphism,
                              isomorphism)
from binmat.catalog import ALIASES, named, names
from binmat.gf2 import GF2Matrix
from binmat.graphs import bond_matroid, cycle_matroid, k3n_variant, wheel
from binmat.matroid import BinaryMatroid
from conftest import matroids
from oracles import brute_isomorphic


def shuffled(M: BinaryMatroid, rnd: random.Random) -> BinaryMatroid:
    order = list(M.elements)
    rnd.shuffle(order)
    R = M.reorder(order)
    rows = list(R.rep.rows)
    for i in range(1, len(rows)):
        if rnd.random() < 0.5:
            rows[i] ^= rows[0]
    rnd.shuffle(rows)
    return BinaryMatroid(R.elements, GF2Matrix(R.rep.nrows, R.rep.ncols, tuple(rows)))


def test_examples():
    F = named("F7")
    R = F.relabel({e: e.upper() for e in F.elements})
    assert canonical_key(R) == canonical_key(F)
    assert canonical_key(F) != canonical_key(F.dual())
    assert canonical_key(named("X15")) == canonical_key(named("PG(3,2)*"))
    assert not are_isomorphic(named("Z4"), named("Z4*"))
    P = named("P9")
    assert are_isomorphic(P, P.dual().dual())
    assert are_isomorphic(bond_matroid(k3n_variant(2, 2)), cycle_matroid(wheel(4)))


def test_key_header_and_hex():
    k = canonical_key(named("Y16"))
    assert (k.rank, k.size) == (11, 16)
    assert bytes.fromhex(k.hex()) == k.data


def test_catalog_keys_distinct_unless_aliased():
    seen = {}
    for n in names():
        if n in ALIASES:
            continue
        M = named(n)
        seen.setdefault(canonical_key(M).data, []).append(n)
    dupes = [v for v in seen.values() if len(v) > 1]
    # genuine coincidences only: X15 is PG(3,2)*, and the prism is M*(K5\e)
    assert {frozenset(d) for d in dupes} == {
        frozenset({"X15", "PG(3,2)*"}),
        frozenset({"Prism", "M*(K5\\e)"}),
        frozenset({"M*(Prism)", "M(K5\\e)"}),
    }


@settings(max_examples=30)
@given(matroids(max_size=6), matroids(max_size=6))
def test_key_equality_matches_brute_force(M1, M2):
    if (len(M1), M1.rank) != (len(M2), M2.rank):
        assert canonical_key(M1) != canonical_key(M2)
        return
    assert (canonical_key(M1) == canonical_key(M2)) == brute_isomorphic(M1, M2)


@given(matroids(max_size=7), st.randoms(use_true_random=False))
def test_key_invariant_under_relabel_and_row_ops(M, rnd):
    S = shuffled(M, rnd)
    assert canonical_key(S) == canonical_key(M)
    phi = isomorphism(M, S)
    assert phi is not None and is_isomorphism(M, S, phi)
    assert invariants(S) == invariants(M)


@given(matroids(min_size=1, max_size=6), st.data())
def test_delete_and_add_back(M, data):
    e = data.draw(st.sampled_from(M.elements))
    D = M.delete([e])
    if D.rank < M.rank:
        return  # coloop: nothing to add back in the same rank
    target = M.reorder(list(D.elements) + [e])
    back = [v for v in range(1 << D.rank) if D.extend(v, e) == target]
    assert len(back) == 1
    assert canonical_key(D.extend(back[0], e)) == canonical_key(M)


@settings(max_examples=25)
@given(matroids(min_size=3, max_size=6), st.data())
def test_rooted_keys_match_brute_force(M, data):
    R1 = data.draw(st.sets(st.sampled_from(M.elements), max_size=2))
    R2 = data.draw(st.sets(st.sampled_from(M.elements), min_size=len(R1), max_size=len(R1)))
    same = canonical_key(M, R1) == canonical_key(M, R2)
    assert same == brute_isomorphic(M, M, R1, R2)


def test_catalog_pairs_against_brute_force():
    small = [n for n in names() if len(named(n)) <= 8]
    for a in small:
        for b in small:
            A, B = named(a), named(b)
            if (len(A), A.rank) == (len(B), B.rank) and a < b:
                assert are_isomorphic(A, B) == brute_isomorphic(A, B), (a, b)
