from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binmat.catalog import named
from binmat.gf2 import GF2Matrix
from binmat.graphs import Graph, complete_graph, cycle_matroid
from binmat.matroid import (BinaryMatroid, empty_matroid, from_columns, from_reduced, from_text,
                            to_text)
from conftest import matroids
from oracles import all_circuits, all_cocircuits, rank_of


def rank_function(M):
    E = sorted(M.elements, key=str)
    return {frozenset(S): M.rank_of(S) for k in range(len(E) + 1) for S in combinations(E, k)}


def test_fano_from_reduced():
    D = GF2Matrix.from_lists(["1101", "1011", "0111"])
    F = from_reduced(D)
    assert (F.rank, len(F)) == (3, 7)
    assert sorted(F.cols) == list(range(1, 8))


def test_empty_matroid():
    E = from_reduced(GF2Matrix(0, 0, ()))
    assert (E.rank, len(E)) == (0, 0)
    assert empty_matroid() == E


def test_from_reduced_errors():
    D = GF2Matrix.from_lists(["11"])
    with pytest.raises(ValueError):
        from_reduced(D, ["a"], ["a", "b"])
    with pytest.raises(ValueError):
        from_reduced(D, ["a", "b"], ["c", "d"])


def test_rank_of_examples():
    F = named("F7")
    assert F.rank_of([]) == 0
    assert all(F.rank_of(t) == 2 for t in F.triangles())
    Y = named("Y16")
    assert Y.rank_of(Y.elements) == 11 == rank_of(Y, Y.elements)


def test_duals():
    F = named("F7")
    assert (F.dual().rank, len(F.dual())) == (4, 7)
    P = named("P9")
    assert rank_function(P.dual().dual()) == rank_function(P)
    X = named("X15").dual()
    assert (X.rank, len(X)) == (4, 15)


def test_delete_contract_examples():
    F = named("F7")
    d = F.delete(["a"])
    assert (d.rank, len(d)) == (3, 6)
    L = from_columns([0, 1, 2, 3], 2, ["z", "a", "b", "c"])
    assert L.contract(["z"]) == L.delete(["z"])
    for e in F.elements:
        assert rank_function(F.contract([e]).dual()) == rank_function(F.dual().delete([e]))
        assert rank_function(F.delete([e]).dual()) == rank_function(F.dual().contract([e]))


def test_closure_examples():
    F = named("F7")
    assert F.closure(F.elements) == F.ground_set
    for t in F.triangles():
        assert F.closure(t) == t
    L = from_columns([0, 1, 0], 1, ["x", "y", "z"])
    assert L.closure([]) == {"x", "z"}


def test_simplify_examples():
    F = named("F7")
    assert F.simplify() == F
    K = complete_graph(4)
    G = Graph(K.vertices, K.edges + (("k1", "k2", "extra"),))
    from binmat.canonical import canonical_key

    assert canonical_key(cycle_matroid(G).simplify()) == canonical_key(cycle_matroid(K))
    M = from_columns([1, 1, 2], 2, ["a", "b", "c"])
    assert len(M.simplify()) == 2


def test_circuit_examples():
    F = named("F7")
    tris = F.circuits(3)
    assert len(tris) == 7 and all(len(c) == 3 for c in tris)
    assert all(len(c) == 4 for c in F.cocircuits())
    assert set(F.cocircuits()) == all_cocircuits(F)
    L = from_columns([0, 1], 1, ["z", "a"])
    assert frozenset({"z"}) in L.circuits()


def test_triangle_free_examples():
    assert named("R10").triangles() == []
    assert named("Y16").triangles() == []
    assert len(named("F7").triangles()) == 7


def test_text_roundtrip_and_errors():
    for name in ("F7", "Y16", "P9"):
        M = named(name)
        back = from_text(to_text(M))
        assert back == M and back.name == M.name
        assert from_text(to_text(M, full=True)) == M
    with pytest.raises(ValueError, match="line 2"):
        from_text("reduced 1 2\n1x\n")
    with pytest.raises(ValueError):
        from_text("reduced 2 2\n11\n")
    with pytest.raises(ValueError):
        from_text("11\n")


def test_relabel_reorder_extend():
    F = named("F7")
    G = F.relabel({"a": "A"})
    assert "A" in G.ground_set and G.rank_of(["A", "b"]) == 2
    R = F.reorder(list(reversed(F.elements)))
    assert rank_function(R) == rank_function(F)
    E = F.extend(0, "z")
    assert "z" in E.loops()
    with pytest.raises(ValueError):
        F.extend(1, "a")
    C = F.coextend(1, "w")
    assert "w" not in C.loops() and C.rank == 4


@given(matroids())
def test_rank_matches_oracle(M):
    for k in range(len(M) + 1):
        for S in combinations(M.elements, k):
            assert M.rank_of(S) == rank_of(M, S)


@given(matroids())
def test_duality_identity(M):
    D = M.dual()
    E = set(M.elements)
    assert D.rank == len(M) - M.rank
    for k in range(len(M) + 1):
        for S in combinations(M.elements, k):
            assert D.rank_of(S) == len(S) - M.rank + M.rank_of(E - set(S))


@given(matroids(max_size=6))
def test_circuits_match_oracle_and_orthogonality(M):
    circ = set(M.circuits())
    assert circ == all_circuits(M)
    for c in circ:
        for d in M.cocircuits():
            assert len(c & d) % 2 == 0


@given(matroids(min_size=2), st.data())
def test_minor_commutation(M, data):
    E = list(M.elements)
    A = data.draw(st.sets(st.sampled_from(E)))
    B = data.draw(st.sets(st.sampled_from([e for e in E if e not in A]))) if len(A) < len(E) else set()
    left = M.delete(A).contract(B)
    right = M.contract(B).delete(A)
    assert rank_function(left) == rank_function(right)
    # contraction rank formula
    for k in range(len(left) + 1):
        for S in combinations(left.elements, k):
            assert left.rank_of(S) == M.rank_of(set(S) | B) - M.rank_of(B)


@given(matroids())
def test_simplify_has_no_loops_or_parallel_pairs(M):
    S = M.simplify()
    assert not S.loops()
    assert len(set(S.cols)) == len(S.cols)
    assert S.is_simple()


@given(matroids())
def test_full_row_rank_and_equality(M):
    assert M.rep.nrows == M.rank
    assert M.dual().dual() == M
    assert hash(M.dual().dual()) == hash(M)


def test_constructor_errors():
    with pytest.raises(ValueError):
        BinaryMatroid(["a", "a"], GF2Matrix.identity(2))
    with pytest.raises(ValueError):
        BinaryMatroid(["a"], GF2Matrix.identity(2))
