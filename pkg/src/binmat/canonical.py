"""Canonical keys and isomorphism for binary matroids.

Two binary matroids on n elements are isomorphic iff some permutation of the
elements carries one row space (cocycle space) onto the other, i.e. iff the
two binary codes are permutation-equivalent.  The code is encoded as a
two-coloured bipartite graph (element vertices, nonzero-codeword vertices,
support incidence) and canonically labelled with nauty.  The side with the
smaller dimension (M or M*) is used, decided by (rank, |E|) alone, so keys stay
comparable.

An optional *distinguished* set of elements gets its own colour class; this is
how rooted searches keep a triangle fixed setwise.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable

import pynauty

from .matroid import BinaryMatroid, Label, popcount

KEY_VERSION = 1


@dataclass(frozen=True, order=True)
class CanonicalKey:
    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    @property
    def rank(self) -> int:
        return self.data[1]

    @property
    def size(self) -> int:
        return self.data[2]

    def __str__(self) -> str:
        return self.hex()


def _code_graph(M: BinaryMatroid, distinguished: frozenset | None):
    n = len(M)
    use_dual = M.rank > M.corank
    words = [w for w in (M.dual() if use_dual else M).cocycle_masks() if w]
    adjacency = {}
    for k, w in enumerate(words):
        v = n + k
        adjacency[v] = [i for i in range(n) if (w >> i) & 1]
    if distinguished:
        marked = {M.index(e) for e in distinguished}
        cells = [set(range(n)) - marked, marked]
    else:
        cells = [set(range(n))]
    cells = [c for c in cells if c]
    if words:
        cells.append(set(range(n, n + len(words))))
    g = pynauty.Graph(n + len(words), directed=False, adjacency_dict=adjacency,
                      vertex_coloring=cells)
    return g, use_dual, len(words)


def _header(M: BinaryMatroid, use_dual: bool, nd: int) -> bytes:
    return struct.pack(">BBBBB", KEY_VERSION, M.rank, len(M), nd, int(use_dual))


def canonical_key(M: BinaryMatroid, distinguished: Iterable[Label] | None = None) -> CanonicalKey:
    """Byte key equal for two matroids iff they are isomorphic (respecting the
    distinguished set setwise, when given)."""
    dset = frozenset(distinguished) if distinguished else frozenset()
    use_dual = M.rank > M.corank
    head = _header(M, use_dual, len(dset))
    if len(M) == 0 or min(M.rank, M.corank) == 0:
        # all loops or all coloops: shape alone decides
        return CanonicalKey(head)
    g, _, _ = _code_graph(M, dset)
    return CanonicalKey(head + pynauty.certificate(g))


def canonical_order(M: BinaryMatroid, distinguished: Iterable[Label] | None = None) -> list[Label]:
    """Elements listed in canonical order (the same for isomorphic inputs up to automorphism)."""
    dset = frozenset(distinguished) if distinguished else frozenset()
    if len(M) == 0 or min(M.rank, M.corank) == 0:
        return sorted(M.elements, key=lambda e: (e in dset, str(e)))
    g, _, _ = _code_graph(M, dset)
    lab = pynauty.canon_label(g)
    return [M.elements[v] for v in lab if v < len(M)]


def isomorphism(M1: BinaryMatroid, M2: BinaryMatroid,
                distinguished1: Iterable[Label] | None = None,
                distinguished2: Iterable[Label] | None = None) -> dict | None:
    """An element bijection E(M1) -> E(M2) that is an isomorphism, or None."""
    d1 = frozenset(distinguished1) if distinguished1 else frozenset()
    d2 = frozenset(distinguished2) if distinguished2 else frozenset()
    if canonical_key(M1, d1) != canonical_key(M2, d2):
        return None
    o1 = canonical_order(M1, d1)
    o2 = canonical_order(M2, d2)
    phi = dict(zip(o1, o2))
    if not is_isomorphism(M1, M2, phi):
        raise AssertionError("canonical orders disagree with equal keys")
    return phi


def is_isomorphism(M1: BinaryMatroid, M2: BinaryMatroid, phi: dict) -> bool:
    """Check that ``phi`` maps the row space of M1 onto that of M2."""
    if len(M1) != len(M2) or M1.rank != M2.rank:
        return False
    if sorted(map(str, phi.values())) != sorted(map(str, M2.elements)) or len(phi) != len(M1):
        return False
    image = M2.reorder([phi[e] for e in M1.elements])
    return image.relabel(dict(zip(image.elements, M1.elements))) == M1


def invariants(M: BinaryMatroid) -> tuple:
    """Cheap isomorphism invariants used only for fast rejection."""
    loops = sum(1 for c in M.cols if c == 0)
    par = tuple(sorted(len(p) for p in M.parallel_classes()))
    small = [popcount(m) for m in M.circuit_masks(4)]
    spectrum = tuple(small.count(k) for k in range(1, 5))
    return (len(M), M.rank, loops, par, spectrum)


def are_isomorphic(M1: BinaryMatroid, M2: BinaryMatroid) -> bool:
    if (len(M1), M1.rank) != (len(M2), M2.rank):
        return False
    if invariants(M1) != invariants(M2):
        return False
    return canonical_key(M1) == canonical_key(M2)
