"""Small multigraphs and their cycle and bond matroids."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf2 import GF2Matrix
from .matroid import BinaryMatroid


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # (u, v, label); multi-edges and loops allowed

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex")
        labels = [e[2] for e in self.edges]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate edge label")
        for u, v, lab in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge {lab!r} has an undeclared endpoint")

    @classmethod
    def from_edges(cls, pairs, labels=None) -> Graph:
        pairs = list(pairs)
        verts = []
        for u, v in pairs:
            for x in (u, v):
                if x not in verts:
                    verts.append(x)
        if labels is None:
            labels = [f"{u}{v}" for u, v in pairs]
        return cls(tuple(verts), tuple((u, v, lab) for (u, v), lab in zip(pairs, labels)))

    def edge(self, label):
        for e in self.edges:
            if e[2] == label:
                return e
        raise KeyError(label)

    def degree(self, v) -> int:
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def edges_at(self, v) -> list:
        return [lab for u, w, lab in self.edges if v in (u, w)]

    def neighbors(self, v) -> list:
        out = []
        for u, w, _ in self.edges:
            if u == v and w != v:
                out.append(w)
            elif w == v and u != v:
                out.append(u)
        return out

    def delete_vertex(self, v) -> Graph:
        return Graph(tuple(x for x in self.vertices if x != v),
                     tuple(e for e in self.edges if v not in e[:2]))

    def delete_edges(self, labels) -> Graph:
        labels = set(labels)
        return Graph(self.vertices, tuple(e for e in self.edges if e[2] not in labels))

    def contract_edges(self, labels) -> Graph:
        g = self
        for lab in labels:
            u, v, _ = g.edge(lab)
            rest = tuple(e for e in g.edges if e[2] != lab)
            if u != v:
                rest = tuple((u if a == v else a, u if b == v else b, c) for a, b, c in rest)
                g = Graph(tuple(x for x in g.vertices if x != v), rest)
            else:
                g = Graph(g.vertices, rest)
        return g

    def relabel_edges(self, mapping) -> Graph:
        return Graph(self.vertices, tuple((u, v, mapping.get(lab, lab)) for u, v, lab in self.edges))

    def is_simple(self) -> bool:
        seen = set()
        for u, v, _ in self.edges:
            if u == v:
                return False
            key = frozenset((u, v))
            if key in seen:
                return False
            seen.add(key)
        return True


def cycle_matroid(G: Graph, name: str | None = None) -> BinaryMatroid:
    vidx = {v: i for i, v in enumerate(G.vertices)}
    cols = []
    for u, v, _ in G.edges:
        cols.append(0 if u == v else (1 << vidx[u]) | (1 << vidx[v]))
    rep = GF2Matrix.from_columns(cols, len(G.vertices))
    return BinaryMatroid([lab for _, _, lab in G.edges], rep, name)


def bond_matroid(G: Graph, name: str | None = None) -> BinaryMatroid:
    return cycle_matroid(G).dual().with_name(name)


# -- named graphs --------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(combinations([f"k{i}" for i in range(1, n + 1)], 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges([(f"a{i}", f"b{j}") for i in range(1, m + 1) for j in range(1, n + 1)])


def wheel(n: int) -> Graph:
    """Hub ``h`` joined to a rim cycle ``r0 .. r{n-1}``; spokes ``s{i}``, rim edges ``c{i}``."""
    if n < 2:
        raise ValueError("wheel needs at least 2 spokes")
    pairs, labels = [], []
    for i in range(n):
        pairs.append(("h", f"r{i}"))
        labels.append(f"s{i}")
    for i in range(n):
        pairs.append((f"r{i}", f"r{(i + 1) % n}"))
        labels.append(f"c{i}")
    return Graph.from_edges(pairs, labels)


def prism() -> Graph:
    pairs = [("p1", "p2"), ("p2", "p3"), ("p1", "p3"),
             ("q1", "q2"), ("q2", "q3"), ("q1", "q3"),
             ("p1", "q1"), ("p2", "q2"), ("p3", "q3")]
    return Graph.from_edges(pairs)


def prism_plus() -> Graph:
    """Prism with one extra edge between two non-adjacent vertices."""
    g = prism()
    return Graph(g.vertices, g.edges + (("p1", "q2", "p1q2"),))


def cube() -> Graph:
    vs = [format(i, "03b") for i in range(8)]
    pairs = [(a, b) for a, b in combinations(vs, 2) if sum(x != y for x, y in zip(a, b)) == 1]
    return Graph.from_edges([(f"x{a}", f"x{b}") for a, b in pairs])


def wagner() -> Graph:
    """The Moebius ladder on 8 vertices."""
    pairs = [(f"w{i}", f"w{(i + 1) % 8}") for i in range(8)]
    pairs += [(f"w{i}", f"w{i + 4}") for i in range(4)]
    return Graph.from_edges(pairs)


EXTRA_EDGES = (("v1", "v2"), ("v1", "v3"), ("v2", "v3"))


def k3n_variant(n: int, extra: int) -> Graph:
    """K_{3,n} plus ``extra`` edges inside the colour class of size three.

    The large class is ``u1 .. un`` and the small class ``v1, v2, v3``; edge
    labels concatenate the endpoint names.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if extra not in (0, 1, 2, 3):
        raise ValueError("extra must be 0, 1, 2 or 3")
    pairs = [(f"u{j}", f"v{i}") for j in range(1, n + 1) for i in range(1, 4)]
    pairs += list(EXTRA_EDGES[:extra])
    return Graph.from_edges(pairs)
