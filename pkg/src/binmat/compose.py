"""Direct sum, 2-sum, parallel connection across a triangle, 3-sum, the
cographic gluing of graphs, and the starfish builder.

Label policy: elements of the shared triangle keep the left operand's labels;
a right-side label that clashes with one already taken gets ``'`` appended
(repeatedly, until unique).  The same policy names graph edges in
:func:`glue_graphs_matching`, so the two constructions line up label for label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import GF2Matrix
from .graphs import Graph, bond_matroid, k3n_variant
from .matroid import BinaryMatroid, Label, direct_sum_raw, label_key
from .minors import is_triangle


def fresh_labels(labels: Iterable[Label], taken: Iterable[Label]) -> dict:
    """Map each label to itself, or to a primed copy when it clashes with ``taken``."""
    taken = set(taken)
    out = {}
    for e in labels:
        new = e
        while new in taken:
            new = f"{new}'"
        out[e] = new
        taken.add(new)
    return out


def direct_sum(M1: BinaryMatroid, M2: BinaryMatroid) -> BinaryMatroid:
    return direct_sum_raw(M1, M2.relabel(fresh_labels(M2.elements, M1.elements)))


def _pivot_rows(M: BinaryMatroid, pivots: Sequence[Label]) -> list[int]:
    """Rows of an equivalent representation in which ``pivots[k]`` is the unit column e_k."""
    rows = list(M.rep.rows)
    for k, lab in enumerate(pivots):
        bit = 1 << M.index(lab)
        hit = next((i for i in range(k, len(rows)) if rows[i] & bit), None)
        if hit is None:
            raise ValueError(f"{lab!r} is dependent on the earlier pivots")
        rows[k], rows[hit] = rows[hit], rows[k]
        for i in range(len(rows)):
            if i != k and rows[i] & bit:
                rows[i] ^= rows[k]
    return rows


def _glue(left: BinaryMatroid, right: BinaryMatroid, lpiv: Sequence[Label],
          rpiv: Sequence[Label], shared: dict) -> BinaryMatroid:
    """Identify the first ``len(lpiv)`` coordinates of both sides.

    ``shared`` maps right labels that become left labels; all other right
    elements are appended after the left elements.
    """
    s = len(lpiv)
    lrows = _pivot_rows(left, lpiv)
    rrows = _pivot_rows(right, rpiv)
    n1 = len(left)
    rest = [e for e in right.elements if e not in shared]
    names = fresh_labels(rest, left.elements)
    ridx = [right.index(e) for e in rest]
    nrows = left.rank + right.rank - s
    rows = list(lrows) + [0] * (right.rank - s)
    for i, rr in enumerate(rrows):
        target = i if i < s else left.rank + i - s
        v = 0
        for k, j in enumerate(ridx):
            if (rr >> j) & 1:
                v |= 1 << (n1 + k)
        rows[target] |= v
    rep = GF2Matrix(nrows, n1 + len(rest), tuple(rows))
    return BinaryMatroid(list(left.elements) + [names[e] for e in rest], rep)


def right_label_map(left: BinaryMatroid, right: BinaryMatroid, shared: dict) -> dict:
    """Where each right element ends up in a composition."""
    rest = [e for e in right.elements if e not in shared]
    out = dict(fresh_labels(rest, left.elements))
    out.update(shared)
    return out


def two_sum(M1: BinaryMatroid, M2: BinaryMatroid, p1: Label, p2: Label) -> BinaryMatroid:
    """2-sum along basepoints ``p1`` and ``p2``: parallel connection, then delete the basepoint."""
    for M, p in ((M1, p1), (M2, p2)):
        if len(M) < 3:
            raise ValueError("2-sum operands need at least 3 elements")
        if M.rank_of([p]) == 0:
            raise ValueError(f"basepoint {p!r} is a loop")
        if p in M.coloops():
            raise ValueError(f"basepoint {p!r} is a coloop")
    P = _glue(M1, M2, [p1], [p2], {p2: p1})
    return P.delete([p1])


@dataclass(frozen=True)
class TriangleGlue:
    """Two matroids and a bijection between a triangle of each."""

    left: BinaryMatroid
    right: BinaryMatroid
    pairing: tuple  # ((left element, right element), ...) for the three triangle elements

    def __post_init__(self):
        if len(self.pairing) != 3:
            raise ValueError("pairing must match exactly three elements")
        if not is_triangle(self.left, self.t_left):
            raise ValueError("left side of the pairing is not a triangle")
        if not is_triangle(self.right, self.t_right):
            raise ValueError("right side of the pairing is not a triangle")
        # in a binary triangle each element is the sum of the other two, so any
        # bijection of triangles respects the dependency; check it anyway
        if len(set(self.t_left)) != 3 or len(set(self.t_right)) != 3:
            raise ValueError("pairing is not a bijection")

    @classmethod
    def of(cls, left, t_left: Sequence[Label], right, t_right: Sequence[Label]) -> TriangleGlue:
        return cls(left, right, tuple(zip(t_left, t_right)))

    @property
    def t_left(self) -> tuple:
        return tuple(a for a, _ in self.pairing)

    @property
    def t_right(self) -> tuple:
        return tuple(b for _, b in self.pairing)

    @property
    def shared(self) -> dict:
        return {b: a for a, b in self.pairing}

    def right_map(self) -> dict:
        return right_label_map(self.left, self.right, self.shared)


def parallel_connection_triangle(g: TriangleGlue) -> BinaryMatroid:
    """Generalized parallel connection P_T(left, right) across the paired triangle."""
    return _glue(g.left, g.right, g.t_left[:2], g.t_right[:2], g.shared)


def three_sum_defect(g: TriangleGlue) -> str | None:
    """Why ``g`` is not a valid 3-sum, or None."""
    if len(g.left) < 7 or len(g.right) < 7:
        return "3-sum operands need at least 7 elements each"
    for side, T in ((g.left, g.t_left), (g.right, g.t_right)):
        if any(c <= frozenset(T) for c in side.cocircuits(3)):
            return "the shared triangle contains a cocircuit of one operand"
    return None


def three_sum(g: TriangleGlue) -> BinaryMatroid:
    """P_T(left, right) minus T.  Both operands need at least seven elements and
    T may contain no cocircuit of either side."""
    why = three_sum_defect(g)
    if why:
        raise ValueError(why)
    return parallel_connection_triangle(g).delete(g.t_left)


def cocircuits_of_pc(g: TriangleGlue) -> list[frozenset]:
    """Cocircuits of P_T(left, right) predicted from those of the two sides."""
    T = frozenset(g.t_left)
    rmap = g.right_map()
    left = [frozenset(c) for c in g.left.cocircuits()]
    right = [frozenset(rmap[e] for e in c) for c in g.right.cocircuits()]
    out = {c for c in left if not c & T} | {c for c in right if not c & T}
    by_trace: dict[frozenset, list] = {}
    for c in right:
        if len(c & T) == 2:
            by_trace.setdefault(c & T, []).append(c)
    for c1 in left:
        if len(c1 & T) == 2:
            for c2 in by_trace.get(c1 & T, ()):
                out.add(c1 | c2)
    return sorted(out, key=lambda c: (len(c), sorted(map(str, c))))


def cocircuit_delta_family(g: TriangleGlue) -> tuple[list[frozenset], list[frozenset]]:
    """For the 3-sum: (one-sided cocircuits avoiding T, symmetric differences C1 ^ C2)."""
    T = frozenset(g.t_left)
    rmap = g.right_map()
    left = [frozenset(c) for c in g.left.cocircuits()]
    right = [frozenset(rmap[e] for e in c) for c in g.right.cocircuits()]
    avoid = sorted({c for c in left + right if not c & T}, key=lambda c: sorted(map(str, c)))
    deltas = set()
    for c1 in left:
        if len(c1 & T) == 2:
            for c2 in right:
                if c2 & T == c1 & T:
                    deltas.add(c1 ^ c2)
    return avoid, sorted(deltas, key=lambda c: sorted(map(str, c)))


# -- graphs ------------------------------------------------------------------------

def glue_graphs_matching(G1: Graph, u, G2: Graph, v, pairing: dict) -> Graph:
    """Delete ``u`` and ``v`` and join their neighbourhoods by a matching.

    ``pairing`` maps each neighbour of ``u`` in G1 to a neighbour of ``v`` in G2.
    The matching edge at ``u_i`` takes the label of the G1 edge ``u u_i``.
    """
    if G1.degree(u) != 3 or G2.degree(v) != 3:
        raise ValueError("both gluing vertices must have degree three")
    nu, nv = G1.neighbors(u), G2.neighbors(v)
    if len(set(nu)) != 3 or len(set(nv)) != 3:
        raise ValueError("gluing vertices must have three distinct neighbours")
    if set(pairing) != set(nu) or set(pairing.values()) != set(nv):
        raise ValueError("pairing must match the neighbours of u to those of v")
    H1 = G1.delete_vertex(u)
    H2 = G2.delete_vertex(v)
    vmap = fresh_labels([x for x in H2.vertices], H1.vertices)
    right_edges = [lab for lab in (e[2] for e in G2.edges) if lab not in G2.edges_at(v)]
    emap = fresh_labels(right_edges, [e[2] for e in G1.edges])
    edges = list(H1.edges)
    for a, b, lab in H2.edges:
        edges.append((vmap[a], vmap[b], emap[lab]))
    for ui in nu:
        lab = next(l for a, b, l in G1.edges if {a, b} == {u, ui})
        edges.append((ui, vmap[pairing[ui]], lab))
    return Graph(tuple(H1.vertices) + tuple(vmap[x] for x in H2.vertices), tuple(edges))


def vertex_glue(G1: Graph, u, G2: Graph, v, pairing: dict) -> TriangleGlue:
    """The TriangleGlue of bond matroids that :func:`glue_graphs_matching` realizes."""
    M1, M2 = bond_matroid(G1), bond_matroid(G2)
    pairs = []
    for ui, vi in pairing.items():
        e1 = next(l for a, b, l in G1.edges if {a, b} == {u, ui})
        e2 = next(l for a, b, l in G2.edges if {a, b} == {v, vi})
        pairs.append((e1, e2))
    return TriangleGlue(M1, M2, tuple(pairs))


# -- starfishes ---------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class StarfishSpec:
    """Base graph K_{3,n} plus ``extra`` edges, with ``t`` Fano legs."""

    extra: int
    n: int
    t: int

    def validate(self) -> None:
        if self.extra not in (0, 1, 2, 3):
            raise ValueError("extra must be in 0..3")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.n == 2 and self.extra < 2:
            raise ValueError("K_{3,2} with fewer than two extra edges is not 3-connected")
        if not 1 <= self.t <= self.n:
            raise ValueError("need 1 <= t <= n Fano legs")

    @property
    def size(self) -> int:
        return 3 * self.n + self.extra + self.t

    @property
    def rank(self) -> int:
        return 2 * self.n + self.extra - 2 + self.t

    def to_json(self) -> dict:
        return {"extra": self.extra, "n": self.n, "t": self.t}


def starfish_base(spec: StarfishSpec) -> tuple[Graph, BinaryMatroid]:
    G = k3n_variant(spec.n, spec.extra)
    return G, bond_matroid(G, name=f"M*(K3,{spec.n}{'+' * spec.extra})")


def fano_leg(i: int) -> tuple[BinaryMatroid, tuple]:
    from .catalog import named

    F = named("F7").relabel(lambda e: f"f{i}.{e}")
    return F, tuple(sorted(F.triangles()[0], key=label_key))


def attach_fanos(N: BinaryMatroid, triangles: Sequence[Iterable[Label]]) -> BinaryMatroid:
    """3-sum a fresh Fano plane onto each of the given disjoint triangles, in order."""
    tris = [tuple(sorted(t, key=label_key)) for t in triangles]
    seen: set = set()
    for t in tris:
        if seen & set(t):
            raise ValueError("starfish triangles must be pairwise disjoint")
        seen |= set(t)
    M = N
    for i, T in enumerate(tris, 1):
        F, FT = fano_leg(i)
        M = three_sum(TriangleGlue.of(M, T, F, FT))
    return M


def build_starfish(spec: StarfishSpec, vertices: Sequence | None = None) -> BinaryMatroid:
    """Starfish on M*(K_{3,n} + extra) with legs on the stars of ``vertices``
    (default: the first ``t`` vertices of the large colour class)."""
    spec.validate()
    G, N = starfish_base(spec)
    if vertices is None:
        vertices = [f"u{j}" for j in range(1, spec.t + 1)]
    if len(vertices) != spec.t:
        raise ValueError("need exactly t attachment vertices")
    tris = []
    for x in vertices:
        if G.degree(x) != 3:
            raise ValueError(f"vertex {x!r} does not have degree three")
        tris.append(G.edges_at(x))
    M = attach_fanos(N, tris)
    return M.with_name(f"starfish({spec.extra},{spec.n},{spec.t})")


def disjoint_triangle_families(N: BinaryMatroid, t: int) -> list[tuple[frozenset, ...]]:
    """All sets of ``t`` pairwise disjoint triangles of N."""
    tris = sorted((frozenset(x) for x in N.triangles()), key=lambda x: sorted(map(str, x)))
    out: list = []

    def rec(start, chosen, used):
        if len(chosen) == t:
            out.append(tuple(chosen))
            return
        for i in range(start, len(tris)):
            if not tris[i] & used:
                rec(i + 1, chosen + [tris[i]], used | tris[i])

    rec(0, [], frozenset())
    return out


def starfish_variants(spec: StarfishSpec, any_triangles: bool = False) -> list[BinaryMatroid]:
    """One representative per isomorphism class over the allowed leg positions.

    By default legs go on stars of any ``t`` vertices of the large colour class.
    With ``any_triangles`` every family of ``t`` disjoint triangles of the base is
    tried; this can leave the starfish class (for extra=1, n=3 a leg on the star of
    ``v3`` gives a matroid with a P9-minor).
    """
    from itertools import combinations

    from .canonical import canonical_key

    spec.validate()
    G, N = starfish_base(spec)
    if any_triangles:
        families = disjoint_triangle_families(N, spec.t)
    else:
        large = [f"u{j}" for j in range(1, spec.n + 1)]
        families = [tuple(G.edges_at(x) for x in c) for c in combinations(large, spec.t)]
    seen: dict = {}
    for fam in families:
        M = attach_fanos(N, fam).with_name(f"starfish({spec.extra},{spec.n},{spec.t})")
        seen.setdefault(canonical_key(M), M)
    return list(seen.values())
