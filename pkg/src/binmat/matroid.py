"""The BinaryMatroid value type and its basic queries.

A matroid is a tuple of element labels plus a full-row-rank GF(2) matrix whose
column ``i`` represents ``elements[i]``.  Everything else (duals, minors,
circuits) is derived from that matrix.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Sequence

from .gf2 import GF2Matrix, rank, rank_of_vectors, reduce_vector, rref, span

Label = Hashable


def label_key(e: Label):
    """Sort key that orders ints before strings and never compares across types."""
    if isinstance(e, int):
        return (0, e, "")
    return (1, 0, str(e))


def popcount(x: int) -> int:
    return bin(x).count("1")


class BinaryMatroid:
    """Immutable binary matroid.

    ``rep`` always has full row rank; dependent rows are discarded at
    construction.  A matrix that already has full row rank is kept verbatim,
    which keeps text round trips bit-exact.
    """

    def __init__(self, elements: Iterable[Label], rep: GF2Matrix, name: str | None = None):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ValueError("duplicate element labels")
        if rep.ncols != len(elements):
            raise ValueError(f"{len(elements)} labels for {rep.ncols} columns")
        if rank(rep) != rep.nrows:
            red, piv = rref(rep)
            rep = red.select_rows(range(len(piv)))
        self.elements = elements
        self.rep = rep
        self.name = name
        self._index = {e: i for i, e in enumerate(elements)}

    # -- basic shape -----------------------------------------------------
    @property
    def rank(self) -> int:
        return self.rep.nrows

    @property
    def corank(self) -> int:
        return len(self.elements) - self.rep.nrows

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def ground_set(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def cols(self) -> tuple[int, ...]:
        return tuple(self.rep.columns())

    @cached_property
    def _rref(self) -> tuple[GF2Matrix, list[int]]:
        return rref(self.rep)

    def __repr__(self) -> str:
        tag = f"{self.name}: " if self.name else ""
        return f"<BinaryMatroid {tag}|E|={len(self)} r={self.rank}>"

    def __eq__(self, other) -> bool:
        # same labels in the same order and the same row space
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.elements == other.elements and self._rref[0].rows == other._rref[0].rows

    def __hash__(self) -> int:
        return hash((self.elements, self._rref[0].rows))

    def with_name(self, name: str | None) -> BinaryMatroid:
        return BinaryMatroid(self.elements, self.rep, name)

    # -- label/mask plumbing ---------------------------------------------
    def index(self, e: Label) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise KeyError(f"unknown element {e!r}") from None

    def mask(self, S: Iterable[Label]) -> int:
        m = 0
        for e in S:
            m |= 1 << self.index(e)
        return m

    def labels(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in range(len(self.elements)) if (mask >> i) & 1)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    # -- rank ------------------------------------------------------------
    def rank_mask(self, mask: int) -> int:
        cols = self.cols
        return rank_of_vectors(cols[i] for i in range(len(cols)) if (mask >> i) & 1)

    def rank_of(self, S: Iterable[Label]) -> int:
        return self.rank_mask(self.mask(S))

    def is_independent(self, S: Iterable[Label]) -> bool:
        S = list(S)
        return self.rank_of(S) == len(S)

    def closure(self, S: Iterable[Label]) -> frozenset:
        basis: list[int] = []
        for i in _bits(self.mask(S)):
            c = reduce_vector(self.cols[i], basis)
            if c:
                basis.append(c)
                basis.sort(reverse=True)
        return frozenset(e for e, c in zip(self.elements, self.cols) if reduce_vector(c, basis) == 0)

    # -- duality and minors ----------------------------------------------
    def dual(self) -> BinaryMatroid:
        red, piv = self._rref
        n = len(self.elements)
        pivset = set(piv)
        rows = []
        for j in range(n):
            if j in pivset:
                continue
            v = 1 << j
            for i, p in enumerate(piv):
                if (red.rows[i] >> j) & 1:
                    v |= 1 << p
            rows.append(v)
        return BinaryMatroid(self.elements, GF2Matrix(len(rows), n, tuple(rows)),
                             _dual_name(self.name))

    def delete(self, S: Iterable[Label]) -> BinaryMatroid:
        return self._delete_mask(self.mask(S))

    def restrict(self, S: Iterable[Label]) -> BinaryMatroid:
        return self._delete_mask(self.full_mask & ~self.mask(S))

    def contract(self, S: Iterable[Label]) -> BinaryMatroid:
        return self._contract_mask(self.mask(S))

    def minor(self, contract: Iterable[Label] = (), delete: Iterable[Label] = ()) -> BinaryMatroid:
        return self.contract(contract).delete(delete)

    def _delete_mask(self, mask: int) -> BinaryMatroid:
        keep = [i for i in range(len(self.elements)) if not (mask >> i) & 1]
        return BinaryMatroid([self.elements[i] for i in keep], self.rep.select_columns(keep))

    def _contract_mask(self, mask: int) -> BinaryMatroid:
        rows = list(self.rep.rows)
        used: list[int] = []
        for j in _bits(mask):
            bit = 1 << j
            hit = next((i for i in range(len(rows)) if i not in used and rows[i] & bit), None)
            if hit is None:
                continue  # j already spanned by the contracted set: a loop now
            p = rows[hit]
            for i in range(len(rows)):
                if i != hit and rows[i] & bit:
                    rows[i] ^= p
            used.append(hit)
        keep_rows = [rows[i] for i in range(len(rows)) if i not in used]
        keep = [i for i in range(len(self.elements)) if not (mask >> i) & 1]
        m = GF2Matrix(len(keep_rows), len(self.elements), tuple(keep_rows)).select_columns(keep)
        return BinaryMatroid([self.elements[i] for i in keep], m)

    def relabel(self, mapping) -> BinaryMatroid:
        """Rename elements via a dict (missing keys unchanged) or a callable."""
        f = mapping if callable(mapping) else (lambda e: mapping.get(e, e))
        return BinaryMatroid([f(e) for e in self.elements], self.rep, self.name)

    def reorder(self, order: Sequence[Label]) -> BinaryMatroid:
        idx = [self.index(e) for e in order]
        if sorted(idx) != list(range(len(self.elements))):
            raise ValueError("order must be a permutation of the ground set")
        return BinaryMatroid(list(order), self.rep.select_columns(idx), self.name)

    def extend(self, vector: int, label: Label) -> BinaryMatroid:
        """Add one element whose column is ``vector`` (bit ``i`` = row ``i``)."""
        if label in self._index:
            raise ValueError(f"label {label!r} already present")
        if vector >> self.rank:
            raise ValueError("extension vector longer than the rank")
        n = len(self.elements)
        rows = tuple(r | (((vector >> i) & 1) << n) for i, r in enumerate(self.rep.rows))
        return BinaryMatroid(self.elements + (label,), GF2Matrix(self.rank, n + 1, rows))

    def coextend(self, vector: int, label: Label) -> BinaryMatroid:
        """Dual of extending the dual by ``vector`` (over the dual's rows)."""
        return self.dual().extend(vector, label).dual()

    # -- local structure -------------------------------------------------
    def loops(self) -> frozenset:
        return frozenset(e for e, c in zip(self.elements, self.cols) if c == 0)

    def coloops(self) -> frozenset:
        return self.dual().loops()

    def parallel_classes(self) -> list[frozenset]:
        """Classes of non-loop elements with equal columns, largest-first is not implied."""
        groups: dict[int, list] = {}
        for e, c in zip(self.elements, self.cols):
            if c:
                groups.setdefault(c, []).append(e)
        return [frozenset(g) for g in groups.values()]

    def is_simple(self) -> bool:
        cs = [c for c in self.cols]
        return 0 not in cs and len(set(cs)) == len(cs)

    def is_cosimple(self) -> bool:
        return self.dual().is_simple()

    def simplify(self) -> BinaryMatroid:
        keep = []
        for cls in self.parallel_classes():
            keep.append(min(cls, key=label_key))
        keep_set = set(keep)
        return self.restrict([e for e in self.elements if e in keep_set])

    def cosimplify(self) -> BinaryMatroid:
        return self.dual().simplify().dual()

    # -- circuits --------------------------------------------------------
    def circuit_masks(self, max_size: int | None = None) -> list[int]:
        n = len(self.elements)
        cap = n if max_size is None else min(max_size, n)
        cols = self.cols
        by_subsets = sum(comb(n, s) for s in range(1, cap + 1))
        out = []
        if by_subsets < (1 << self.corank):
            for s in range(1, cap + 1):
                for combo in combinations(range(n), s):
                    acc = 0
                    for i in combo:
                        acc ^= cols[i]
                    if acc == 0 and rank_of_vectors(cols[i] for i in combo) == s - 1:
                        out.append(sum(1 << i for i in combo))
        else:
            for c in span(list(self.dual().rep.rows)):
                k = popcount(c)
                if c and k <= cap and self.rank_mask(c) == k - 1:
                    out.append(c)
        out.sort(key=lambda m: (popcount(m), m))
        return out

    def circuits(self, max_size: int | None = None) -> list[frozenset]:
        return [self.labels(m) for m in self.circuit_masks(max_size)]

    def cocircuits(self, max_size: int | None = None) -> list[frozenset]:
        return self.dual().circuits(max_size)

    def triangles(self) -> list[frozenset]:
        return [self.labels(m) for m in self.circuit_masks(3) if popcount(m) == 3]

    def triads(self) -> list[frozenset]:
        return self.dual().triangles()

    def cocycle_masks(self) -> list[int]:
        """Every vector of the row space, as element masks (includes 0)."""
        return span(list(self.rep.rows))


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _dual_name(name: str | None) -> str | None:
    if name is None:
        return None
    return name[:-1] if name.endswith("*") else name + "*"


def from_reduced(D: GF2Matrix, basis_labels: Sequence[Label] | None = None,
                 cobasis_labels: Sequence[Label] | None = None,
                 name: str | None = None) -> BinaryMatroid:
    """Matroid of ``[I | D]`` with elements ordered basis-then-cobasis."""
    r, k = D.nrows, D.ncols
    if basis_labels is None:
        basis_labels = [f"e{i}" for i in range(r)]
    if cobasis_labels is None:
        cobasis_labels = [f"e{r + j}" for j in range(k)]
    if len(basis_labels) != r or len(cobasis_labels) != k:
        raise ValueError(f"need {r} basis and {k} cobasis labels")
    labels = list(basis_labels) + list(cobasis_labels)
    if len(set(labels)) != len(labels):
        raise ValueError("label collision between basis and cobasis")
    rep = GF2Matrix.identity(r).hstack(D)
    return BinaryMatroid(labels, rep, name)


def from_columns(cols: Sequence[int], nrows: int, labels: Sequence[Label] | None = None,
                 name: str | None = None) -> BinaryMatroid:
    if labels is None:
        labels = [f"e{i}" for i in range(len(cols))]
    return BinaryMatroid(labels, GF2Matrix.from_columns(cols, nrows), name)


def empty_matroid() -> BinaryMatroid:
    return BinaryMatroid((), GF2Matrix.zeros(0, 0))


def direct_sum_raw(M1: BinaryMatroid, M2: BinaryMatroid) -> BinaryMatroid:
    """Block-diagonal sum; labels must already be disjoint."""
    n1 = len(M1)
    rows = list(M1.rep.rows) + [r << n1 for r in M2.rep.rows]
    rep = GF2Matrix(M1.rank + M2.rank, n1 + len(M2), tuple(rows))
    return BinaryMatroid(M1.elements + M2.elements, rep)


# -- text format ------------------------------------------------------------

def to_text(M: BinaryMatroid, full: bool = False) -> str:
    """Serialize as ``reduced`` when the matrix is ``[I|D]`` (unless ``full``), else ``full``."""
    r, n = M.rank, len(M)
    reduced = not full and all(M.rep.rows[i] & ((1 << r) - 1) == 1 << i for i in range(r))
    lines = [f"reduced {r} {n - r}" if reduced else f"full {r} {n}"]
    if M.name:
        lines.append(f"name: {M.name}")
    lines.append("elements: " + " ".join(str(e) for e in M.elements))
    for row in M.rep.rows:
        bits = "".join(str((row >> j) & 1) for j in range(n))
        lines.append(bits[r:] if reduced else bits)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> BinaryMatroid:
    shape = None
    name = None
    labels = None
    rows: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("name:"):
            name = line[5:].strip() or None
            continue
        if line.startswith("elements:"):
            labels = line[9:].split()
            continue
        if shape is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] not in ("reduced", "full"):
                raise ValueError(f"line {lineno}: expected 'reduced r k' or 'full r n'")
            try:
                shape = (parts[0], int(parts[1]), int(parts[2]))
            except ValueError:
                raise ValueError(f"line {lineno}: bad dimensions") from None
            continue
        if set(line) - {"0", "1"}:
            raise ValueError(f"line {lineno}: matrix rows must contain only 0/1")
        rows.append(line)
    if shape is None:
        raise ValueError("missing 'reduced r k' or 'full r n' header")
    kind, r, w = shape
    if len(rows) != r:
        raise ValueError(f"expected {r} matrix rows, found {len(rows)}")
    if any(len(x) != w for x in rows):
        raise ValueError(f"matrix rows must have length {w}")
    D = GF2Matrix.from_lists(rows, w)
    if kind == "reduced":
        n = r + w
        if labels is None:
            labels = [f"e{i}" for i in range(n)]
        if len(labels) != n:
            raise ValueError(f"elements: header lists {len(labels)} labels, need {n}")
        return from_reduced(D, labels[:r], labels[r:], name)
    if labels is None:
        labels = [f"e{i}" for i in range(w)]
    if len(labels) != w:
        raise ValueError(f"elements: header lists {len(labels)} labels, need {w}")
    return BinaryMatroid(labels, D, name)
