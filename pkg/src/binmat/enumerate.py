"""Single-element extensions and coextensions up to isomorphism, and closure
searches under them.

A binary single-element extension is just a new column, so the candidates are
the 2^r vectors over the current representation.  Candidates are deduplicated
by canonical key before any filter runs; every filter here is an isomorphism
invariant, so the surviving set is the same as filtering first, and the costly
minor tests run once per class instead of once per column.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .canonical import CanonicalKey, canonical_key
from .connectivity import is_internally_4_connected, is_three_connected
from .gf2 import span
from .matroid import BinaryMatroid


@dataclass(frozen=True)
class Filter:
    name: str
    test: Callable[[BinaryMatroid], bool]
    simple: bool = False      # passing matroids are simple
    cosimple: bool = False    # passing matroids are cosimple

    def __call__(self, M: BinaryMatroid) -> bool:
        return self.test(M)


def _three_conn(M: BinaryMatroid) -> bool:
    return is_three_connected(M)


SIMPLE = Filter("simple", lambda M: M.is_simple(), simple=True)
COSIMPLE = Filter("cosimple", lambda M: M.is_cosimple(), cosimple=True)
# 3-connected matroids on four or more elements are simple and cosimple; the
# pruning only matters at those sizes
THREE_CONNECTED = Filter("3connected", _three_conn, simple=True, cosimple=True)
INTERNALLY_4_CONNECTED = Filter("i4c", is_internally_4_connected, simple=True, cosimple=True)


def excluding(N: BinaryMatroid, name: str | None = None) -> Filter:
    from .minors import has_minor

    label = name or N.name or canonical_key(N).hex()[:12]
    return Filter(f"{label}-free", lambda M: not has_minor(M, N))


def _fresh(M: BinaryMatroid) -> str:
    k = len(M)
    while f"e{k}" in M.ground_set:
        k += 1
    return f"e{k}"


def _passes(M: BinaryMatroid, filters: Sequence[Filter]) -> bool:
    return all(f(M) for f in filters)


def _extension_children(M: BinaryMatroid, prune_parallel: bool):
    """(vector, child) for each candidate column; skips loops and parallel copies when asked."""
    label = _fresh(M)
    existing = set(M.cols)
    for v in sorted(span([1 << i for i in range(M.rank)])):
        if prune_parallel and (v == 0 or v in existing):
            continue
        yield v, M.extend(v, label)


def _unique(children, filters: Sequence[Filter], memo: dict | None = None):
    """Keep one child per canonical key that passes the filters."""
    seen: dict[bytes, tuple] = {}
    for v, child in children:
        key = canonical_key(child)
        if key.data in seen:
            continue
        ok = memo.get(key.data) if memo is not None else None
        if ok is None:
            ok = _passes(child, filters)
            if memo is not None:
                memo[key.data] = ok
        seen[key.data] = (key, v, child) if ok else None
    return [x for x in seen.values() if x is not None]


def extensions(M: BinaryMatroid, filters: Sequence[Filter] = ()) -> list[BinaryMatroid]:
    """One representative per isomorphism class of single-element extension passing ``filters``."""
    prune = any(f.simple for f in filters)
    return [c for _, _, c in _unique(_extension_children(M, prune), filters)]


def coextensions(M: BinaryMatroid, filters: Sequence[Filter] = ()) -> list[BinaryMatroid]:
    prune = any(f.cosimple for f in filters)
    D = M.dual()
    children = ((v, c.dual()) for v, c in _extension_children(D, prune))
    return [c for _, _, c in _unique(children, filters)]


# -- closure -----------------------------------------------------------------------

@dataclass
class Found:
    key: CanonicalKey
    matroid: BinaryMatroid
    seed: int
    path: tuple  # (("ext" | "coext", vector), ...) from the seed
    step: int

    @property
    def size(self) -> int:
        return len(self.matroid)

    @property
    def rank(self) -> int:
        return self.matroid.rank


def replay_path(seed: BinaryMatroid, path: Iterable) -> BinaryMatroid:
    M = seed
    for op, v in path:
        if op == "ext":
            M = M.extend(v, _fresh(M))
        elif op == "coext":
            M = M.dual().extend(v, _fresh(M)).dual()
        else:
            raise ValueError(f"unknown path step {op!r}")
    return M


@dataclass
class ClosureReport:
    seeds: list
    filters: list[str]
    steps: int
    found: dict = field(default_factory=dict)  # key bytes -> Found
    added_per_step: list[int] = field(default_factory=list)
    fixpoint: bool = False

    def ordered(self) -> list[Found]:
        return sorted(self.found.values(), key=lambda f: (f.size, f.key.data))

    def new(self) -> list[Found]:
        """Everything found beyond the seeds."""
        return [f for f in self.ordered() if f.step > 0]

    def by_size(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.found.values():
            out[f.size] = out.get(f.size, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self, names: dict | None = None) -> dict:
        from .connectivity import is_internally_4_connected

        names = names if names is not None else catalog_names_by_key()
        rows = []
        for f in self.ordered():
            rows.append({
                "name_or_key": names.get(f.key.data, f.key.hex()),
                "size": f.size,
                "rank": f.rank,
                "i4c": is_internally_4_connected(f.matroid),
                "path": [[op, v] for op, v in f.path],
                "seed": f.seed,
            })
        return {
            "seeds": [names.get(canonical_key(s).data, canonical_key(s).hex()) for s in self.seeds],
            "filters": list(self.filters),
            "steps": self.steps,
            "fixpoint": self.fixpoint,
            "added_per_step": list(self.added_per_step),
            "found": rows,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def catalog_names_by_key() -> dict[bytes, str]:
    from .catalog import named, names

    out: dict[bytes, str] = {}
    extra = ["W4", "W5", "W6", "Z4", "Z4*", "Z5", "Z5*"]
    for n in names() + extra:
        out.setdefault(canonical_key(named(n)).data, n)
    return out


def closure_search(seeds: Sequence[BinaryMatroid], filters: Sequence[Filter] = (),
                   max_steps: int = 1, max_size: int | None = None) -> ClosureReport:
    """Breadth-first closure of ``seeds`` under filtered extensions and coextensions.

    Stops after ``max_steps`` rounds or as soon as a round adds nothing.
    """
    report = ClosureReport(list(seeds), [f.name for f in filters], 0)
    for i, s in enumerate(seeds):
        key = canonical_key(s)
        if key.data not in report.found:
            report.found[key.data] = Found(key, s, i, (), 0)
    frontier = sorted(report.found.values(), key=lambda f: (f.size, f.key.data))
    memo: dict[bytes, bool] = {}
    pext = any(f.simple for f in filters)
    pco = any(f.cosimple for f in filters)
    for step in range(1, max_steps + 1):
        added: dict[bytes, Found] = {}
        for parent in frontier:
            M = parent.matroid
            if max_size is not None and len(M) >= max_size:
                continue
            D = M.dual()
            kids = [(("ext", v), c) for v, c in _extension_children(M, pext)]
            kids += [(("coext", v), c.dual()) for v, c in _extension_children(D, pco)]
            for (op, child) in kids:
                key = canonical_key(child)
                if key.data in report.found or key.data in added:
                    continue
                ok = memo.get(key.data)
                if ok is None:
                    ok = _passes(child, filters)
                    memo[key.data] = ok
                if ok:
                    added[key.data] = Found(key, child, parent.seed, parent.path + (op,), step)
        report.steps = step
        report.added_per_step.append(len(added))
        if not added:
            report.fixpoint = True
            break
        report.found.update(added)
        frontier = sorted(added.values(), key=lambda f: (f.size, f.key.data))
    return report


def census(max_size: int, filters: Sequence[Filter] = (THREE_CONNECTED,)) -> ClosureReport:
    """All 3-connected binary matroids with 6..max_size elements that have an
    M(K4)-minor, i.e. all of them from six elements on.

    Wheels have no 3-connected single-element deletion or contraction, so every
    wheel up to the size bound is a seed rather than something to discover.
    """
    from .catalog import named

    seeds = [named(f"W{k}") for k in range(3, max_size // 2 + 1)]
    return closure_search(seeds, filters, max_steps=max(0, max_size - 6) + 1, max_size=max_size)
