"""Minor containment, free and rooted, and the predicates built on it.

The search removes one element at a time and memoizes on canonical keys, so
each isomorphism class of intermediate minor is explored once.  Two reductions
keep the tree small:

* when the target is 3-connected, not a wheel, and the host is 3-connected,
  only 3-connected single-element deletions and contractions are followed
  (splitter theorem: such a host with an N-minor always has one);
* otherwise loops, coloops, and parallel/series pairs that the target cannot
  contain are removed eagerly, because every choice among them leads to
  isomorphic minors.

Classes proven N-free are cached per target and reused across calls.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable

from .canonical import CanonicalKey, canonical_key
from .connectivity import is_three_connected
from .matroid import BinaryMatroid, Label, label_key

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


@dataclass(frozen=True)
class MinorWitness:
    contracted: frozenset
    deleted: frozenset

    def replay(self, M: BinaryMatroid) -> BinaryMatroid:
        return M.contract(self.contracted).delete(self.deleted)

    def to_json(self) -> dict:
        return {"contract": sorted(map(str, self.contracted)),
                "delete": sorted(map(str, self.deleted))}


@dataclass(frozen=True)
class RootedPattern:
    """A target matroid with a distinguished triangle ``root``."""

    target: BinaryMatroid
    root: frozenset
    name: str | None = None

    def __post_init__(self):
        if not is_triangle(self.target, self.root):
            raise ValueError("pattern root is not a triangle of the target")


def is_triangle(M: BinaryMatroid, T: Iterable[Label]) -> bool:
    T = frozenset(T)
    if len(T) != 3 or not T <= M.ground_set:
        return False
    return M.rank_of(T) == 2 and all(M.rank_of(T - {e}) == 2 for e in T)


# -- caches ----------------------------------------------------------------------

_FREE: dict[bytes, set[bytes]] = {}
_THREE_CONN: dict[bytes, bool] = {}


def clear_caches() -> None:
    _FREE.clear()
    _THREE_CONN.clear()


def _three_connected_cached(M: BinaryMatroid, key: CanonicalKey) -> bool:
    hit = _THREE_CONN.get(key.data)
    if hit is None:
        hit = is_three_connected(M)
        _THREE_CONN[key.data] = hit
    return hit


def _is_wheel(N: BinaryMatroid) -> bool:
    from .graphs import cycle_matroid, wheel

    n = len(N)
    if n < 6 or n % 2 or N.rank != n // 2:
        return False
    return canonical_key(N) == canonical_key(cycle_matroid(wheel(n // 2)))


# -- the search --------------------------------------------------------------------

@dataclass
class _Target:
    N: BinaryMatroid
    root: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        N, root = self.N, self.root
        self.n, self.r, self.c = len(N), N.rank, N.corank
        self.key = canonical_key(N, root or None)
        self.loopless = not any(c == 0 for c in N.cols)
        D = N.dual()
        self.coloopless = not any(c == 0 for c in D.cols)
        self.no_free_parallel = not _pair_outside(N, root)
        self.no_free_series = not _pair_outside(D, root)
        self.no_series = not any(len(p) > 1 for p in D.parallel_classes())
        self.no_parallel = not any(len(p) > 1 for p in N.parallel_classes())
        self.splitter_ok = (not root and self.n >= 4 and is_three_connected(N)
                            and not _is_wheel(N))
        tag = b"R" if root else b"F"
        self.cache = _FREE.setdefault(tag + self.key.data, set())


def _pair_outside(N: BinaryMatroid, root: frozenset) -> bool:
    """Does N have a parallel pair avoiding ``root``?"""
    for cls in N.parallel_classes():
        if len(cls - root) >= 2:
            return True
    return False


class _Dead(Exception):
    pass


def _normalize(M: BinaryMatroid, T: frozenset, tg: _Target, C: set, Dl: set) -> BinaryMatroid:
    """Apply forced removals; raise _Dead when the target cannot be reached."""
    while True:
        if len(M) < tg.n or M.rank < tg.r or M.corank < tg.c:
            raise _Dead
        if T and not _rooted_ok(M, T):
            raise _Dead
        loops = [e for e, c in zip(M.elements, M.cols) if c == 0]
        if loops and tg.loopless:
            if any(e in T for e in loops):
                raise _Dead
            Dl.update(loops)
            M = M.delete(loops)
            continue
        D = M.dual()
        coloops = [e for e, c in zip(D.elements, D.cols) if c == 0]
        if coloops and tg.coloopless:
            if any(e in T for e in coloops):
                raise _Dead
            C.update(coloops)
            M = M.contract(coloops)
            continue
        if tg.no_free_parallel or tg.no_parallel:
            drop = []
            for cls in M.parallel_classes():
                if cls & T and tg.no_parallel:
                    drop.extend(cls - T)
                elif tg.no_free_parallel:
                    drop.extend(_redundant_in_classes([cls], T))
            if drop:
                Dl.update(drop)
                M = M.delete(drop)
                continue
        if tg.no_free_series or tg.no_series:
            squeeze = []
            for cls in D.parallel_classes():
                if len(cls) < 2:
                    continue
                inside = cls & T
                if inside and tg.no_series:
                    if len(inside) >= 2:
                        raise _Dead
                    squeeze.extend(cls - T)
                elif tg.no_free_series:
                    squeeze.extend(_redundant_in_classes([cls], T))
            if squeeze:
                C.update(squeeze)
                M = M.contract(squeeze)
                continue
        return M


def _redundant_in_classes(classes, T: frozenset) -> list:
    drop = []
    for cls in classes:
        free = sorted(cls - T, key=label_key)
        if len(free) >= 2:
            drop.extend(free[1:])
    return drop


def _rooted_ok(M: BinaryMatroid, T: frozenset) -> bool:
    return is_triangle(M, T)


def _search(M: BinaryMatroid, T: frozenset, tg: _Target, C: frozenset, Dl: frozenset,
            splitter: bool, key: CanonicalKey | None = None) -> MinorWitness | None:
    if not splitter:
        Cs, Ds = set(C), set(Dl)
        try:
            M = _normalize(M, T, tg, Cs, Ds)
        except _Dead:
            return None
        C, Dl = frozenset(Cs), frozenset(Ds)
        key = None
    elif len(M) < tg.n or M.rank < tg.r or M.corank < tg.c:
        return None
    if key is None:
        key = canonical_key(M, T or None)
    if len(M) == tg.n:
        return MinorWitness(C, Dl) if key == tg.key else None
    if key.data in tg.cache:
        return None
    tri: set = set()
    triad: set = set()
    if splitter and len(M) > 4:
        tri = {e for t in M.triangles() for e in t}
        triad = {e for t in M.triads() for e in t}
    for e in sorted(M.elements, key=label_key):
        if e in T:
            continue
        for op in ("contract", "delete"):
            if op == "delete":
                if e in triad:
                    continue
                child = M.delete([e])
                nC, nD = C, Dl | {e}
            else:
                if e in tri:
                    continue
                child = M.contract([e])
                nC, nD = C | {e}, Dl
            if len(child) < tg.n or child.rank < tg.r or child.corank < tg.c:
                continue
            ckey = None
            if splitter:
                ckey = canonical_key(child)
                if ckey.data in tg.cache:
                    continue
                if len(child) > tg.n and not _three_connected_cached(child, ckey):
                    continue
            found = _search(child, T, tg, nC, nD, splitter, ckey)
            if found is not None:
                return found
    tg.cache.add(key.data)
    return None


def find_minor(M: BinaryMatroid, N: BinaryMatroid) -> MinorWitness | None:
    """A replayable witness that N is isomorphic to a minor of M, or None."""
    if len(M) < len(N) or M.rank < N.rank or M.corank < N.corank:
        return None
    tg = _Target(N)
    splitter = tg.splitter_ok and is_three_connected(M)
    return _search(M, frozenset(), tg, frozenset(), frozenset(), splitter)


def has_minor(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    return find_minor(M, N) is not None


def find_rooted_minor(M: BinaryMatroid, T: Iterable[Label], pattern: RootedPattern) -> MinorWitness | None:
    """Witness for a minor isomorphic to ``pattern.target`` by an isomorphism
    carrying ``T`` onto ``pattern.root``; elements of ``T`` are never removed."""
    T = frozenset(T)
    if not is_triangle(M, T):
        raise ValueError(f"{sorted(map(str, T))} is not a triangle of M")
    N = pattern.target
    if len(M) < len(N) or M.rank < N.rank or M.corank < N.corank:
        return None
    tg = _Target(N, pattern.root)
    return _search(M, T, tg, frozenset(), frozenset(), False)


def has_rooted_minor(M: BinaryMatroid, T: Iterable[Label], pattern: RootedPattern) -> bool:
    return find_rooted_minor(M, T, pattern) is not None


# -- derived predicates ------------------------------------------------------------------

def is_regular(M: BinaryMatroid) -> bool:
    from .catalog import named

    return not has_minor(M, named("F7")) and not has_minor(M, named("F7*"))


def is_graphic(M: BinaryMatroid) -> bool:
    from .catalog import named

    if not is_regular(M):
        return False
    return not has_minor(M, named("M*(K5)")) and not has_minor(M, named("M*(K3,3)"))


def is_cographic(M: BinaryMatroid) -> bool:
    return is_graphic(M.dual())


def is_p9_free(M: BinaryMatroid) -> bool:
    from .catalog import named

    return not has_minor(M, named("P9"))


def witness_is_valid(M: BinaryMatroid, N: BinaryMatroid, w: MinorWitness,
                     T: Iterable[Label] | None = None, root: Iterable[Label] | None = None) -> bool:
    if w.contracted & w.deleted:
        return False
    if len(w.contracted) != M.rank_of(w.contracted):
        return False
    H = w.replay(M)
    if T is None:
        return canonical_key(H) == canonical_key(N)
    return canonical_key(H, T) == canonical_key(N, root)
