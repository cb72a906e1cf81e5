"""Named matroids and graph families.

Matrices printed in the source are transcribed once into ``data/matrices.txt``
(checksummed by the test suite); everything else is built from a short
construction documented next to its registry entry.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .gf2 import GF2Matrix
from .graphs import (Graph, bond_matroid, complete_bipartite, complete_graph, cycle_matroid,
                     k3n_variant, prism, wheel)
from .matroid import BinaryMatroid, from_reduced, from_text
from .minors import RootedPattern

__all__ = ["named", "names", "spike", "SpikeSpec", "k3n_variant", "L_MEMBERS",
           "k4_prime", "k4_double_prime", "matrix_entries", "MATRIX_NAMES"]

MATRIX_NAMES = ("X10", "X11", "X11'", "Y11", "X12", "X12'", "Y12",
                "X13", "Y13", "X14", "Y14", "X15", "Y15", "Y16")

# the sixteen internally 4-connected non-regular minors of Y16
L_MEMBERS = ("F7", "F7*") + MATRIX_NAMES

SPIKE_VARIANTS = ("Z", "Z_dual", "Z_minus_y", "Z_minus_t")


@dataclass(frozen=True)
class SpikeSpec:
    r: int
    variant: str = "Z"

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("spikes need rank at least 3")
        if self.variant not in SPIKE_VARIANTS:
            raise ValueError(f"unknown spike variant {self.variant!r}")


def spike(spec: SpikeSpec) -> BinaryMatroid:
    """Binary spike with tip ``t``, basis ``x1..xr`` and legs ``{x_i, y_i, t}``."""
    r = spec.r
    full = (1 << (r + 1)) - 1
    rows = [full ^ (1 << i) for i in range(r)]  # y_i misses x_i; the tip column is all ones
    D = GF2Matrix(r, r + 1, tuple(rows))
    Z = from_reduced(D, [f"x{i}" for i in range(1, r + 1)],
                     [f"y{i}" for i in range(1, r + 1)] + ["t"], name=f"Z{r}")
    if spec.variant == "Z":
        return Z
    if spec.variant == "Z_dual":
        return Z.dual()
    if spec.variant == "Z_minus_y":
        return Z.delete([f"y{r}"]).with_name(f"Z{r}\\y{r}")
    return Z.delete(["t"]).with_name(f"Z{r}\\t")


def matrix_entries() -> dict[str, BinaryMatroid]:
    text = resources.files("binmat").joinpath("data/matrices.txt").read_text()
    out = {}
    for block in re.split(r"\n\s*\n", text):
        if not any(line.strip() and not line.startswith("#") for line in block.splitlines()):
            continue
        M = from_text(block)
        out[M.name] = M
    return out


def _fano() -> BinaryMatroid:
    D = GF2Matrix.from_lists(["1101", "1011", "0111"], 4)
    return from_reduced(D, ["a", "b", "c"], ["d", "e", "f", "g"], name="F7")


def _p9_star() -> BinaryMatroid:
    from .compose import TriangleGlue, three_sum

    F = _fano()
    W = cycle_matroid(wheel(4))
    tf = sorted(F.triangles()[0])
    tw = ["s0", "s1", "c0"]  # the triangle at rim edge c0 of the wheel
    M = three_sum(TriangleGlue.of(F, tf, W, tw))
    return M.with_name("P9*")


def _columns(cols, nrows, labels, name) -> BinaryMatroid:
    return BinaryMatroid(labels, GF2Matrix.from_columns(cols, nrows), name)


def _r10() -> BinaryMatroid:
    cols = [c for c in range(32) if bin(c).count("1") == 3]
    return _columns(cols, 5, [f"r{i}" for i in range(10)], "R10")


def _pg32() -> BinaryMatroid:
    return _columns(list(range(1, 16)), 4, [f"p{i}" for i in range(1, 16)], "PG(3,2)")


def _k5_minus_e() -> Graph:
    g = complete_graph(5)
    return g.delete_edges(["k4k5"])


def k4_graph() -> Graph:
    return complete_graph(4)


K4_ROOT = ("k1k2", "k1k3", "k2k3")


def k4_prime(doubled: str = "k1k2") -> RootedPattern:
    """M(K4) with a parallel mate ``doubled'`` added to one element of the root triangle."""
    return _k4_with_mates([doubled], "K4'")


def k4_double_prime(doubled: tuple = ("k1k2", "k1k3")) -> RootedPattern:
    """M(K4) with parallel mates on two elements of the root triangle."""
    return _k4_with_mates(list(doubled), "K4''")


def _k4_with_mates(doubled, name) -> RootedPattern:
    if not set(doubled) <= set(K4_ROOT) or len(set(doubled)) != len(doubled):
        raise ValueError("doubled elements must be distinct elements of the root triangle")
    G = k4_graph()
    edges = list(G.edges)
    for lab in doubled:
        u, v, _ = G.edge(lab)
        edges.append((u, v, f"{lab}'"))
    M = cycle_matroid(Graph(G.vertices, tuple(edges)), name=name)
    return RootedPattern(M, frozenset(K4_ROOT), name)


_BUILDERS: dict[str, Callable[[], BinaryMatroid]] = {
    "F7": _fano,
    "F7*": lambda: _fano().dual(),
    "M(K4)": lambda: cycle_matroid(complete_graph(4), "M(K4)"),
    "S8": lambda: spike(SpikeSpec(4, "Z_minus_y")).with_name("S8"),
    "AG(3,2)": lambda: spike(SpikeSpec(4, "Z_minus_t")).with_name("AG(3,2)"),
    "P9*": _p9_star,
    "P9": lambda: _p9_star().dual(),
    "R10": _r10,
    "M(K3,3)": lambda: cycle_matroid(complete_bipartite(3, 3), "M(K3,3)"),
    "M*(K3,3)": lambda: bond_matroid(complete_bipartite(3, 3), "M*(K3,3)"),
    "M(K5)": lambda: cycle_matroid(complete_graph(5), "M(K5)"),
    "M*(K5)": lambda: bond_matroid(complete_graph(5), "M*(K5)"),
    "M(K5\\e)": lambda: cycle_matroid(_k5_minus_e(), "M(K5\\e)"),
    "M*(K5\\e)": lambda: bond_matroid(_k5_minus_e(), "M*(K5\\e)"),
    "Prism": lambda: cycle_matroid(prism(), "Prism"),
    "M*(Prism)": lambda: bond_matroid(prism(), "M*(Prism)"),
    "PG(3,2)": _pg32,
    "PG(3,2)*": lambda: _pg32().dual(),
}

ALIASES = {"W3": "M(K4)", "PG32-dual": "PG(3,2)*", "PG32": "PG(3,2)", "AG32": "AG(3,2)",
           "K5-e": "M(K5\\e)", "MK33": "M(K3,3)", "MK33*": "M*(K3,3)"}

_PATTERNS = [
    # wheels W_n for n >= 2
    (re.compile(r"W(\d+)$"), lambda m: cycle_matroid(wheel(int(m[1])), f"W{m[1]}")
     if int(m[1]) >= 2 else None),
    # spikes: Z4, Z4*, Z4\y, Z4\t
    (re.compile(r"Z(\d+)(\*|\\y|\\t)?$"), lambda m: _spike_name(int(m[1]), m[2] or "")),
    # starfish(extra,n,t)
    (re.compile(r"starfish\((\d),(\d+),(\d+)\)$"), lambda m: _starfish(*map(int, m.groups()))),
    # bond matroids of K3,n variants: M*(K3,n), M*(K3,n)+1 ...
    (re.compile(r"M\*\(K3,(\d+)\)(?:\+(\d))?$"), lambda m: _k3n_bond(int(m[1]), int(m[2] or 0))),
]


def _spike_name(r: int, suffix: str):
    if r < 3:
        return None
    variant = {"": "Z", "*": "Z_dual", "\\y": "Z_minus_y", "\\t": "Z_minus_t"}[suffix]
    M = spike(SpikeSpec(r, variant))
    return M.with_name(f"Z{r}{suffix}")


def _starfish(extra: int, n: int, t: int):
    from .compose import StarfishSpec, build_starfish

    return build_starfish(StarfishSpec(extra, n, t))


def _k3n_bond(n: int, extra: int):
    if n < 1 or extra > 3:
        return None
    suffix = f"+{extra}" if extra else ""
    return bond_matroid(k3n_variant(n, extra), f"M*(K3,{n}){suffix}")


_registry: dict[str, BinaryMatroid] | None = None
_lock = threading.Lock()


def _build_registry() -> dict[str, BinaryMatroid]:
    reg = {}
    for name, build in _BUILDERS.items():
        reg[name] = build().with_name(name)
    for name, M in matrix_entries().items():
        reg[name] = M
    return reg


def _get_registry() -> dict[str, BinaryMatroid]:
    global _registry
    reg = _registry
    if reg is None:
        with _lock:
            if _registry is None:
                _registry = _build_registry()
            reg = _registry
    return reg


def names() -> list[str]:
    """Fixed registry names (parametric families such as ``W5`` or ``Z6*`` are also accepted by :func:`named`)."""
    return sorted(_get_registry()) + sorted(ALIASES)


def named(name: str) -> BinaryMatroid:
    reg = _get_registry()
    key = ALIASES.get(name, name)
    if key in reg:
        return reg[key]
    for pat, build in _PATTERNS:
        m = pat.match(name)
        if m:
            try:
                M = build(m)
            except ValueError:
                M = None
            if M is not None:
                return M
    raise KeyError(f"unknown matroid name {name!r}")


def is_known(name: str) -> bool:
    try:
        named(name)
    except KeyError:
        return False
    return True
