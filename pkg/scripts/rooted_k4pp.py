#!/usr/bin/env python3
"""Rooted K4'' minors of bond matroids, triangle by triangle.

Covers the K3,n family (n <= 4, 3-connected members), five graphs outside it and
the graphic exceptions K4, W4 and the prism.  Triangles of K3,n-family bond
matroids are vertex stars; each is tagged with its vertex.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from binmat.catalog import k4_double_prime
from binmat.connectivity import is_three_connected
from binmat.graphs import bond_matroid, complete_graph, cycle_matroid, k3n_variant, prism, wheel
from binmat.minors import find_rooted_minor
from binmat.verify import NON_FAMILY_GRAPHS


@dataclass
class Config:
    max_n: int = 4
    show_witness: bool = False


def star_of(G, T):
    for v in G.vertices:
        if set(G.edges_at(v)) == set(T):
            return v
    return "-"


def report(name, G, M, pat, cfg):
    for T in sorted(M.triangles(), key=lambda t: sorted(map(str, t))):
        w = find_rooted_minor(M, T, pat)
        line = f"{name:>16}  star {star_of(G, T) if G else '-':>3}  {sorted(T)}  {'yes' if w else 'no'}"
        if w and cfg.show_witness:
            line += f"  contract {sorted(w.contracted)} delete {sorted(w.deleted)}"
        print(line)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--show-witness", action="store_true")
    a = ap.parse_args()
    cfg = Config(a.max_n, a.show_witness)
    pat = k4_double_prime()
    for n in range(1, cfg.max_n + 1):
        for extra in range(4):
            G = k3n_variant(n, extra)
            M = bond_matroid(G)
            if len(M) >= 4 and is_three_connected(M):
                report(f"M*(K3,{n}+{extra})", G, M, pat, cfg)
    for name, build in NON_FAMILY_GRAPHS.items():
        G = build()
        report(f"M*({name})", G, bond_matroid(G), pat, cfg)
    for name, G in (("M(K4)", complete_graph(4)), ("M(W4)", wheel(4)), ("M(Prism)", prism())):
        report(name, None, cycle_matroid(G), pat, cfg)


if __name__ == "__main__":
    main()
