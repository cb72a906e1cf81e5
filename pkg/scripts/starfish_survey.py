#!/usr/bin/env python3
"""Build every starfish with n <= N and report size, rank and the defining properties.

With --any-triangles, also count isomorphism classes over every family of t
disjoint triangles of the base (not just stars of large-class vertices) and
flag the ones that pick up a P9-minor.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from binmat.catalog import named
from binmat.compose import build_starfish, starfish_variants
from binmat.connectivity import is_three_connected
from binmat.minors import has_minor, is_regular
from binmat.verify import valid_starfish_specs


@dataclass
class Config:
    max_n: int = 4
    any_triangles: bool = False


def run(cfg: Config) -> list[dict]:
    P9, W4 = named("P9"), named("W4")
    rows = []
    for spec in valid_starfish_specs(cfg.max_n):
        S = build_starfish(spec)
        row = {"spec": (spec.extra, spec.n, spec.t), "size": len(S), "rank": S.rank,
               "3conn": is_three_connected(S), "regular": is_regular(S),
               "P9": has_minor(S, P9), "W4": has_minor(S, W4)}
        if cfg.any_triangles:
            variants = starfish_variants(spec, any_triangles=True)
            row["classes"] = len(variants)
            row["classes_with_P9"] = sum(has_minor(v, P9) for v in variants)
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--any-triangles", action="store_true")
    a = ap.parse_args()
    for row in run(Config(a.max_n, a.any_triangles)):
        print("  ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
