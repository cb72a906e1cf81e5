#!/usr/bin/env python3
"""Random triangle gluings: check the parallel-connection cocircuit lemma and
the symmetric-difference form for 3-sums.

Without --unrestricted only gluings accepted by three_sum are drawn (no
cocircuit of either side inside T).  With it, the 3-sum is formed as
P_T \\ T regardless, which shows how often the symmetric-difference form then
fails.
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from binmat.compose import (TriangleGlue, cocircuits_of_pc, parallel_connection_triangle,
                            three_sum_defect)
from binmat.matroid import from_columns
from binmat.verify import delta_form_holds, random_glue


@dataclass
class Config:
    instances: int = 200
    seed: int = 20240101
    max_size: int = 9
    unrestricted: bool = False


def loose_glue(rng: random.Random, max_size: int) -> TriangleGlue:
    def side(tag):
        while True:
            r = rng.randint(3, 5)
            n = rng.randint(7, max_size)
            a, b = rng.randrange(1, 1 << r), rng.randrange(1, 1 << r)
            if a == b:
                continue
            cols = [a, b, a ^ b] + [rng.randrange(0, 1 << r) for _ in range(n - 3)]
            M = from_columns(cols, r, [f"{tag}{i}" for i in range(n)])
            if M.rank == r:
                return M, [f"{tag}{i}" for i in range(3)]

    L, tl = side("a")
    R, tr = side("b")
    return TriangleGlue.of(L, tl, R, tr)


def delta_form_unchecked(g: TriangleGlue) -> bool:
    return delta_form_holds(g, parallel_connection_triangle(g).delete(g.t_left))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=Config.instances)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--unrestricted", action="store_true")
    a = ap.parse_args()
    cfg = Config(a.instances, a.seed, unrestricted=a.unrestricted)
    rng = random.Random(cfg.seed)
    pc_ok = delta_ok = restricted = valid_fail = 0
    for _ in range(cfg.instances):
        if cfg.unrestricted:
            g = loose_glue(rng, cfg.max_size)
            ok = delta_form_unchecked(g)
            valid = three_sum_defect(g) is None
            restricted += valid
            valid_fail += valid and not ok
        else:
            g = random_glue(rng, max_size=cfg.max_size)
            ok = delta_form_holds(g)
            restricted += 1
        P = parallel_connection_triangle(g)
        pc_ok += set(cocircuits_of_pc(g)) == {frozenset(c) for c in P.cocircuits()}
        delta_ok += ok
    print(f"instances {cfg.instances}  valid 3-sums {restricted}")
    print(f"parallel-connection lemma holds: {pc_ok}/{cfg.instances}")
    print(f"symmetric-difference form holds: {delta_ok}/{cfg.instances}"
          f"  (failures among valid 3-sums: {valid_fail})")


if __name__ == "__main__":
    main()
