#!/usr/bin/env python3
"""Extend and coextend X10 under 3-connectivity and P9-freeness until nothing new appears."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from binmat.catalog import named
from binmat.enumerate import THREE_CONNECTED, closure_search, excluding
from binmat.minors import has_minor


@dataclass
class Config:
    seed: str = "X10"
    forbid: str = "P9"
    steps: int = 8
    json_out: str | None = None


def run(cfg: Config):
    t0 = time.perf_counter()
    rep = closure_search([named(cfg.seed)], [THREE_CONNECTED, excluding(named(cfg.forbid), cfg.forbid)],
                         max_steps=cfg.steps)
    doc = rep.to_json()
    Y16 = named("Y16")
    for row, f in zip(doc["found"], rep.ordered()):
        row["minor_of_Y16"] = has_minor(Y16, f.matroid)
    doc["seconds"] = round(time.perf_counter() - t0, 2)
    return doc


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", default=Config.seed)
    ap.add_argument("--forbid", default=Config.forbid)
    ap.add_argument("--steps", type=int, default=Config.steps)
    ap.add_argument("--json", dest="json_out")
    a = ap.parse_args()
    doc = run(Config(a.seed, a.forbid, a.steps, a.json_out))
    print(f"added per step: {doc['added_per_step']}  fixpoint: {doc['fixpoint']}")
    for row in doc["found"]:
        print(f"  {row['name_or_key']:>8}  |E|={row['size']:>2}  r={row['rank']:>2}"
              f"  i4c={row['i4c']}  minor of Y16={row['minor_of_Y16']}")
    print(f"{doc['seconds']} s")
    if a.json_out:
        with open(a.json_out, "w") as fh:
            json.dump(doc, fh, indent=2)


if __name__ == "__main__":
    main()
