#!/usr/bin/env python3
"""Count 3-connected binary matroids by size and classify each one.

    python scripts/census.py --max-size 11 --json census.json
"""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

from binmat.classify import classify, verify_certificate
from binmat.enumerate import catalog_names_by_key, census


@dataclass
class Config:
    max_size: int = 10
    classify: bool = True
    json_out: str | None = None


def run(cfg: Config) -> dict:
    t0 = time.perf_counter()
    rep = census(cfg.max_size)
    names = catalog_names_by_key()
    rows = []
    kinds: Counter = Counter()
    for f in rep.ordered():
        row = {"size": f.size, "rank": f.rank, "name_or_key": names.get(f.key.data, f.key.hex()[:16])}
        if cfg.classify:
            lab = classify(f.matroid)
            assert verify_certificate(f.matroid, lab)
            row["label"] = lab.kind
            if lab.kind in ("Spike", "Starfish", "Y16Family"):
                row["certificate"] = lab.to_json()["certificate"]
            kinds[(f.size, lab.kind)] += 1
        rows.append(row)
    by_kind: dict = {}
    for (size, kind), c in sorted(kinds.items()):
        by_kind.setdefault(size, {})[kind] = c
    return {"config": asdict(cfg), "by_size": rep.by_size(), "by_label": by_kind,
            "seconds": round(time.perf_counter() - t0, 2), "matroids": rows}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=Config.max_size)
    ap.add_argument("--no-classify", action="store_true")
    ap.add_argument("--json", dest="json_out")
    a = ap.parse_args()
    out = run(Config(a.max_size, not a.no_classify, a.json_out))
    print("size  count  labels")
    for size, count in out["by_size"].items():
        labels = ", ".join(f"{k} {v}" for k, v in out["by_label"].get(size, {}).items())
        print(f"{size:>4}  {count:>5}  {labels}")
    print(f"{out['seconds']} s")
    if a.json_out:
        with open(a.json_out, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
