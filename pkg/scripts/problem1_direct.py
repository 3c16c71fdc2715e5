"""Direct products G x H: when gp equals omega of the strong resolving graph, is the diameter 2?"""
import argparse
from collections import Counter
from dataclasses import dataclass

from genpos.explore import ExploreBudget, explore_conjecture, load_catalog


@dataclass(frozen=True)
class Config:
    catalogs: tuple = ("complete:2..5", "connected:4")
    max_order: int = 40


def main(cfg: Config) -> int:
    bad = 0
    for source in cfg.catalogs:
        cat = load_catalog(source)
        rep = explore_conjecture("problem-1", cat, cat, ExploreBudget(max_order=cfg.max_order))
        by_diam = Counter((r["diam"], r["gp"] == r["omega_sr"]) for r in rep.records)
        print(f"{source}: {rep.examined} pairs, skipped {rep.skipped}, counts {dict(sorted(rep.counts.items()))}")
        for (diam, eq), k in sorted(by_diam.items()):
            print(f"  diam {diam}  {'gp = omega_SR' if eq else 'gp > omega_SR'}  x{k}")
        for v in rep.violations:
            print(f"  equality away from diameter 2: {v}")
        bad += len(rep.violations)
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("catalogs", nargs="*", default=list(Config.catalogs))
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    a = ap.parse_args()
    raise SystemExit(main(Config(tuple(a.catalogs), a.max_order)))
