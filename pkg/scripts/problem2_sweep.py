"""Does gp(G x H) = gp(G) gp(H) for the strong product?  Instance evidence only."""
import argparse
import json
from dataclasses import dataclass
from typing import Optional

from genpos.explore import ExploreBudget, explore_conjecture, load_catalog


@dataclass(frozen=True)
class Config:
    catalog: str = "connected:4"
    max_order: int = 36
    max_pairs: Optional[int] = None
    cursor: int = 0


def main(cfg: Config) -> int:
    cat = load_catalog(cfg.catalog)
    rep = explore_conjecture("problem-2", cat, cat, ExploreBudget(cfg.max_pairs, cfg.max_order), cfg.cursor)
    print(json.dumps({k: v for k, v in rep.to_dict().items() if k != "records"}, indent=2))
    for g, h, gp, prod in rep.strict_examples:
        print(f"strict: G={g} H={h} gp={gp} > {prod}")
    return 1 if rep.violations else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--catalog", default=Config.catalog)
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    ap.add_argument("--max-pairs", type=int)
    ap.add_argument("--cursor", type=int, default=0)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.catalog, a.max_order, a.max_pairs, a.cursor)))
