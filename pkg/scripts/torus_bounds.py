"""Exact gp of small strong tori and cylinders next to the known bounds."""
import argparse
from dataclasses import dataclass

from genpos.families import cycle, path
from genpos.gp import gp_number
from genpos.products import strong_product


@dataclass(frozen=True)
class Config:
    min_order: int = 3
    max_order: int = 7
    cylinder_rows: int = 4


def bounds(r: int, s: int):
    """Product lower bound and the two-cylinder upper bound for C_r x C_s (r, s >= 4)."""
    lo = gp_number(cycle(r)).value * gp_number(cycle(s)).value
    hi = 16 if s % 2 == 0 else 14
    return lo, hi


def main(cfg: Config) -> None:
    print("| torus | gp | gp(C_r) gp(C_s) | upper |")
    print("|---|---|---|---|")
    for r in range(max(cfg.min_order, 3), cfg.max_order + 1):
        for s in range(r, cfg.max_order + 1):
            gp = gp_number(strong_product(cycle(r), cycle(s))[0]).value
            lo, hi = bounds(r, s)
            print(f"| C{r} x C{s} | {gp} | {lo} | {hi if min(r, s) >= 4 else '-'} |")
    print()
    print("| cylinder | gp |")
    print("|---|---|")
    for r in range(2, cfg.cylinder_rows + 1):
        for m in range(4, cfg.max_order + 1):
            print(f"| P{r} x C{m} | {gp_number(strong_product(path(r), cycle(m))[0]).value} |")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=Config.max_order)
    ap.add_argument("--cylinder-rows", type=int, default=Config.cylinder_rows)
    a = ap.parse_args()
    main(Config(max_order=a.max_order, cylinder_rows=a.cylinder_rows))
