"""Run the whole claim registry and write JSON and markdown reports."""
import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from genpos.checks import Budget, reports_to_json, reports_to_markdown, run_checks


@dataclass(frozen=True)
class Config:
    out_dir: Path = Path("results")
    jobs: int = 1
    budget: Budget = Budget()


def main(cfg: Config) -> int:
    reports = run_checks(["*"], cfg.budget, cfg.jobs)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    doc = reports_to_json(reports)
    (cfg.out_dir / "checks.json").write_text(json.dumps(doc, indent=2) + "\n")
    (cfg.out_dir / "checks.md").write_text(reports_to_markdown(reports))
    for cid, verdict in doc["claims"].items():
        print(f"{verdict}  {cid}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Config.out_dir)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--exhaustive-n", type=int, default=6)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.out_dir, a.jobs, Budget(exhaustive_n=a.exhaustive_n))))
