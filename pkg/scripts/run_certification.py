"""Run the acceptance criteria and write a JSON report.

    python3 scripts/run_certification.py --out results/certification.json
    python3 scripts/run_certification.py --only 1,2,3 --tier long
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from hypcolor import certify


@dataclass
class Config:
    out: Path = Path("results/certification.json")
    tier: str = "default"
    only: str = ""
    seed: int = certify.GOOD_SET_SEED


def parse(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    d = Config()
    p.add_argument("--out", type=Path, default=d.out)
    p.add_argument("--tier", choices=("default", "long"), default=d.tier)
    p.add_argument("--only", default=d.only)
    p.add_argument("--seed", type=int, default=d.seed)
    return Config(**vars(p.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse(argv)
    only = [int(x) for x in cfg.only.split(",")] if cfg.only else None
    reports = certify.run_all(certify.Context(cfg.seed), tier=cfg.tier, only=only, echo=print)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    payload = {"config": {k: str(v) for k, v in asdict(cfg).items()}, "criteria": [r.as_dict() for r in reports]}
    cfg.out.write_text(json.dumps(payload, indent=1) + "\n")
    print(f"wrote {cfg.out}")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
