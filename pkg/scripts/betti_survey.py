"""b1 of QR colorings over sampled good sets and every unit k mod 17.

Also records the smallest support of a nonzero row-space word, which is
the quantity behind the vanishing of b1 (a support of 80 or more vertices
is connected in the Long graph in every case seen so far).

    python3 scripts/betti_survey.py --sets 200 --out results/betti.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

from hypcolor import codes, graphs, toric


@dataclass
class SurveyConfig:
    sets: int = 100
    seed: int = 7
    ks: tuple[int, ...] = tuple(range(1, 17))
    out: Path | None = None


def survey(cfg: SurveyConfig) -> dict:
    g, psi = graphs.build_long_graph()
    A = codes.qr_tables().A
    sample = graphs.good_independent_sets(g, psi, mode="sample", n=cfg.sets, seed=cfg.seed)
    betti = Counter()
    floors = Counter()
    invalid = 0
    t0 = time.perf_counter()
    for s in sample:
        for k in cfg.ks:
            c = toric.qr_coloring(g, s, psi, k, A)
            invalid += not toric.validate_coloring(g, c)[0]
            betti[toric.first_betti(g, c)] += 1
            floors[toric.min_support(c)] += 1
    return {
        "config": {k: (list(v) if isinstance(v, tuple) else str(v) if isinstance(v, Path) else v)
                   for k, v in asdict(cfg).items()},
        "good_sets": len(sample),
        "colorings": len(sample) * len(cfg.ks),
        "invalid": invalid,
        "b1_histogram": dict(sorted(betti.items())),
        "min_support_histogram": dict(sorted(floors.items())),
        "seconds": round(time.perf_counter() - t0, 2),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--sets", type=int, default=SurveyConfig.sets)
    p.add_argument("--seed", type=int, default=SurveyConfig.seed)
    p.add_argument("--out", type=Path)
    a = p.parse_args(argv)
    res = survey(SurveyConfig(sets=a.sets, seed=a.seed, out=a.out))
    text = json.dumps(res, indent=1)
    print(text)
    if a.out:
        a.out.parent.mkdir(parents=True, exist_ok=True)
        a.out.write_text(text + "\n")
    return 0 if res["invalid"] == 0 and list(res["b1_histogram"]) == [0] else 1


if __name__ == "__main__":
    sys.exit(main())
