"""Prism volume against the Euler-product cutoff."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import mpmath

from hypcolor import zetavol

REFERENCE = mpmath.mpf("0.001984696430311649")


@dataclass
class ConvergenceConfig:
    start: int = 10_000
    doublings: int = 7


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--start", type=int, default=ConvergenceConfig.start)
    p.add_argument("--doublings", type=int, default=ConvergenceConfig.doublings)
    cfg = ConvergenceConfig(**vars(p.parse_args(argv)))
    with mpmath.workdps(zetavol.WORKING_DPS):
        print(f"{'cutoff':>10} {'vol(P)':>24} {'bound':>10} {'minus reference':>16}")
        n = cfg.start
        for _ in range(cfg.doublings):
            v = zetavol.vol_P(n)
            print(f"{n:>10} {mpmath.nstr(v.value, 20):>24} {mpmath.nstr(v.error_bound, 3):>10} "
                  f"{mpmath.nstr(v.value - REFERENCE, 3):>16}")
            n *= 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
