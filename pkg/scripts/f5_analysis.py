"""Everything computed on the GF(5) graph, in one pass."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from hypcolor import coxeter, graphs, toric
from hypcolor.certify import Context


@dataclass
class F5Config:
    with_group: bool = True  # the closure of Q takes about 20 s
    with_spectral: bool = True


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--no-group", dest="with_group", action="store_false")
    p.add_argument("--no-spectral", dest="with_spectral", action="store_false")
    cfg = F5Config(**vars(p.parse_args(argv)))
    ctx = Context()
    g = ctx.f5_graph
    out: dict = {"vertices": g.n, "degree": sorted(set(g.degrees())), "unordered_edges": g.num_edges()}
    t = time.perf_counter()
    if cfg.with_group:
        q = ctx.q_group
        out["Q_order"] = q.order()
        out["v0_orbit"] = len(q.orbit(coxeter.V0))
    census = graphs.five_clique_census(g)
    counts = graphs.face_counts(census.real_orbit)
    out.update(five_cliques=census.total, clique_orbits=census.orbit_sizes, real_face_counts=counts,
               euler_characteristic=sum((-1) ** k * c for k, c in enumerate(counts)))
    a = ctx.l_analysis
    out.update(L_order=a.order, L_orbits=len(a.orbits), pairings=a.pairings)
    c = ctx.f5_coloring
    out["dual_code_coloring_valid"] = toric.validate_coloring(g, c)[0]
    out["dual_code_coloring_b1"] = toric.first_betti(g, c)
    if cfg.with_spectral:
        rep = graphs.spectral_certificate(g, 10, graphs.pairing_partition(a))
        out.update(spectrum=list(rep.spectrum_support), rank_A_plus_10I=rep.rank_plus_shift,
                   chromatic_number=rep.chromatic_number)
    out["seconds"] = round(time.perf_counter() - t, 1)
    print(json.dumps(out, indent=1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
