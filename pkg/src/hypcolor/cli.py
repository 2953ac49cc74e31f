"""Command-line front end.  Every subcommand prints one JSON report on stdout."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from importlib import metadata
from pathlib import Path

from . import certify, codes, formats, gf2, graphs, toric, zetavol


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)  # label -> {"expected", "computed", "ok"}
    wall_time: float = 0.0
    version: str = ""

    def expect(self, label: str, expected, computed) -> None:
        self.verdicts[label] = {"expected": expected, "computed": computed, "ok": expected == computed}

    @property
    def ok(self) -> bool:
        return all(v["ok"] for v in self.verdicts.values())

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "verdicts": self.verdicts,
            "ok": self.ok,
            "wall_time": round(self.wall_time, 3),
            "version": self.version,
        }


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def _inputs(args: argparse.Namespace) -> dict:
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items()) if k != "func"}


def _load_graph(path: Path, labels: Path | None = None) -> graphs.FacetGraph:
    n, edges = formats.parse_graph(path.read_text())
    labs = formats.read_labels(labels) if labels else [(i,) for i in range(n)]
    if len(labs) != n:
        raise ValueError(f"{labels} has {len(labs)} labels for {n} vertices")
    return graphs.FacetGraph.from_edges(labs, edges)


def _load_coloring(path: Path) -> toric.Coloring:
    return toric.Coloring.from_matrix(formats.read_matrix(path))


def _long() -> tuple[graphs.FacetGraph, graphs.FreeCyclicAction]:
    return graphs.build_long_graph()


def _same_graph(a: graphs.FacetGraph, b: graphs.FacetGraph) -> bool:
    return a.n == b.n and a.adj == b.adj


# -- subcommands ------------------------------------------------------------


def cmd_build_long_graph(args, rep: RunReport) -> None:
    data = graphs.long_data()
    g, psi = graphs.build_long_graph(args.omega_index, data)
    rep.results.update(
        vertices=g.n,
        edges=g.num_edges(),
        degrees=sorted(set(g.degrees())),
        psi_orbits=len(psi.orbits()),
        omega=list(data.omega_candidates[args.omega_index]),
    )
    rep.expect("vertices", 272, g.n)
    rep.expect("stabilizer order", 7200, data.group170.order() // g.n)
    rep.expect("psi orbits of size 17", 16, sum(1 for o in psi.orbits() if len(o) == 17))
    if args.output:
        args.output.write_text(formats.format_graph(g.n, g.edges()))
        rep.results["graph_file"] = str(args.output)
    if args.labels:
        formats.write_labels(args.labels, g.labels)
    if args.psi:
        args.psi.write_text(json.dumps(list(psi.perm)) + "\n")


def cmd_build_f5_graph(args, rep: RunReport) -> None:
    g = graphs.build_f5_graph()
    deg = g.degrees()
    rep.results.update(vertices=g.n, degrees=sorted(set(deg)), ordered_pairs=sum(deg), unordered_edges=g.num_edges())
    rep.expect("vertices", 650, g.n)
    rep.expect("degree", [120], sorted(set(deg)))
    rep.expect("edges (ordered pairs)", 78000, sum(deg))
    if args.output:
        args.output.write_text(formats.format_graph(g.n, g.edges(), ordered=not args.unordered))
        rep.results["graph_file"] = str(args.output)
    if args.labels:
        formats.write_labels(args.labels, g.labels)


def cmd_census(args, rep: RunReport) -> None:
    g = graphs.build_f5_graph()
    census = graphs.five_clique_census(g)
    counts = graphs.face_counts(census.real_orbit)
    chi = sum((-1) ** k * c for k, c in enumerate(counts))
    rep.results.update(
        five_cliques=census.total,
        orbit_sizes=census.orbit_sizes,
        seed_clique=list(census.seed),
        real_face_counts=counts,
        euler_characteristic=chi,
    )
    rep.expect("5-cliques", 156000, census.total)
    rep.expect("orbit sizes", [78000, 78000], census.orbit_sizes)
    rep.expect("chi(X)", 650, chi)
    la = graphs.l_subgroup_analysis(g)
    rep.results.update(l_order=la.order, l_orbit_sizes=sorted(set(la.orbit_sizes)), l_orbits=len(la.orbits),
                       pairings=la.pairings)
    rep.expect("|L|", 125, la.order)
    rep.expect("pairings", 64, la.pairings)
    if args.spectral:
        sr = graphs.spectral_certificate(g, 10, graphs.pairing_partition(la))
        rep.results.update(
            spectrum_support=list(sr.spectrum_support),
            support_verified=sr.support_verified,
            rank_plus_10=sr.rank_plus_shift,
            hoffman_bound=sr.hoffman_bound,
            chromatic_number=sr.chromatic_number,
        )
        rep.expect("chromatic number", 13, sr.chromatic_number)


def cmd_good_sets(args, rep: RunReport) -> None:
    g, psi = _long()
    if args.mode == "count":
        if args.tier == "long":
            n = 0
            for i, s in enumerate(graphs.good_independent_sets(g, psi, mode="stream")):
                if not graphs.is_good_set(g, psi, s):
                    raise graphs.ConstructionMismatch(f"streamed set {s} is not good")
                n += 1
                if args.progress and i % 1_000_000 == 0:
                    print(f"progress: {i} sets", file=sys.stderr, flush=True)
        else:
            n = graphs.good_independent_sets(g, psi, mode="count")
        rep.results["count"] = n
        rep.expect("good-set count", certify.REFERENCE_GOOD_SETS, n)
    else:
        sample = graphs.good_independent_sets(g, psi, mode="sample", n=args.n, seed=args.seed)
        rep.results["sampled"] = len(sample)
        rep.expect("all sampled sets good", True, all(graphs.is_good_set(g, psi, s) for s in sample))
        if args.output:
            args.output.write_text(json.dumps([list(s) for s in sample]) + "\n")


def _pick_good_set(args, g, psi) -> tuple[int, ...]:
    if args.good_set:
        return tuple(json.loads(args.good_set.read_text())[args.index])
    return graphs.good_independent_sets(g, psi, mode="sample", n=args.index + 1, seed=args.seed)[args.index]


def cmd_color(args, rep: RunReport) -> None:
    if args.kind == "f5":
        ctx = certify.Context()
        c = ctx.f5_coloring
    else:
        g, psi = _long()
        good = _pick_good_set(args, g, psi)
        rep.results["good_set"] = list(good)
        c = toric.basis_coloring(g, good, psi) if args.kind == "basis" else toric.qr_coloring(g, good, psi, args.k)
        if args.kind == "qr":
            rep.results["type"] = codes.classify_type(args.k)
    lam = c.characteristic_matrix
    rep.results.update(m=c.m, facets=len(c.colors), rank=gf2.rank(lam), distinct_colors=len(set(c.colors)))
    if args.output:
        formats.write_matrix(args.output, lam)
        rep.results["coloring_file"] = str(args.output)
    if args.map:
        args.map.write_text(json.dumps({str(v + 1): gf2.unpack(col, c.m) for v, col in enumerate(c.colors)}) + "\n")


def cmd_validate(args, rep: RunReport) -> None:
    g = _load_graph(args.graph)
    c = _load_coloring(args.coloring)
    ok, bad = toric.validate_coloring(g, c, args.clique_bound)
    rep.results.update(valid=ok, clique_bound=args.clique_bound)
    if bad:
        rep.results["violation"] = {"clique": [v + 1 for v in bad.clique],
                                    "colors": [gf2.unpack(x, c.m) for x in bad.colors]}
    w = toric.orientability_witness(c)
    rep.results["orientation_witness"] = None if w is None else gf2.unpack(w, c.m)
    rep.expect("valid", True, ok)


def cmd_b1(args, rep: RunReport) -> None:
    g = _load_graph(args.graph)
    c = _load_coloring(args.coloring)
    if args.coordinate_words:
        contrib = toric.betti_contributions(g, c, toric.coordinate_words(c))
        rep.results["coordinate_word_contributions"] = [b for _, b in contrib]
        return
    supports = [gf2.weight(w) for w in toric.support_masks(c)]
    b1 = toric.first_betti(g, c)
    rep.results.update(b1=b1, words=len(supports), min_support=min(supports))
    if args.expect_zero:
        rep.expect("b1", 0, b1)


def cmd_ledger(args, rep: RunReport) -> None:
    g = _load_graph(args.graph) if args.graph else None
    c = _load_coloring(args.coloring)
    psi = R = None
    if args.quotient != 1:
        lg, psi = _long()
        if g is not None and not _same_graph(g, lg):
            raise ValueError("a quotient is only defined for the Long graph")
        R = codes.qr_tables().R
        c.shift = args.k
    L = toric.ledger(g, c, args.facets, args.prisms_per_block, args.quotient, psi, R, with_volume=not args.no_volume)
    rep.results.update(L.as_dict())


def _volume_at(prisms, cutoff):
    return zetavol.vol_of_prisms(prisms, cutoff) if prisms is not None else zetavol.vol_P(cutoff)


def cmd_volume(args, rep: RunReport) -> None:
    # --tolerance is relative to the value; without --cutoff the cutoff is
    # doubled from 10^4 until the tail bound meets it
    cutoff = args.cutoff
    if cutoff is None:
        cutoff = 10_000
        z = _volume_at(args.prisms, cutoff)
        while z.error_bound > args.tolerance * abs(z.value) and cutoff < zetavol.MAX_AUTO_CUTOFF:
            cutoff *= 2
            z = _volume_at(args.prisms, cutoff)
    else:
        z = _volume_at(args.prisms, cutoff)
    rep.results.update(z.as_dict())
    rep.results["cutoff"] = cutoff
    rep.expect("relative error bound within tolerance", True, bool(z.error_bound <= args.tolerance * abs(z.value)))


def cmd_certify_all(args, rep: RunReport) -> None:
    only = [int(x) for x in args.only.split(",")] if args.only else None
    echo = (lambda line: print(line, file=sys.stderr, flush=True)) if not args.quiet else None
    reports = certify.run_all(certify.Context(args.seed), tier=args.tier, only=only, echo=echo)
    rep.results["criteria"] = [r.as_dict() for r in reports]
    for r in reports:
        rep.expect(f"criterion {r.number}", True, r.ok)


def cmd_tables(args, rep: RunReport) -> None:
    t = codes.qr_tables()
    rep.results.update(
        A=t.A.to_strings(), B=t.B.to_strings(), R=t.R.to_strings(), w=gf2.unpack(t.w, 9),
        sha256=codes.tables_digest(),
    )
    rep.expect("digest", codes.TABLES_SHA256, codes.tables_digest())


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypcolor", description=__doc__)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="accepted for interface stability; computations run serially and do not depend on it")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build-long-graph", help="facet graph of the [5,3,3,3] construction")
    s.add_argument("-o", "--output", type=Path)
    s.add_argument("--labels", type=Path, help="JSON vertex -> 10-point set")
    s.add_argument("--psi", type=Path, help="JSON list: the order-17 symmetry as a vertex permutation")
    s.add_argument("--omega-index", type=int, default=0, choices=(0, 1))
    s.set_defaults(func=cmd_build_long_graph)

    s = sub.add_parser("build-f5-graph", help="graph on K(v,v)=3 vectors of GF(5)^5")
    s.add_argument("-o", "--output", type=Path)
    s.add_argument("--labels", type=Path)
    s.add_argument("--unordered", action="store_true", help="list each edge once instead of in both directions")
    s.set_defaults(func=cmd_build_f5_graph)

    s = sub.add_parser("census", help="5-cliques, Euler characteristic, L analysis on the GF(5) graph")
    s.add_argument("--spectral", action="store_true", help="also run the Hoffman certificate")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("good-sets", help="good independent sets of the Long graph")
    s.add_argument("--mode", choices=("count", "sample"), default="count")
    s.add_argument("--tier", choices=("default", "long"), default="default",
                   help="long: enumerate and verify every set")
    s.add_argument("--n", type=int, default=1000)
    s.add_argument("--seed", type=int, default=certify.GOOD_SET_SEED)
    s.add_argument("--progress", action="store_true")
    s.add_argument("-o", "--output", type=Path)
    s.set_defaults(func=cmd_good_sets)

    s = sub.add_parser("color", help="write a characteristic matrix")
    s.add_argument("--kind", choices=("basis", "qr", "f5"), default="qr")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--good-set", type=Path, help="JSON list of good sets (from good-sets -o)")
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--seed", type=int, default=certify.GOOD_SET_SEED)
    s.add_argument("-o", "--output", type=Path)
    s.add_argument("--map", type=Path, help="JSON facet -> color vector")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("validate", help="check independence of colors on cliques")
    s.add_argument("--graph", type=Path, required=True)
    s.add_argument("--coloring", type=Path, required=True)
    s.add_argument("--clique-bound", type=int, default=5)
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("b1", help="first Betti number of the real toric space")
    s.add_argument("--graph", type=Path, required=True)
    s.add_argument("--coloring", type=Path, required=True)
    s.add_argument("--coordinate-words", action="store_true", help="diagnostic: rows of the matrix only")
    s.add_argument("--expect-zero", action="store_true")
    s.set_defaults(func=cmd_b1)

    s = sub.add_parser("ledger", help="copy, prism and volume counts")
    s.add_argument("--graph", type=Path)
    s.add_argument("--coloring", type=Path, required=True)
    s.add_argument("--facets", type=int, help="facets per piece (default: vertex count)")
    s.add_argument("--prisms-per-block", type=int, default=toric.PRISMS_PER_Q)
    s.add_argument("--quotient", type=int, default=1)
    s.add_argument("--k", type=int, default=1, help="shift used to build the coloring (for the quotient check)")
    s.add_argument("--no-volume", action="store_true")
    s.set_defaults(func=cmd_ledger)

    s = sub.add_parser("volume", help="vol(P) or n vol(P)")
    s.add_argument("--prisms", type=int)
    s.add_argument("--cutoff", type=int, help="Euler-product cutoff (default: chosen from --tolerance)")
    s.add_argument("--tolerance", type=float, default=1e-9, help="relative error target")
    s.set_defaults(func=cmd_volume)

    s = sub.add_parser("certify-all", help="run every acceptance criterion")
    s.add_argument("--tier", choices=("default", "long"), default="default")
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.add_argument("--seed", type=int, default=certify.GOOD_SET_SEED)
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_certify_all)

    s = sub.add_parser("tables", help="dump the transcribed code tables")
    s.add_argument("action", choices=("dump",))
    s.set_defaults(func=cmd_tables)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    rep = RunReport(command=args.command, inputs=_inputs(args), version=_version())
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except (OSError, ValueError, ArithmeticError, graphs.ConstructionMismatch) as exc:
        rep.results["error"] = f"{args.command}: {type(exc).__name__}: {exc}"
        rep.verdicts["completed"] = {"expected": True, "computed": False, "ok": False}
    rep.wall_time = time.perf_counter() - t0
    print(json.dumps(rep.as_dict(), indent=1, default=str))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
