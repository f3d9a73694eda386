"""Command-line front end: module subcommands and the reproduction report."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from . import checks, fixtures

DEFAULT_SEED = checks.DEFAULT_SEED


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(checks.jsonable(obj), indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fractions(values: list[str]) -> list[Fraction]:
    return [Fraction(v) for v in values]


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PEZZO_THREADS", "1")))
    except ValueError:
        return 1


# Subcommands


def cmd_lattice(args) -> int:
    from . import lattice

    cat = lattice.build_catalogs(args.n)
    out = {"n": args.n, "lines": len(cat.line_names), "positive_roots": len(cat.roots)}
    if args.n in (6, 7):
        out["weyl_order"] = lattice.weyl_group_order(args.n)
    if args.cremona and args.n in (6, 7):
        rep = lattice.verify_cremona_matrices(args.n)
        out["cremona"] = {"matches": rep.matches, "roots": len(rep.rows), "involution": rep.involution,
                          "fixed_dimension": rep.fixed_dimension, "mismatches": rep.mismatches()}
    if args.field_count:
        fc = lattice.finite_field_complement_count(6, args.field_count)
        out["field_count"] = {"q": fc.q, "count": fc.count, "polynomial": fc.polynomial}
    _emit(out, args.out)
    return 0


def cmd_subsystems(args) -> int:
    from . import subsystems

    inc = subsystems.build_incidence(args.n)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(inc.to_csv())
    rep = subsystems.incidence_rank(args.n)
    _emit({"n": args.n, "subsystems": inc.shape[1], "shape": rep.shape, "rank": rep.rank,
           "modular_ranks": rep.modular}, args.out)
    return 0


def cmd_graph(args) -> int:
    from . import pezzotope

    g = checks.graph(args.n)
    cx = checks.complex_of(args.n)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["u", "v"])
            for e in sorted(tuple(sorted(e)) for e in g.edges):
                w.writerow([e[0] + 1, e[1] + 1])
    _emit({"n": args.n, "vertices": g.size, "edges": len(g.edges), "census": g.census,
           "face_counts": cx.face_counts, "f_vector": pezzotope.vector_f(cx)}, args.out)
    return 0


def cmd_homology(args) -> int:
    from . import pezzotope

    rep = pezzotope.homology(checks.complex_of(args.n))
    _emit({"n": args.n, "betti_rational": rep.betti_rational, "betti_mod_p": rep.betti_mod_p,
           "euler": rep.euler, "consistent": rep.consistent}, args.out)
    return 0


def cmd_hull(args) -> int:
    from . import pezzotope

    rep = pezzotope.hull_check()
    _emit({"f_vector": rep.f_vector, "simplicial": rep.simplicial, "facets": len(rep.facets),
           "facets_are_amplitude_terms": pezzotope.amplitude_facets_match(rep)}, args.out)
    return 0


def cmd_regions(args) -> int:
    from . import realdp, scatter

    matrix = {"example": fixtures.EXAMPLE_CUBIC_MATRIX, "pentagon": scatter.CONVEX_PENTAGON,
              "seven": checks.SEVEN_POINTS}.get(args.config) or json.loads(args.config)
    if len(matrix[0]) == 7 or args.sign_vectors:
        _emit({"points": len(matrix[0]),
               "sign_vectors": realdp.sample_sign_vectors(matrix, seed=args.seed), "evidence_only": True}, args.out)
        return 0
    census = realdp.blowup_census(matrix)
    out = {"vef": [census.v, census.e, census.f], "sizes": census.sizes(),
           "sign_vectors": census.sign_vector_count}
    if args.faces:
        out["faces"] = census.report()["faces"]
    if args.compare:
        diff = realdp.census_fixture_compare(census)
        out["fixture"] = {"missing": diff.missing, "unexpected": diff.unexpected}
        ds = realdp.double_six_check(census)
        out["double_six"] = {"found": ds.double_six, "unique": ds.unique, "pentagons": ds.pentagon_counts}
    _emit(out, args.out)
    return 0


def cmd_u(args) -> int:
    names = {6: ["uforms.equations_e6", "uforms.parametrization", "uforms.jacobian_rank", "uforms.routes_agree"],
             7: ["uforms.equations_e7"], 5: ["uforms.equations_m05", "uforms.sign_census"]}[args.n]
    recs = [checks.run_check(checks.BY_NAME[n], args.seed) for n in names]
    _emit([r.as_dict(timing=False) for r in recs], args.out)
    return 0 if all(r.status == "pass" for r in recs) else 1


def cmd_omega(args) -> int:
    from . import uforms

    out = {}
    if args.eval:
        x = _fractions(args.eval)
        out["chart"] = uforms.omega_chart_eval(x)
        out["closed_form"] = uforms.omega_closed_form(x)
    if args.orbit or not args.eval:
        out["orbit"] = uforms.omega_orbit_count()
    _emit(out, args.out)
    return 0


def cmd_amplitude(args) -> int:
    from . import amplitudes, scatter

    amp = {"e6": amplitudes.e6_amplitude, "e7": amplitudes.e7_amplitude,
           "m6": amplitudes.biadjoint_m6}.get(args.which)
    out = {"which": args.which}
    if args.which == "m05":
        out["terms"] = len(fixtures.M05_AMPLITUDE_TERMS)
        if args.eval:
            out["value"] = scatter.m05_amplitude(_fractions(args.eval))
    else:
        a = amp()
        out["terms"] = len(a.terms)
        if args.eval:
            out["value"] = a.evaluate(_fractions(args.eval))
        if args.list:
            out["term_list"] = a.sorted_terms()
    _emit(out, args.out)
    return 0


def cmd_solve(args) -> int:
    from . import scatter

    sys_ = scatter.model(args.model)
    if args.s:
        params = np.array([complex(Fraction(v)) for v in args.s])
    else:
        rng = np.random.default_rng(args.seed)
        params = rng.normal(size=sys_.nparams) + 1j * rng.normal(size=sys_.nparams)
    sol = scatter.monodromy_solve(sys_, sys_.target, seed=args.seed, params=params)
    rep = sol.report()
    if args.report != "full":
        rep.pop("solutions", None)
    _emit(rep, args.out)
    return 0 if sol.found == sys_.target else 1


def cmd_trop(args) -> int:
    name = {"gr36": "tropical.gr36", "gr37": "tropical.gr37", "yoshida": "tropical.yoshida"}[args.which]
    rec = checks.run_check(checks.BY_NAME[name], args.seed)
    _emit(rec.as_dict(timing=False), args.out)
    return 0 if rec.status == "pass" else 1


def cmd_fixtures(args) -> int:
    ok = fixtures.verify_checksums()
    _emit([{"name": fx.name, "anchor": fx.anchor, "version": fx.version, "checksum": fx.checksum(),
            "intact": ok[name]} for name, fx in fixtures.REGISTRY.items()], args.out)
    return 0 if all(ok.values()) else 1


def _run_named(name: str, seed: int) -> checks.Record:
    return checks.run_check(checks.BY_NAME[name], seed)


def cmd_verify_all(args) -> int:
    only = args.only or None
    threads = _threads()

    def show(rec: checks.Record) -> None:
        if not args.quiet:
            print(f"{rec.status:14s} {rec.name:34s} {rec.seconds:8.1f}s", file=sys.stderr, flush=True)

    if threads > 1:
        todo = checks.select(args.profile, only)
        run = [c for c in todo if not (args.profile == "fast" and c.slow and not only)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            done = dict(zip([c.name for c in run], pool.map(_run_named, [c.name for c in run],
                                                            [args.seed] * len(run))))
        records = []
        for c in todo:
            rec = done.get(c.name) or checks.Record(c.name, c.criterion, c.target, None, "skipped-slow", 0.0,
                                                    args.seed)
            show(rec)
            records.append(rec)
    else:
        records = checks.verify_all(args.profile, args.seed, only, show)
    report = {
        "schema_version": checks.SCHEMA_VERSION,
        "profile": args.profile,
        "seed": args.seed,
        "summary": checks.summary(records),
        "checks": [r.as_dict(timing=not args.no_timing) for r in records],
    }
    _emit(report, args.out)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["name", "criterion", "status", "seconds"])
        for r in records:
            w.writerow([r.name, r.criterion if r.criterion is not None else "", r.status, f"{r.seconds:.3f}"])
        with open(args.csv, "w") as fh:
            fh.write(buf.getvalue())
    return 1 if any(r.status == "fail" for r in records) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pezzo", description="Del Pezzo moduli toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--out", help="write the JSON report to this path")
        sp.set_defaults(func=fn)
        return sp

    sp = add("lattice", cmd_lattice, "line and root catalogs, Weyl orders, Cremona matrices")
    sp.add_argument("--n", type=int, default=6, choices=[4, 5, 6, 7])
    sp.add_argument("--cremona", action="store_true")
    sp.add_argument("--field-count", type=int, metavar="Q")

    sp = add("subsystems", cmd_subsystems, "A2x3 / A1x7 subsystems and incidence ranks")
    sp.add_argument("--n", type=int, default=6, choices=[6, 7])
    sp.add_argument("--csv", help="export the incidence matrix")

    sp = add("graph", cmd_graph, "pezzotope graph, edge census and clique complex")
    sp.add_argument("--n", type=int, default=6, choices=[6, 7])
    sp.add_argument("--csv", help="export the edge list")

    sp = add("homology", cmd_homology, "Betti numbers of the clique complex")
    sp.add_argument("--n", type=int, default=7, choices=[6, 7])

    add("hull", cmd_hull, "convex hull of the E6 realization")

    sp = add("regions", cmd_regions, "real census of a point configuration")
    sp.add_argument("--config", default="example", help="example | pentagon | seven | JSON 3xn matrix")
    sp.add_argument("--faces", action="store_true")
    sp.add_argument("--compare", action="store_true", help="compare with the transcribed face lists")
    sp.add_argument("--sign-vectors", action="store_true", help="sampling count only")

    sp = add("u", cmd_u, "verify u-equation systems")
    sp.add_argument("--n", type=int, default=6, choices=[5, 6, 7])

    sp = add("omega", cmd_omega, "canonical form: chart evaluation and orbit size")
    sp.add_argument("--eval", nargs=4, metavar="X")
    sp.add_argument("--orbit", action="store_true")

    sp = add("amplitude", cmd_amplitude, "facet amplitudes")
    sp.add_argument("which", choices=["e6", "e7", "m6", "m05"])
    sp.add_argument("--eval", nargs="+", metavar="S")
    sp.add_argument("--list", action="store_true")

    sp = add("solve", cmd_solve, "likelihood critical points by monodromy")
    sp.add_argument("--model", required=True, choices=["y35", "s5", "s6", "s6e", "y36", "y37", "ae6", "yoshida"])
    sp.add_argument("--s", nargs="+", metavar="S", help="parameters (default: seeded random complex)")
    sp.add_argument("--report", choices=["summary", "full"], default="summary")

    sp = add("trop", cmd_trop, "chirotopal tropical filters")
    sp.add_argument("which", choices=["gr36", "gr37", "yoshida"])

    add("fixtures", cmd_fixtures, "fixture registry with anchors and checksums")

    sp = add("verify-all", cmd_verify_all, "run the reproduction checks")
    sp.add_argument("--profile", choices=["fast", "full"], default="fast")
    sp.add_argument("--only", nargs="+", metavar="CHECK", help="check names or module prefixes")
    sp.add_argument("--csv", help="also write a CSV summary")
    sp.add_argument("--no-timing", action="store_true", help="omit timing fields")
    sp.add_argument("--quiet", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
