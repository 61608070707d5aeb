"""critdyn command line: classify, dynatomic, verify, survey, dot, catalog."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .mapexpr import OUTSIDE_FAMILY, MapSyntaxError, classify_map, parse_map

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GLOBAL_DEFAULTS = {"max_period": 4, "format": "text", "jobs": 1}


class UsageError(Exception):
    pass


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_classify(args) -> int:
    rep = classify_map(args.map, args.max_period)
    if args.dot:
        if rep.graph is None:
            raise UsageError(f"{args.map}: {OUTSIDE_FAMILY}, no graph to draw")
        sys.stdout.write(rep.graph.to_dot())
        return EXIT_OK
    if rep.status == OUTSIDE_FAMILY:
        text = f"{rep.map}: {OUTSIDE_FAMILY} (no rational critical 3-cycle)"
    else:
        norm = "PCF class" if rep.pcf else f"a = {rep.a}"
        lines = [f"map: {rep.map}", f"normal form: {norm}",
                 f"classification: {rep.classification}",
                 f"vertices ({len(rep.vertices)}): {', '.join(rep.vertices)}",
                 "periodic: " + ", ".join(f"{p} (period {n})" for p, n in rep.periodic),
                 f"max period searched: {rep.max_period}"]
        text = "\n".join(lines)
    _emit(args, rep.to_json(), text)
    return EXIT_OK


def cmd_dynatomic(args) -> int:
    from .dynatomic import dynatomic_star, family_specialize, get_family

    if args.family:
        fam = get_family(args.family)
        target = family_specialize(fam, args.value) if args.value is not None else fam
        label = f"family {fam.id}" + (f" at {fam.param} = {args.value}" if args.value is not None else "")
    elif args.map:
        target = parse_map(args.map).phi
        label = str(target)
    else:
        raise UsageError("give a map or --family")
    ns = [args.n] if args.n else list(range(1, args.max_period + 1))
    out = {}
    for n in ns:
        if not 1 <= n <= 4:
            raise UsageError("n must lie in 1..4")
        out[str(n)] = str(dynatomic_star(target, n))
    _emit(args, {"target": label, "dynatomic": out},
          "\n".join([label] + [f"Phi*_{n} = {p}" for n, p in out.items()]))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .claims import all_passed, report, run_claims

    results = run_claims(args.selector, jobs=args.jobs)
    rep = report(results, args.selector)
    if args.format == "json":
        print(json.dumps(rep, indent=2, ensure_ascii=False, default=str))
    else:
        for r in results:
            print(f"{r.status.upper():20} {r.id}" + ("" if r.status in ("pass", "assumed from paper")
                                                     else f"  computed={r.computed!r} expected={r.expected!r}"))
        print(f"{rep['counts']}")
    if args.hasse_table and args.selector in ("hasse", "all"):
        from .graphcat import verify_hasse_closure

        print(verify_hasse_closure().as_table(), file=sys.stderr)
    return EXIT_OK if all_passed(results) else EXIT_FAIL


def cmd_survey(args) -> int:
    from .survey import run_survey

    if args.height < 1:
        raise UsageError("height bound must be >= 1")
    summary = run_survey(args.height, args.output, args.max_period, args.jobs)
    text = [f"parameters: {summary['parameters']} ({summary['computed']} computed this run)",
            "histogram: " + ", ".join(f"{k}: {v}" for k, v in summary["histogram"].items()),
            f"max vertex count: {summary['max_vertex_count']}"]
    text += [f"FINDING: {f}" for f in summary["findings"]] or ["findings: none"]
    _emit(args, summary, "\n".join(text))
    return EXIT_FAIL if summary["findings"] else EXIT_OK


def cmd_dot(args) -> int:
    from .graphcat import FunctionalGraph, catalog

    if args.catalog:
        cat = catalog()
        if args.catalog not in cat:
            raise UsageError(f"unknown catalog id {args.catalog!r}")
        g, name = cat[args.catalog].graph, args.catalog
    elif args.graph:
        try:
            with open(args.graph, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
        if not text.strip():
            raise UsageError(f"{args.graph}: empty graph file")
        try:
            g = FunctionalGraph.from_json(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{args.graph}: {exc}") from None
        name = "G"
    elif args.map:
        rep = classify_map(args.map, args.max_period)
        if rep.graph is None:
            raise UsageError(f"{args.map}: {OUTSIDE_FAMILY}, no graph to draw")
        g, name = rep.graph, rep.classification.split(":")[0] if rep.classification else "G"
    else:
        raise UsageError("give a map, --graph FILE or --catalog ID")
    sys.stdout.write(g.to_dot(name))
    return EXIT_OK


def cmd_catalog(args) -> int:
    from .graphcat.catalog import catalog, load_catalog_document

    doc = load_catalog_document()
    entries = list(catalog().values())
    if args.format == "json":
        print(json.dumps({"version": doc["version"], "checksum": doc["checksum"],
                          "entries": [{"id": e.id, "kind": e.kind, "genus": e.genus, "example": e.example,
                                       "graph": e.graph.to_json()} for e in entries]},
                         indent=2, ensure_ascii=False))
        return EXIT_OK
    print(f"catalog v{doc['version']} {doc['checksum']}")
    for e in entries:
        extra = e.example or (f"genus {e.genus}" if e.genus is not None else "")
        print(f"{e.id:5} {e.kind:13} {len(e.graph):3} vertices  {extra}")
    return EXIT_OK


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda k: argparse.SUPPRESS) if suppress else (lambda k: GLOBAL_DEFAULTS[k])
    p.add_argument("--max-period", type=int, default=d("max_period"),
                   help="largest period searched for periodic points (default 4)")
    p.add_argument("--format", choices=("json", "text"), default=d("format"))
    p.add_argument("--jobs", type=int, default=d("jobs"), help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="critdyn", description=__doc__)
    ap.add_argument("--version", action="version", version=f"critdyn {__version__}")
    _global_flags(ap, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = add("classify", cmd_classify, "preperiodic graph and classification of a map")
    p.add_argument("map", help='rational function of z, e.g. "(5*z^2-11*z+6)/(5*z^2)"')
    p.add_argument("--dot", action="store_true", help="print the graph as DOT instead")

    p = add("dynatomic", cmd_dynatomic, "dynatomic polynomials of a map or family")
    p.add_argument("map", nargs="?")
    p.add_argument("--family", help="A, B, C, D or T")
    p.add_argument("--value", help="specialize the family parameter")
    p.add_argument("-n", type=int, help="single index (default 1..max-period)")

    p = add("verify", cmd_verify, "run the claims manifest")
    p.add_argument("selector", nargs="?", default="all",
                   choices=("all", "dynatomic", "curves", "appendix", "hasse"))
    p.add_argument("--hasse-table", action="store_true", help="also print the closure case table to stderr")

    p = add("survey", cmd_survey, "classify phi_a for all a up to a height bound")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--output", "-o", required=True, help="JSON-lines file (resumed if present)")

    p = add("dot", cmd_dot, "DOT text for a map, a graph file or a catalog entry")
    p.add_argument("map", nargs="?")
    p.add_argument("--graph", help="graph JSON {vertices, successor, labels}")
    p.add_argument("--catalog", help="catalog id, e.g. N3H2")

    add("catalog", cmd_catalog, "list the catalog graphs")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    for k, v in GLOBAL_DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    if args.max_period < 1 or args.jobs < 1:
        print("critdyn: --max-period and --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, MapSyntaxError, ValueError) as exc:
        print(f"critdyn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
