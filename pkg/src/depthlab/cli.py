"""``depthlab`` command line: gen, measure, extract, verify, bounds."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from depthlab import bounds
from depthlab.constructions import chain_graph, grohe_graph, ladder
from depthlab.errors import DepthLabError
from depthlab.extraction import extract_induced_path, guarantee_met
from depthlab.graph import load_graph
from depthlab.harness import SUITES, run_suite
from depthlab.params import measure as depth_measure
from depthlab.pathwidth import interval_model, pathwidth_with_ordering

EXIT_USAGE = 2
EXIT_FAIL = 1


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def parse_params(text: str) -> dict[str, int]:
    """``r=2,k=3`` -> {"r": 2, "k": 3}."""
    out = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected key=value, got {item!r}")
        out[key.strip()] = int(value)
    return out


def parse_suite_param(item: str) -> tuple[str, object]:
    """``key=value`` for verify; values with commas become int lists."""
    key, sep, value = item.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {item!r}")
    value = value.strip()
    if "," in value or value == "":
        return key.strip(), _int_list(value)
    try:
        return key.strip(), int(value)
    except ValueError:
        try:
            return key.strip(), float(value)
        except ValueError:
            return key.strip(), value


def cmd_gen(args) -> int:
    p = parse_params(args.params or "")
    if args.family == "grohe":
        doc = grohe_graph(p["r"], p["k"]).to_json()
        doc.update(family="grohe", params={"r": p["r"], "k": p["k"]})
    elif args.family == "chain":
        ell = p.get("l", p.get("ell"))
        if ell is None:
            raise KeyError("l")
        doc = chain_graph(ell, p["k"]).to_json()
    else:
        t = p.get("t", p.get("k"))
        if t is None:
            raise KeyError("t")
        doc = ladder(t).to_json()
        doc.update(family="ladder", params={"t": t})
    text = json.dumps(doc, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_measure(args) -> int:
    graph, _ = load_graph(args.input)
    if args.measure == "pw":
        value, order = pathwidth_with_ordering(graph)
        cert = {"ordering": order, "intervals": [list(iv) for iv in interval_model(graph, order)]}
    else:
        terminals = _int_list(args.set or "") if args.measure == "tds" else None
        value, certificate = depth_measure(graph, args.measure, terminals)
        cert = certificate.to_json()
    print(json.dumps({"measure": args.measure, "value": value, "certificate": cert}, sort_keys=True))
    return 0


def cmd_extract(args) -> int:
    graph, _ = load_graph(args.input)
    path = _int_list(args.path)
    found = extract_induced_path(graph, path, args.k)
    ok = guarantee_met(len(found), len(path), args.k)
    print(json.dumps({
        "path": list(found),
        "order": len(found),
        "n": len(path),
        "k": args.k,
        "guarantee": "(2*order)^k >= n",
        "guarantee_met": ok,
    }, sort_keys=True))
    return 0 if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    params = dict(args.param or [])
    report = run_suite(args.suite, params)
    if args.format == "json":
        print(report.to_json(args.timings))
    elif args.format == "csv":
        sys.stdout.write(report.to_csv(args.timings))
    else:
        print(report.to_table(args.verbose))
    return 0 if report.ok else EXIT_FAIL


def cmd_bounds(args) -> int:
    if args.format == "csv":
        sys.stdout.write(bounds.bound_table_csv(args.k_max, args.t_max))
    else:
        print(json.dumps(bounds.bound_rows(args.k_max, args.t_max)))
    report = bounds.verify_f_closed_form(args.k_max, args.t_max)
    for line in report.failures:
        print(line, file=sys.stderr)
    return 0 if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="depthlab", description="Exact treedepth, 2-treedepth and pathwidth on small graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a construction as JSON")
    gen.add_argument("--family", choices=["grohe", "chain", "ladder"], required=True)
    gen.add_argument("--params", default="", help="grohe: r=..,k=..  chain: l=..,k=..  ladder: t=..")
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    ms = sub.add_parser("measure", help="exact parameter with certificate")
    ms.add_argument("--input", required=True, help="graph file (.json or text format)")
    ms.add_argument("--measure", choices=["td", "td2", "tds", "pw"], required=True)
    ms.add_argument("--set", default="", help="terminal set for tds, e.g. 0,3,4")
    ms.set_defaults(func=cmd_measure)

    ex = sub.add_parser("extract", help="long induced path from a long path")
    ex.add_argument("--input", required=True)
    ex.add_argument("--path", required=True, help="comma-separated vertex sequence")
    ex.add_argument("--k", type=int, required=True)
    ex.set_defaults(func=cmd_extract)

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("suite", choices=sorted(SUITES))
    vf.add_argument("--format", choices=["table", "csv", "json"], default="table")
    vf.add_argument("--param", action="append", type=parse_suite_param, metavar="KEY=VALUE")
    vf.add_argument("--timings", action="store_true", help="include per-case wall-clock seconds")
    vf.add_argument("--verbose", action="store_true", help="list passing cases in table output")
    vf.set_defaults(func=cmd_verify)

    bd = sub.add_parser("bounds", help="f(k,t) tables")
    bsub = bd.add_subparsers(dest="bounds_command", required=True)
    table = bsub.add_parser("table")
    table.add_argument("--k-max", type=int, default=12)
    table.add_argument("--t-max", type=int, default=24)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.set_defaults(func=cmd_bounds)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (DepthLabError, KeyError, ValueError, OSError) as exc:
        label = f"missing parameter {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"depthlab: error: {label}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
