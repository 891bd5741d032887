"""Command-line front end: ``gsierpinski <info|generate|degseq|zagreb|verify>``."""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_form as cf
from .base_graph import degree_classes, parse_edge_list
from .core import (
    DEFAULT_EXPLICIT_CAP,
    SierpinskiParams,
    enumerate_edge_ranks,
    enumerate_edges,
    format_word,
    iter_words,
)
from .errors import CapExceeded, SierpinskiError
from .verify import cross_check, histogram_bruteforce, incidence_degrees

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def _alpha_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsierpinski",
        description="Generalized Sierpinski graphs S(G,t): construction, degree "
        "sequences and general first Zagreb indices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="edge-list file, or - for stdin")
    common.add_argument("--t", "-t", type=_positive, default=1, help="dimension t (default 1)")
    common.add_argument(
        "--cap", type=_positive, default=DEFAULT_EXPLICIT_CAP,
        help=f"max vertices for explicit enumeration (default {DEFAULT_EXPLICIT_CAP})",
    )

    p = sub.add_parser("info", parents=[common], help="base graph and S(G,t) summary")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("generate", parents=[common], help="stream the edges of S(G,t)")
    p.add_argument("--format", choices=["ranks", "words", "dot"], default="ranks")

    p = sub.add_parser("degseq", parents=[common], help="closed-form degree histogram")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force census")

    p = sub.add_parser("zagreb", parents=[common], help="closed-form Z_alpha values")
    p.add_argument("--alpha", type=_alpha_list, default=[0, 1, 2, 3])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force sums")

    p = sub.add_parser("verify", parents=[common], help="cross-check closed forms against construction")
    p.add_argument("--alpha-max", type=int, default=4)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _read_graph(path: str):
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def cmd_info(params: SierpinskiParams, args, out) -> int:
    g = params.base
    classes = degree_classes(g).classes
    summary = {
        "base": {
            "n": g.n,
            "m": g.m,
            "min_degree": g.min_degree,
            "max_degree": g.max_degree,
            "degree_classes": {str(k): [v + 1 for v in vs] for k, vs in classes.items()},
        },
        "t": params.t,
        "vertices": str(cf.vertex_count(params)),
        "edges": str(cf.edge_count(params)),
        "min_degree": cf.min_degree(params),
        "max_degree": cf.max_degree(params),
    }
    if args.format == "json":
        out.write(json.dumps(summary, indent=2) + "\n")
        return EXIT_OK
    out.write(f"base graph: n={g.n} m={g.m} min_degree={g.min_degree} max_degree={g.max_degree}\n")
    out.write("degree classes:\n")
    for k, vs in classes.items():
        out.write(f"  {k}: {' '.join(str(v + 1) for v in vs)}\n")
    out.write(f"S(G,{params.t}):\n")
    out.write(f"  vertices: {summary['vertices']}\n")
    out.write(f"  edges: {summary['edges']}\n")
    out.write(f"  min_degree: {summary['min_degree']}\n")
    out.write(f"  max_degree: {summary['max_degree']}\n")
    return EXIT_OK


def cmd_generate(params: SierpinskiParams, args, out) -> int:
    params.check_cap()
    if args.format == "ranks":
        out.write(f"{cf.vertex_count(params)} {cf.edge_count(params)}\n")
        for u, v in enumerate_edge_ranks(params):
            out.write(f"{u + 1} {v + 1}\n")
    elif args.format == "words":
        out.write(f"{cf.vertex_count(params)} {cf.edge_count(params)}\n")
        for u, v in enumerate_edges(params):
            out.write(f"{format_word(u)} {format_word(v)}\n")
    else:
        out.write(f"graph S_{params.t} {{\n")
        for w in iter_words(params):
            out.write(f'  "{format_word(w)}";\n')
        for u, v in enumerate_edges(params):
            out.write(f'  "{format_word(u)}" -- "{format_word(v)}";\n')
        out.write("}\n")
    return EXIT_OK


def cmd_degseq(params: SierpinskiParams, args, out) -> int:
    hist = cf.degree_histogram_closed(params)
    oracle = histogram_bruteforce(params) if args.oracle else None
    match = oracle is None or oracle == hist
    if args.format == "json":
        doc = {"t": params.t, "histogram": hist.to_dict()}
        if oracle is not None:
            doc["oracle"] = oracle.to_dict()
            doc["match"] = match
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(hist.to_text())
        if oracle is not None:
            out.write("oracle: " + ("match" if match else "MISMATCH") + "\n")
            if not match:
                out.write(oracle.to_text())
    return EXIT_OK if match else EXIT_CHECK_FAILED


def cmd_zagreb(params: SierpinskiParams, args, out) -> int:
    table = cf.zagreb_table(params, args.alpha)
    oracle = None
    if args.oracle:
        degrees, _ = incidence_degrees(params)
        oracle = {a: sum(d**a for d in degrees) for a in args.alpha}
    match = oracle is None or oracle == table.values
    if args.format == "json":
        doc = {"t": params.t, "zagreb": table.to_dict()}
        if oracle is not None:
            doc["oracle"] = {str(a): str(v) for a, v in oracle.items()}
            doc["match"] = match
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(table.to_text())
        if oracle is not None:
            out.write("oracle: " + ("match" if match else "MISMATCH") + "\n")
    return EXIT_OK if match else EXIT_CHECK_FAILED


def cmd_verify(params: SierpinskiParams, args, out) -> int:
    report = cross_check(params, args.alpha_max, graph_id=args.input)
    out.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK if report.overall else EXIT_CHECK_FAILED


COMMANDS = {
    "info": cmd_info,
    "generate": cmd_generate,
    "degseq": cmd_degseq,
    "zagreb": cmd_zagreb,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        graph = _read_graph(args.input)
        params = SierpinskiParams(graph, args.t, args.cap)
        return COMMANDS[args.command](params, args, out)
    except CapExceeded as exc:
        print(f"error: {exc} (try degseq or zagreb without --oracle)", file=sys.stderr)
    except (SierpinskiError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
