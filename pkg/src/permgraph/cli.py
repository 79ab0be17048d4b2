"""Command-line surface. One subcommand per capability, batch-friendly.

Conventions shared by every subcommand:
  exit 0   success / affirmative verdict
  exit 1   negative verdict (check says no, classify finds a non-member)
  exit 2   bad input or capacity exceeded (message on stderr)

Graphs are read from a file argument or stdin ("-" or omitted); the format
is detected from the bytes (graph6 contains no whitespace, edge lists do).
Small inputs such as permutations and boxcar sequences are inline
arguments.  All output is deterministic: rerunning a command with the same
input and flags produces byte-identical output.  PERMGRAPH_MAX_N sets the
default capacity bound; --max-n overrides it per invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .blowups import apply_blowup, format_blowup_spec, minimal_base, parse_blowup_spec
from .boxcars import (
    boxcar_blowup_spec,
    boxcar_graph,
    classify_cubic,
    format_sequence,
    parse_sequence,
    realizer_for_path_spec,
    regular_family,
    regular_family_realizer,
)
from .enumeration import (
    JSON_SCHEMA,
    count_cubic,
    crosscheck,
    crosscheck_to_json,
    format_crosscheck_text,
    generate_graphs,
)
from .errors import CapacityError, MalformedInputError, PermgraphError
from .generation import MAX_CENSUS_ORDER, connected_cubic_graphs
from .graphs import (
    Graph,
    decode_graph6,
    encode_graph6,
    format_edgelist,
    parse_edgelist,
    to_dot,
)
from .permutations import (
    RealizerCertificate,
    derive_forbidden_catalog,
    find_realizer,
    format_catalog,
    format_permutation,
    graph_from_permutation,
    is_cubic_permutation_graph_fast,
    load_forbidden_catalog,
    parse_permutation,
    CATALOG_ORDER_CEILING,
    DEFAULT_MAX_REALIZER_ORDER,
)
from .report import write_report

ENV_MAX_N = "PERMGRAPH_MAX_N"


# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------


def _read_graph_text(source: str | None) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="ascii")


def _parse_graph(text: str) -> Graph:
    stripped = text.strip()
    if not stripped:
        raise MalformedInputError("empty graph input")
    # graph6 is a single token with no spaces; edge lists always contain them.
    if any(ch.isspace() for ch in stripped):
        return parse_edgelist(stripped)
    return decode_graph6(stripped)


def _format_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return encode_graph6(g) + "\n"
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        payload = {
            "schema": JSON_SCHEMA,
            "n": g.n,
            "edges": [[u, v] for u, v in sorted(g.edges)],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise MalformedInputError(f"unknown format {fmt!r}")


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="ascii")


def _max_n(args: argparse.Namespace) -> int | None:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return None
    if not raw.isdigit() or int(raw) <= 0:
        raise MalformedInputError(f"{ENV_MAX_N} must be a positive integer, got {raw!r}")
    return int(raw)


def _certificate_text(cert: RealizerCertificate) -> str:
    pairs = " ".join(f"{v}:{p}" for v, p in sorted(cert.vertex_to_position.items()))
    return f"realizer: {format_permutation(cert.pi)}\nvertex-to-position: {pairs}\n"


def _certificate_payload(cert: RealizerCertificate) -> dict:
    return {
        "realizer": list(cert.pi.values),
        "vertex_to_position": {str(v): p for v, p in sorted(cert.vertex_to_position.items())},
    }


def _parse_range(text: str) -> tuple[int, int]:
    """"4..30" or a single value "22"."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
    else:
        lo_text = hi_text = text
    if not (lo_text.isdigit() and hi_text.isdigit()):
        raise MalformedInputError(f"bad range {text!r}; expected N or LO..HI")
    lo, hi = int(lo_text), int(hi_text)
    if lo > hi:
        raise MalformedInputError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_check(args: argparse.Namespace) -> int:
    g = _parse_graph(_read_graph_text(args.graph))
    bound = _max_n(args)
    max_order = bound if bound is not None else DEFAULT_MAX_REALIZER_ORDER
    cert = find_realizer(g, max_order=max_order)
    if args.json:
        payload: dict = {"schema": JSON_SCHEMA, "permutation_graph": cert is not None}
        if cert is not None and args.certificate:
            payload.update(_certificate_payload(cert))
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    else:
        text = f"permutation-graph: {'yes' if cert is not None else 'no'}\n"
        if cert is not None and args.certificate:
            text += _certificate_text(cert)
        _emit(text, args.output)
    return 0 if cert is not None else 1


def _cmd_from_perm(args: argparse.Namespace) -> int:
    g = graph_from_permutation(parse_permutation(args.permutation))
    _emit(_format_graph(g, args.format), args.output)
    return 0


def _cmd_boxcar(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.sequence)
    if args.certificate:
        spec = boxcar_blowup_spec(seq)
        cert = realizer_for_path_spec(spec.parts)
        if args.json:
            payload = {"schema": JSON_SCHEMA, "sequence": list(seq)}
            payload.update(_certificate_payload(cert))
            _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
        else:
            _emit(_certificate_text(cert), args.output)
        return 0
    _emit(_format_graph(boxcar_graph(seq), args.format), args.output)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _parse_graph(_read_graph_text(args.graph))
    bound = _max_n(args)
    if bound is not None and g.n > bound:
        raise CapacityError(f"graph order {g.n} exceeds bound {bound}")
    outcome = classify_cubic(g)
    if args.json:
        payload = {
            "schema": JSON_SCHEMA,
            "kind": outcome.kind,
            "sequence": list(outcome.sequence) if outcome.sequence is not None else None,
            "witness": outcome.witness,
            "witness_vertices": sorted(outcome.witness_vertices)
            if outcome.witness_vertices is not None
            else None,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    else:
        if outcome.kind == "boxcar":
            text = f"boxcar {format_sequence(outcome.sequence)}\n"
        elif outcome.kind == "not-permutation":
            text = f"not-permutation: {outcome.witness}"
            if outcome.witness_vertices is not None:
                text += " at vertices " + " ".join(map(str, sorted(outcome.witness_vertices)))
            text += "\n"
        else:
            text = outcome.kind + "\n"
        _emit(text, args.output)
    return 1 if outcome.kind == "not-permutation" else 0


def _cmd_family(args: argparse.Namespace) -> int:
    if args.certificate:
        cert = regular_family_realizer(args.r, args.n)
        if args.json:
            payload = {"schema": JSON_SCHEMA, "r": args.r, "n": args.n}
            payload.update(_certificate_payload(cert))
            _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
        else:
            _emit(_certificate_text(cert), args.output)
        return 0
    _emit(_format_graph(regular_family(args.r, args.n), args.format), args.output)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.orders)
    evens = [n for n in range(lo, hi + 1) if n % 2 == 0 and n >= 4]
    if args.list:
        graphs = [(n, g) for n in evens for g in generate_graphs(n)]
        if args.json:
            payload = {
                "schema": JSON_SCHEMA,
                "graphs": [{"n": n, "graph6": encode_graph6(g)} for n, g in graphs],
            }
            _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
        else:
            _emit("".join(encode_graph6(g) + "\n" for _, g in graphs), args.output)
        return 0
    counts = {n: count_cubic(n) for n in evens}
    if args.json:
        payload = {"schema": JSON_SCHEMA, "counts": {str(n): c for n, c in counts.items()}}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    else:
        lines = ["n\ta(n)"] + [f"{n}\t{counts[n]}" for n in evens]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    bound = _max_n(args)
    if bound is not None and args.n > bound:
        raise CapacityError(f"order {args.n} exceeds bound {bound}")
    graphs = connected_cubic_graphs(args.n)
    if args.filter == "permutation":
        graphs = [g for g in graphs if is_cubic_permutation_graph_fast(g)]
    elif args.filter == "non-permutation":
        graphs = [g for g in graphs if not is_cubic_permutation_graph_fast(g)]
    if args.json:
        payload = {
            "schema": JSON_SCHEMA,
            "n": args.n,
            "filter": args.filter,
            "graphs": [encode_graph6(g) for g in graphs],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    else:
        _emit("".join(encode_graph6(g) + "\n" for g in graphs), args.output)
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.max_order == CATALOG_ORDER_CEILING and not args.derive:
        catalog = load_forbidden_catalog()
    else:
        catalog = derive_forbidden_catalog(args.max_order)
    if args.json:
        payload = {
            "schema": JSON_SCHEMA,
            "max_order_searched": catalog.max_order_searched,
            "graphs": [encode_graph6(g) for g in catalog.graphs],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    else:
        _emit(format_catalog(catalog), args.output)
    return 0


def _cmd_blowup(args: argparse.Namespace) -> int:
    spec = parse_blowup_spec(_read_graph_text(args.spec))
    if args.base:
        _, found = minimal_base(apply_blowup(spec))
        _emit(format_blowup_spec(found), args.output)
        return 0
    _emit(_format_graph(apply_blowup(spec), args.format), args.output)
    return 0


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    report = crosscheck(
        args.n_max,
        census_max=args.census_max,
        materialize_max=args.materialize_max,
        use_catalog=args.use_catalog,
    )
    if args.json:
        _emit(crosscheck_to_json(report), args.output)
    else:
        _emit(format_crosscheck_text(report), args.output)
    return 0 if report.ok else 1


def _cmd_report(args: argparse.Namespace) -> int:
    written = write_report(
        args.out_dir,
        n_max=args.n_max,
        census_max=args.census_max,
        materialize_max=args.materialize_max,
        gallery_n=args.gallery_n,
        use_catalog=args.use_catalog,
        figures=not args.no_figures,
    )
    _emit("".join(str(p) + "\n" for p in written), args.output)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=["graph6", "edgelist", "dot", "json"],
        default="graph6",
        help="graph output format (default graph6)",
    )


def _add_common(p: argparse.ArgumentParser, max_n: bool = False) -> None:
    p.add_argument("--output", metavar="FILE", help="write output to FILE instead of stdout")
    if max_n:
        p.add_argument("--max-n", type=int, metavar="N", help=f"capacity bound (default ${ENV_MAX_N})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permgraph",
        description="Recognize, construct, and count 3-regular inversion graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a graph is a permutation graph")
    p.add_argument("graph", nargs="?", help="graph file, or - for stdin (default)")
    p.add_argument("--certificate", action="store_true", help="print a realizer on yes")
    p.add_argument("--json", action="store_true")
    _add_common(p, max_n=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("from-perm", help="emit the inversion graph of a permutation")
    p.add_argument("permutation", help='one-line permutation, e.g. "[2,1]" or "2 1"')
    _add_format_flag(p)
    _add_common(p)
    p.set_defaults(func=_cmd_from_perm)

    p = sub.add_parser("boxcar", help="build the boxcar graph of a car sequence")
    p.add_argument("sequence", help='comma-separated cars from {2,3}, e.g. "2,3"; "-" for none')
    p.add_argument("--certificate", action="store_true", help="print a realizer instead of the graph")
    p.add_argument("--json", action="store_true")
    _add_format_flag(p)
    _add_common(p)
    p.set_defaults(func=_cmd_boxcar)

    p = sub.add_parser("classify", help="classify a connected 3-regular graph")
    p.add_argument("graph", nargs="?", help="graph file, or - for stdin (default)")
    p.add_argument("--json", action="store_true")
    _add_common(p, max_n=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("family", help="build the r-regular family member of index n")
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--certificate", action="store_true", help="print a realizer instead of the graph")
    p.add_argument("--json", action="store_true")
    _add_format_flag(p)
    _add_common(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("enumerate", help="count or list cubic permutation graphs by order")
    p.add_argument("orders", metavar="RANGE", help='order or range, e.g. "22" or "4..30"')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the count table (default)")
    mode.add_argument("--list", action="store_true", help="print graph6 lines")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("census", help="all connected cubic graphs of an order, optionally filtered")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=["permutation", "non-permutation"])
    p.add_argument("--json", action="store_true")
    _add_common(p, max_n=True)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("catalog", help="the forbidden-subgraph catalog")
    p.add_argument("max_order", type=int, nargs="?", default=CATALOG_ORDER_CEILING)
    p.add_argument("--derive", action="store_true", help="recompute instead of loading shipped data")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("blowup", help="apply a blow-up specification")
    p.add_argument("spec", nargs="?", help="spec file, or - for stdin (default)")
    p.add_argument("--base", action="store_true", help="print the minimal base spec instead")
    _add_format_flag(p)
    _add_common(p)
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("crosscheck", help="compare every counting route")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--census-max", type=int, default=MAX_CENSUS_ORDER)
    p.add_argument("--materialize-max", type=int, default=40)
    p.add_argument("--use-catalog", action="store_true",
                   help="filter the census with the forbidden-subgraph recognizer")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("report", help="write count tables, crosscheck verdicts, and figures")
    p.add_argument("out_dir", metavar="DIR")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--census-max", type=int, default=MAX_CENSUS_ORDER)
    p.add_argument("--materialize-max", type=int, default=40)
    p.add_argument("--gallery-n", type=int, default=26)
    p.add_argument("--use-catalog", action="store_true")
    p.add_argument("--no-figures", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PermgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
