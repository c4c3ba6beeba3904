"""Command-line front end.

Exit codes: 0 success (whatever the verdict), 1 parse error, 2 precondition
violation, 3 false verdict under ``--fail-on-false``, 4 graph too large.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import report
from .dot import export_dot
from .errors import GraphPrimError, ParseError, PreconditionError, TooLarge
from .fixtures import ExmClassSpec, gen_fixture
from .graph import parse_graph, render_graph
from .ideals import DEFAULT_MAX_VERTICES
from .primtop import PrimSubset
from .tails import maximal_tails

EXIT_PARSE, EXIT_PRECONDITION, EXIT_FALSE, EXIT_TOO_LARGE = 1, 2, 3, 4

# subcommand -> (payload builder, key of the boolean verdict or None)
_ANALYSES = {
    "tails": (report.tails_payload, None),
    "ideals": (report.ideals_payload, None),
    "prim": (report.prim_payload, None),
    "t1": (report.t1_payload, "t1"),
    "clopen": (report.clopen_payload, None),
    "decompose": (report.decompose_payload, "purely_infinite"),
    "af-quotient": (report.af_payload, None),
    "pi-af": (report.pi_af_payload, None),
    "cn": (report.cn_payload, None),
    "report": (report.full_report, None),
}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="graph file, or - for stdin")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--fail-on-false", action="store_true")
    common.add_argument("--format", choices=("json", "dot"), default="json")

    parser = argparse.ArgumentParser(
        prog="graphprim",
        description="Primitive ideal space analyses for finite graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _ANALYSES:
        sub.add_parser(name, parents=[common])
    closure = sub.add_parser("closure", parents=[common])
    closure.add_argument("--set", required=True, dest="subset", help="Prim subset as JSON")
    sub.add_parser("gen-fixture", parents=[common], help="read a fixture spec (JSON) and emit the graph")
    sub.add_parser("export-dot", parents=[common])
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(payload):
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def _verdict(payload, key):
    if key is not None:
        return bool(payload[key])
    if "clopen" in payload and isinstance(payload["clopen"], list):
        return all(e["clopen"] for e in payload["clopen"])
    return True


def _dispatch(args):
    if args.command == "gen-fixture":
        try:
            data = json.loads(_read(args.input))
        except json.JSONDecodeError as exc:
            raise ParseError(f"fixture spec is not valid JSON: {exc}") from None
        g = gen_fixture(ExmClassSpec.from_json(data), args.max_vertices)
        tails = maximal_tails(g, args.max_vertices)
        if args.format == "dot":
            sys.stdout.write(export_dot(g, tails))
        else:
            _emit({"graph": render_graph(g), "tails": [M.to_json() for M in tails]})
        return True

    g = parse_graph(_read(args.input))

    if args.command == "export-dot":
        tails = maximal_tails(g, args.max_vertices) if args.format == "dot" else None
        sys.stdout.write(export_dot(g, tails))
        return True

    if args.command == "closure":
        try:
            data = json.loads(args.subset)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--set is not valid JSON: {exc}") from None
        payload = report.closure_payload(g, PrimSubset.from_json(data), args.max_vertices)
        key = "closed"
    else:
        build, key = _ANALYSES[args.command]
        payload = build(g, args.max_vertices)

    if args.format == "dot":
        sys.stdout.write(export_dot(g, maximal_tails(g, args.max_vertices)))
    else:
        _emit(payload)
    return _verdict(payload, key)


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        ok = _dispatch(args)
    except TooLarge as exc:
        return _fail(exc, EXIT_TOO_LARGE)
    except (ParseError, OSError) as exc:
        return _fail(exc, EXIT_PARSE)
    except (PreconditionError, GraphPrimError) as exc:
        return _fail(exc, EXIT_PRECONDITION)
    if args.fail_on_false and not ok:
        return EXIT_FALSE
    return 0


def _fail(exc, code):
    err = {"error": type(exc).__name__, "message": str(exc)}
    sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
