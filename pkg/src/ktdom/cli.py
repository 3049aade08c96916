"""``ktdom`` command line: solve, verify, scan, gen, enumerate.

Exit codes: 0 success / no proved-claim violation, 2 proved-claim violation,
1 usage, input or resource errors (reported as one JSON object on stderr).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import harness
from .domination import enumerate_minimal_ktds
from .errors import KtdomError, ParameterError
from .families import generate, parse_family
from .graph import Graph, VertexSet
from .hypergraph import open_neighborhood_hypergraph
from .io import serialize_graph, serialize_hypergraph


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved for violations
        raise ParameterError(message)


def parse_int_range(text: str) -> list[int]:
    """``3``, ``2..12`` or ``1,2,5``."""
    text = text.strip()
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    try:
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
            values = list(range(lo, hi + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise ParameterError(f"bad integer range {text!r}") from None
    if not values:
        raise ParameterError(f"empty range {text!r}")
    return values


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="append ledger rows to this file")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=float, dest="time_budget", help="per-instance time budget in seconds")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes ledgers run-dependent)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ktdom", description="Exact k-tuple total domination workbench.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute gamma, Gamma, tau or upsilon")
    p.add_argument("--family")
    p.add_argument("--input", dest="input_path")
    p.add_argument("--k", default="1")
    p.add_argument("--quantity", choices=harness.QUANTITIES, default="Gamma")
    p.add_argument("--as-hypergraph", choices=("ong",))
    p.add_argument("--method", choices=("auto", "scan", "bnb"), default="auto")
    _common(p)

    p = sub.add_parser("verify", help="check registered claims over parameter grids")
    p.add_argument("--claims", help="comma separated claim ids (default: all)")
    p.add_argument("--n", dest="n_range")
    p.add_argument("--k")
    p.add_argument("--corpus", help="connected:<=N, all:<=N or random:n,count,seed")
    p.add_argument("--family", action="append", dest="families")
    p.add_argument("--max-n", type=int, default=16, help="largest product order in product grids")
    _common(p)

    p = sub.add_parser("scan", help="conjecture scan over Cartesian products, or the K_n x K_m question")
    p.add_argument("--family", action="append", dest="families")
    p.add_argument("--k", default="2..3")
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--question", action="store_true", help="scan cross products of complete graphs instead")
    p.add_argument("--n", dest="n_range", help="largest n, m for --question")
    _common(p)

    p = sub.add_parser("gen", help="write a family instance as a graph or hypergraph file")
    p.add_argument("--family", required=True)
    p.add_argument("--as-hypergraph", choices=("ong",))

    p = sub.add_parser("enumerate", help="list every minimal kTDS in ascending mask order")
    p.add_argument("--family")
    p.add_argument("--input", dest="input_path")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--limit", type=int)
    return parser


def _config(args: argparse.Namespace) -> harness.RunConfig:
    opts = vars(args).copy()
    opts["ks"] = parse_int_range(opts.pop("k")) if opts.get("k") else None
    if opts.get("n_range"):
        opts["n_range"] = parse_int_range(opts["n_range"])
    if opts.get("claims"):
        opts["claims"] = [c.strip() for c in opts["claims"].split(",") if c.strip()]
    fields = harness.RunConfig.__dataclass_fields__
    return harness.RunConfig(**{key: value for key, value in opts.items() if key in fields})


def _cmd_solve(args) -> int:
    cfg = _config(args)
    harness.emit(harness.run_solve(cfg), cfg)
    return 0


def _cmd_verify(args) -> int:
    cfg = _config(args)
    result = harness.run_verify(cfg)
    harness.emit(result.rows, cfg, to_stream=False)
    print(result.summary())
    return result.exit_code


def _cmd_scan(args) -> int:
    cfg = _config(args)
    result = harness.run_scan(cfg)
    harness.emit(result.rows, cfg, to_stream=False)
    print(result.summary())
    return result.exit_code


def _cmd_gen(args) -> int:
    g = generate(parse_family(args.family))
    if args.as_hypergraph:
        sys.stdout.write(serialize_hypergraph(open_neighborhood_hypergraph(g)))
    else:
        sys.stdout.write(serialize_graph(g))
    return 0


def _cmd_enumerate(args) -> int:
    cfg = harness.RunConfig(command="enumerate", family=args.family, input_path=args.input_path)
    _, target = harness.load_target(cfg)
    if not isinstance(target, Graph):
        raise ParameterError("enumerate needs a graph")
    for count, s in enumerate(enumerate_minimal_ktds(target, args.k)):
        if args.limit is not None and count >= args.limit:
            break
        print(harness.format_witness(s) if isinstance(s, VertexSet) else s)
    return 0


COMMANDS = {
    "solve": _cmd_solve, "verify": _cmd_verify, "scan": _cmd_scan, "gen": _cmd_gen, "enumerate": _cmd_enumerate,
}


def _fail(kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return 1


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except KtdomError as exc:
        return _fail(exc.code, str(exc))
    except OSError as exc:
        return _fail("io", str(exc))


if __name__ == "__main__":
    sys.exit(main())
