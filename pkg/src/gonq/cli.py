"""Command-line front end.

One verb per concept:

    gen       build a board graph, emit JSON or DOT
    alpha     independence number, optionally enumerating all maximum sets
    gonality  gonality by formula, exact search, or upper bound
    rank      divisor rank with a failing-debt certificate
    reduce    q-reduce a divisor
    burn      run the fire spread, emit the burn trace
    fire      fire a vertex set once
    classes   enumerate positive-rank divisor classes of a degree
    verify    check the independent-set / divisor-class bijection

Graphs come from --m/--n/--toroidal or from --graph FILE (a file produced
by ``gen``).  Divisors are inline ("3,0,0,0") or @file.json holding
{"values": [...]}.  Exit codes: 0 success, 1 verification or rank failure,
2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chipfiring import Divisor, dhar_burn, fire_set, q_reduce
from .enumeration import CapExceededError, DEFAULT_THREADS
from .gonality import (
    enumerate_positive_rank_classes,
    gonality_exact_small,
    gonality_upper_bound,
    queen_gonality_formula,
    toroidal_gonality_formula,
    verify_correspondence,
)
from .graphs import Graph, queen_graph, toroidal_queen_graph
from .independence import (
    DEFAULT_MAX_MIS_VERTICES,
    max_independent_sets,
    queen_alpha_formula,
    toroidal_alpha_formula,
)
from .ranks import rank as divisor_rank


def _add_board_args(p: argparse.ArgumentParser, with_graph: bool = True) -> None:
    p.add_argument("--m", type=int, help="number of columns")
    p.add_argument("--n", type=int, help="number of rows")
    p.add_argument("--toroidal", action="store_true", help="wrap diagonals around the board")
    if with_graph:
        p.add_argument("--graph", metavar="FILE", help="graph JSON file (as emitted by gen)")


def _add_cap_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--max-compositions",
        type=int,
        default=None,
        help="enumeration cap per degree level (default 5e6; env CHIPFIRE_MAX_COMPOSITIONS)",
    )
    p.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="worker threads")
    p.add_argument(
        "--max-vertices",
        type=int,
        default=DEFAULT_MAX_MIS_VERTICES,
        help="vertex cap for independent-set enumeration",
    )


def _load_graph(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Graph:
    if getattr(args, "graph", None):
        with open(args.graph, encoding="utf-8") as fh:
            return Graph.from_json(fh.read())
    if args.m is None or args.n is None:
        parser.error("--m and --n (or --graph) are required")
    build = toroidal_queen_graph if args.toroidal else queen_graph
    return build(args.m, args.n)


def _parse_divisor(spec: str, n: int) -> Divisor:
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as fh:
            d = Divisor.from_json_dict(json.load(fh))
    else:
        d = Divisor(int(tok) for tok in spec.split(","))
    if len(d) != n:
        raise ValueError(f"divisor has {len(d)} entries but the graph has {n} vertices")
    return d


def _parse_vertex_set(spec: str) -> list[int]:
    spec = spec.strip()
    return [int(tok) for tok in spec.split(",")] if spec else []


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data))
        return
    if fmt == "text":
        for key, value in data.items():
            if isinstance(value, list) and value and isinstance(value[0], list):
                print(f"{key}:")
                for row in value:
                    print("  " + " ".join(str(x) for x in row))
            else:
                print(f"{key}: {value}")
        return
    raise ValueError(f"unsupported format {fmt!r} for this report")


def _cmd_gen(args, parser) -> int:
    g = _load_graph(args, parser)
    if args.format == "dot":
        print(g.to_dot())
    else:
        print(json.dumps(g.to_json_dict()))
    return 0


def _cmd_alpha(args, parser) -> int:
    g = _load_graph(args, parser)
    if args.enumerate or g.grid is None:
        alpha, sets = max_independent_sets(g, max_vertices=args.max_vertices)
        data = {"alpha": alpha}
        if args.enumerate:
            data["count"] = len(sets)
            data["sets"] = [list(s.sorted_vertices()) for s in sets]
    else:
        formula = toroidal_alpha_formula if g.grid.toroidal else queen_alpha_formula
        data = {"alpha": formula(g.grid.m, g.grid.n)}
    _emit(data, args.format)
    return 0


def _cmd_gonality(args, parser) -> int:
    g = _load_graph(args, parser)
    if args.mode == "formula":
        if g.grid is None:
            parser.error("--mode formula needs a board graph")
        formula = toroidal_gonality_formula if g.grid.toroidal else queen_gonality_formula
        from .gonality import GonalityReport

        report = GonalityReport(formula(g.grid.m, g.grid.n), None, "formula")
    elif args.mode == "bound":
        report = gonality_upper_bound(g, max_vertices=args.max_vertices)
    else:
        report = gonality_exact_small(
            g,
            max_compositions=args.max_compositions,
            threads=args.threads,
            max_vertices=args.max_vertices,
        )
    _emit(report.to_json_dict(), args.format)
    return 0


def _cmd_rank(args, parser) -> int:
    g = _load_graph(args, parser)
    d = _parse_divisor(args.divisor, g.vertex_count)
    result = divisor_rank(
        g, d, args.max_k, max_compositions=args.max_compositions, threads=args.threads
    )
    _emit(result.to_json_dict(), args.format)
    return 0 if result.rank >= args.max_k else 1


def _cmd_reduce(args, parser) -> int:
    g = _load_graph(args, parser)
    d = _parse_divisor(args.divisor, g.vertex_count)
    reduced, script = q_reduce(g, d, args.q)
    _emit({"values": reduced.values.tolist(), "script": script.fires.tolist()}, args.format)
    return 0


def _cmd_burn(args, parser) -> int:
    g = _load_graph(args, parser)
    d = _parse_divisor(args.divisor, g.vertex_count)
    report = dhar_burn(g, d, args.q)
    if args.format == "text":
        print(report.trace())
    else:
        _emit(
            {"burned": list(report.burned_order), "unburned": sorted(report.unburned)},
            args.format,
        )
    return 0


def _cmd_fire(args, parser) -> int:
    g = _load_graph(args, parser)
    d = _parse_divisor(args.divisor, g.vertex_count)
    fired = fire_set(g, d, _parse_vertex_set(args.set))
    _emit({"values": fired.values.tolist()}, args.format)
    return 0


def _cmd_classes(args, parser) -> int:
    g = _load_graph(args, parser)
    classes = enumerate_positive_rank_classes(
        g, args.degree, max_compositions=args.max_compositions, threads=args.threads
    )
    _emit(
        {
            "degree": args.degree,
            "count": len(classes),
            "classes": [d.values.tolist() for d in classes],
        },
        args.format,
    )
    return 0


def _cmd_verify(args, parser) -> int:
    if args.graph:
        g = _load_graph(args, parser)
        if g.grid is None:
            parser.error("verify needs a board graph")
        toroidal = g.grid.toroidal
    else:
        if args.theorem is None:
            parser.error("--theorem 1|2 (or --graph) is required")
        if args.m is None or args.n is None:
            parser.error("--m and --n are required")
        toroidal = args.theorem == 2
        g = (toroidal_queen_graph if toroidal else queen_graph)(args.m, args.n)
    grid = g.grid
    alpha_formula = toroidal_alpha_formula if toroidal else queen_alpha_formula
    gon_formula = toroidal_gonality_formula if toroidal else queen_gonality_formula
    alpha = alpha_formula(grid.m, grid.n)
    gonality = gon_formula(grid.m, grid.n)
    report = verify_correspondence(
        g,
        full=not args.injective_only,
        max_compositions=args.max_compositions,
        threads=args.threads,
        max_vertices=args.max_vertices,
    )
    matched = report.matched and gonality == report.degree == grid.m * grid.n - alpha
    data = {
        "theorem": 2 if toroidal else 1,
        "m": grid.m,
        "n": grid.n,
        "toroidal": toroidal,
        "alpha": alpha,
        "gonality": gonality,
        "degree": report.degree,
        "mis_count": len(report.mis_list),
        "class_count": len(report.class_reps),
        "matched": matched,
    }
    _emit(data, args.format)
    return 0 if matched else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gonq", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a board graph")
    _add_board_args(p, with_graph=False)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("alpha", help="independence number")
    _add_board_args(p)
    _add_cap_args(p)
    p.add_argument("--enumerate", action="store_true", help="list all maximum sets")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("gonality", help="graph gonality")
    _add_board_args(p)
    _add_cap_args(p)
    p.add_argument("--mode", choices=["formula", "exact", "bound"], default="formula")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_gonality)

    p = sub.add_parser("rank", help="divisor rank (exit 1 when below --max-k)")
    _add_board_args(p)
    _add_cap_args(p)
    p.add_argument("--divisor", required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("reduce", help="q-reduce a divisor")
    _add_board_args(p)
    p.add_argument("--divisor", required=True)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("burn", help="Dhar fire spread trace")
    _add_board_args(p)
    p.add_argument("--divisor", required=True)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_burn)

    p = sub.add_parser("fire", help="fire a vertex set once")
    _add_board_args(p)
    p.add_argument("--divisor", required=True)
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_fire)

    p = sub.add_parser("classes", help="positive-rank classes of a degree")
    _add_board_args(p)
    _add_cap_args(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("verify", help="theorem verifier (exit 0 iff matched)")
    _add_board_args(p)
    _add_cap_args(p)
    p.add_argument("--theorem", type=int, choices=[1, 2], help="1 = plane board, 2 = toroidal")
    p.add_argument(
        "--injective-only",
        action="store_true",
        help="skip class enumeration; check distinctness and positive rank only",
    )
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
