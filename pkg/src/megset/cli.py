"""Command-line front end.

Graph files are plain text: comment lines start with '#', the first
data line is "n m", and the next m lines are "u v" with 0-indexed
endpoints.  Every subcommand accepts '-' to read the graph from stdin.
Machine output is a single JSON document on stdout; --quiet prints just
the headline value for shell pipelines.

Exit codes: 0 ok/detected, 1 undetected or failed verification,
2 input error, 3 disconnected graph, 4 size or search cap exceeded,
5 unrecognized graph class.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import classes, randgraphs, structure
from .errors import (
    DisconnectedGraphError,
    GraphFormatError,
    SizeCapExceededError,
    UnrecognizedClassError,
)
from .graph import INFINITE, Graph, build_graph, is_connected
from .monitoring import is_meg_set, simulate_failure, witness_report
from .solver import DEFAULT_VERTEX_CAP, all_minimum_megs, forced_vertices, minimum_meg

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_CAP = 4
EXIT_UNRECOGNIZED = 5


def parse_graph_text(text: str) -> Graph:
    """Parse the "n m" / edge-list format, '#' comments ignored."""
    rows = []
    for line in text.splitlines():
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        rows.append(body.split())
    if not rows:
        raise GraphFormatError("empty graph file")
    header = rows[0]
    if len(header) != 2:
        raise GraphFormatError('header must be "n m"')
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {exc}") from None
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, file has {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphFormatError(f"bad edge line: {' '.join(row)}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {exc}") from None
    return build_graph(n, edges, strict=True)


def format_graph_text(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for (u, v) in g.edges)
    return "\n".join(lines) + "\n"


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph_text(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise GraphFormatError(f"bad vertex list: {text!r}") from None


def _parse_edge(text: str) -> tuple[int, int]:
    toks = text.replace("-", ",").split(",")
    if len(toks) != 2:
        raise GraphFormatError(f"bad edge: {text!r}")
    try:
        return int(toks[0]), int(toks[1])
    except ValueError:
        raise GraphFormatError(f"bad edge: {text!r}") from None


def _input_summary(g: Graph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "fes": g.m - g.n + 1,
        "leaf_count": len(structure.leaf_set(g)),
    }


def _document(command: str, g: Graph, result: dict, started: float) -> dict:
    return {
        "command": command,
        "input": _input_summary(g),
        "result": result,
        "wall_time_s": round(time.perf_counter() - started, 6),
    }


def _emit(doc: dict, quiet: bool, headline) -> None:
    if quiet:
        print(headline)
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))


def _require_connected_input(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")


def _json_distance(d) -> int | None:
    return None if d == INFINITE else int(d)


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.file)
    _require_connected_input(g)
    probe_set = _parse_vertex_list(args.set)
    for v in probe_set:
        if not (0 <= v < g.n):
            raise GraphFormatError(f"vertex {v} outside [0,{g.n})")
    report = witness_report(g, probe_set, max_witnesses_per_edge=args.max_witnesses)
    ok = not report.uncovered
    result = {
        "set": sorted(set(probe_set)),
        "is_meg": ok,
        "uncovered": [list(e) for e in report.uncovered],
        "witnesses": [
            {"edge": list(e), "pairs": [list(p) for p in pairs]}
            for e, pairs in report.witnesses.items()
        ],
    }
    _emit(_document("verify", g, result, started), args.quiet, str(ok).lower())
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_solve(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.file)
    _require_connected_input(g)
    res = minimum_meg(g, cap=args.cap)
    result = {
        "meg_number": res.meg_number,
        "optimal_set": sorted(res.optimal_set),
        "forced": sorted(res.forced),
        "nodes_explored": res.nodes_explored,
    }
    if args.all:
        result["all_optimal"] = [
            sorted(s) for s in all_minimum_megs(g, limit=args.limit, cap=args.cap)
        ]
    _emit(_document("solve", g, result, started), args.quiet, res.meg_number)
    return EXIT_OK


def cmd_construct(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.file)
    _require_connected_input(g)
    if args.method == "fes":
        built = structure.fes_meg_construction(g)
        result = {
            "method": "fes",
            "set": sorted(built.meg_set),
            "size": len(built.meg_set),
            "fes": built.k,
            "leaf_count": built.leaf_count,
            "budget": built.budget,
            "verified": True,
        }
    else:
        cls = classes.recognize_class(g)
        if not is_meg_set(g, cls.witness):
            raise RuntimeError("class construction failed verification")
        result = {
            "method": "class",
            "theorem": cls.theorem,
            "meg_number": cls.meg_number,
            "set": sorted(cls.witness),
            "size": len(cls.witness),
            "verified": True,
        }
    _emit(_document("construct", g, result, started), args.quiet, result["size"])
    return EXIT_OK


def cmd_simulate(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.file)
    _require_connected_input(g)
    probe_set = _parse_vertex_list(args.set)
    edge = _parse_edge(args.fail_edge)
    report = simulate_failure(g, probe_set, edge)
    result = {
        "failed_edge": list(report.failed_edge),
        "detected": report.detected,
        "observations": [
            {
                "pair": [obs.x, obs.y],
                "old_distance": _json_distance(obs.old_distance),
                "new_distance": _json_distance(obs.new_distance),
            }
            for obs in report.observations
        ],
    }
    _emit(_document("simulate", g, result, started), args.quiet, len(report.observations))
    return EXIT_OK if report.detected else EXIT_NEGATIVE


def cmd_generate(args) -> int:
    family = args.family
    params = args.params
    need = {
        "path": 1, "cycle": 1, "complete": 1, "star": 1, "hypercube": 1,
        "grid": 2, "tree": 1, "unicyclic": 2, "connected": 2, "tightness": 2,
    }
    if family != "multipartite" and len(params) != need[family]:
        raise GraphFormatError(
            f"family {family} takes {need[family]} parameter(s), got {len(params)}"
        )
    if family == "multipartite" and len(params) < 2:
        raise GraphFormatError("multipartite needs at least 2 part sizes")
    try:
        if family == "path":
            g = classes.gen_path(params[0])
        elif family == "cycle":
            g = classes.gen_cycle(params[0])
        elif family == "complete":
            g = classes.gen_complete(params[0])
        elif family == "star":
            g = classes.gen_star(params[0])
        elif family == "multipartite":
            g = classes.gen_multipartite(list(params))
        elif family == "hypercube":
            g = classes.gen_hypercube(params[0])
        elif family == "grid":
            g = classes.gen_grid(params[0], params[1])
        elif family == "tree":
            g = randgraphs.random_tree(params[0], args.seed)
        elif family == "unicyclic":
            g = randgraphs.random_unicyclic(params[0], params[1], args.seed)
        elif family == "connected":
            g = randgraphs.random_connected(params[0], params[1], args.seed)
        else:
            g = structure.gen_tightness_family(params[0], params[1])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    random_families = {"tree", "unicyclic", "connected"}
    comment = f"megset generate {family} " + " ".join(str(p) for p in params)
    if family in random_families:
        comment += f" seed={args.seed}"
    sys.stdout.write(format_graph_text(g, comment))
    return EXIT_OK


def cmd_invariants(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.file)
    _require_connected_input(g)
    fes = structure.feedback_edge_number(g)
    leaves = len(structure.leaf_set(g))
    if fes == 0:
        bound = leaves
    elif fes == 1:
        bound = leaves + 4
    else:
        bound = 9 * fes + leaves - 8
    result = {
        "forced_count": len(forced_vertices(g)) if g.m else 0,
        "upper_bound": bound,
        "meg_number": None,
    }
    if g.n <= args.cap and g.m >= 1:
        result["meg_number"] = minimum_meg(g, cap=args.cap).meg_number
    headline = result["meg_number"] if result["meg_number"] is not None else bound
    _emit(_document("invariants", g, result, started), args.quiet, headline)
    return EXIT_OK


# ---------------------------------------------------------------------------
# JSON schemas for the ResultDocument of each subcommand (generate emits a
# graph file, not JSON).  Field names are stable.

_VERTEX_ARRAY = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_EDGE_ARRAY = {
    "type": "array",
    "items": {"type": "integer", "minimum": 0},
    "minItems": 2,
    "maxItems": 2,
}


def _document_schema(result: dict) -> dict:
    return {
        "type": "object",
        "required": ["command", "input", "result", "wall_time_s"],
        "additionalProperties": False,
        "properties": {
            "command": {"type": "string"},
            "input": {
                "type": "object",
                "required": ["n", "m", "fes", "leaf_count"],
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "m": {"type": "integer", "minimum": 0},
                    "fes": {"type": "integer"},
                    "leaf_count": {"type": "integer", "minimum": 0},
                },
            },
            "result": result,
            "wall_time_s": {"type": "number", "minimum": 0},
        },
    }


RESULT_SCHEMAS = {
    "verify": _document_schema({
        "type": "object",
        "required": ["set", "is_meg", "uncovered", "witnesses"],
        "additionalProperties": False,
        "properties": {
            "set": _VERTEX_ARRAY,
            "is_meg": {"type": "boolean"},
            "uncovered": {"type": "array", "items": _EDGE_ARRAY},
            "witnesses": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["edge", "pairs"],
                    "additionalProperties": False,
                    "properties": {
                        "edge": _EDGE_ARRAY,
                        "pairs": {"type": "array", "items": _EDGE_ARRAY},
                    },
                },
            },
        },
    }),
    "solve": _document_schema({
        "type": "object",
        "required": ["meg_number", "optimal_set", "forced", "nodes_explored"],
        "additionalProperties": False,
        "properties": {
            "meg_number": {"type": "integer", "minimum": 0},
            "optimal_set": _VERTEX_ARRAY,
            "forced": _VERTEX_ARRAY,
            "nodes_explored": {"type": "integer", "minimum": 0},
            "all_optimal": {"type": "array", "items": _VERTEX_ARRAY},
        },
    }),
    "construct": _document_schema({
        "type": "object",
        "required": ["method", "set", "size", "verified"],
        "additionalProperties": False,
        "properties": {
            "method": {"enum": ["fes", "class"]},
            "set": _VERTEX_ARRAY,
            "size": {"type": "integer", "minimum": 0},
            "verified": {"type": "boolean"},
            "theorem": {"type": "string"},
            "meg_number": {"type": "integer", "minimum": 0},
            "fes": {"type": "integer", "minimum": 0},
            "leaf_count": {"type": "integer", "minimum": 0},
            "budget": {"type": "integer", "minimum": 0},
        },
    }),
    "simulate": _document_schema({
        "type": "object",
        "required": ["failed_edge", "detected", "observations"],
        "additionalProperties": False,
        "properties": {
            "failed_edge": _EDGE_ARRAY,
            "detected": {"type": "boolean"},
            "observations": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["pair", "old_distance", "new_distance"],
                    "additionalProperties": False,
                    "properties": {
                        "pair": _EDGE_ARRAY,
                        "old_distance": {"type": ["integer", "null"]},
                        "new_distance": {"type": ["integer", "null"]},
                    },
                },
            },
        },
    }),
    "invariants": _document_schema({
        "type": "object",
        "required": ["forced_count", "upper_bound", "meg_number"],
        "additionalProperties": False,
        "properties": {
            "forced_count": {"type": "integer", "minimum": 0},
            "upper_bound": {"type": "integer", "minimum": 0},
            "meg_number": {"type": ["integer", "null"]},
        },
    }),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="megset",
        description="Monitoring edge-geodetic sets: verify, solve, construct, simulate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check whether a vertex set is an MEG-set")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--set", required=True, help="comma-separated vertex list")
    p.add_argument("--max-witnesses", type=int, default=3)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum MEG-set")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--all", action="store_true", help="enumerate all optimal sets")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("construct", help="constructive MEG-set (class formula or fes bound)")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--method", choices=("fes", "class"), required=True)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("simulate", help="simulate one edge failure against a probe set")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--set", required=True, help="comma-separated vertex list")
    p.add_argument("--fail-edge", required=True, help="edge as u,v or u-v")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("generate", help="emit a graph file for a named family")
    p.add_argument(
        "family",
        choices=(
            "path", "cycle", "complete", "star", "multipartite",
            "hypercube", "grid", "tree", "unicyclic", "connected", "tightness",
        ),
    )
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("invariants", help="size parameters, bounds, and exact MEG when small")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_invariants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except SizeCapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UnrecognizedClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNRECOGNIZED
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
