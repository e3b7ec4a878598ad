"""Command-line surface binding all the modules together.

Subcommands: verify, analyze, search, longest, construct, distance, corpus,
export-dot, classical.  Exit codes: 0 success / valid / feasible / found;
1 invalid tour, infeasible board, exhausted or budget-bound search,
unreachable target; 2 usage or input errors.  `--format json` emits one
sorted-key JSON object per run so output is byte-stable; found tours go to
stdout as tour files, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .board import Board, format_vertex, parse_board_text, parse_vertex
from .construct import closed_tour_on_hypercube
from .feasibility import (
    FeasibilityVerdict,
    classical_closed_tour_condition,
    closed_tour_necessary,
    color_counts,
    open_tour_necessary,
)
from .search import SearchConfig, SearchStatus, find_tour, longest_path
from .tour import (
    Tour,
    TourKind,
    TourParseError,
    VerificationReport,
    classify_move,
    parse_tour,
    verify,
)


def _add_board_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--sides", help="comma-separated side lengths, e.g. 3,3,3,3,3")
    group.add_argument("--board", help="board description file")
    parser.add_argument(
        "--hole",
        action="append",
        default=[],
        help="removed cell c1,c2,...,ck (repeatable; only with --sides)",
    )


def _board_from_args(args: argparse.Namespace) -> Board:
    if args.board:
        if args.hole:
            raise ValueError("--hole only combines with --sides")
        return parse_board_text(Path(args.board).read_text(encoding="utf-8"))
    sides = parse_vertex(args.sides)
    holes = [parse_vertex(h) for h in args.hole]
    return Board(sides, holes)


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _report_payload(kind: TourKind, report: VerificationReport) -> dict:
    return {
        "kind": kind.value,
        "valid": report.valid,
        "entry_count": report.entry_count,
        "link_count": report.link_count,
        "endpoint_squared_distance": report.endpoint_squared_distance,
        "move_taxicab_counts": {str(k): v for k, v in report.move_taxicab_counts.items()},
        "violations": [
            {"index": v.index, "description": v.description} for v in report.violations
        ],
    }


def _report_lines(kind: TourKind, report: VerificationReport) -> list[str]:
    links = f"{report.link_count}+1" if kind is TourKind.CLOSED else str(report.link_count)
    lines = [
        f"kind: {kind.value}",
        f"vertices: {report.entry_count}",
        f"links: {links}",
        f"valid: {'yes' if report.valid else 'no'}",
        f"endpoint squared distance: {report.endpoint_squared_distance}",
        "taxicab counts: "
        + (
            " ".join(f"{k}:{v}" for k, v in report.move_taxicab_counts.items())
            or "(none)"
        ),
    ]
    for v in report.violations:
        lines.append(f"violation at index {v.index}: {v.description}")
    return lines


def _verdict_payload(verdict: FeasibilityVerdict) -> dict:
    return {
        "feasible": verdict.feasible,
        "reasons": list(verdict.reasons),
        "notes": list(verdict.notes),
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    board, kind, vertices = parse_tour(Path(args.file).read_text(encoding="utf-8"))
    report = verify(board, vertices, kind, all_violations=args.all_violations)
    _emit(args, _report_payload(kind, report), _report_lines(kind, report))
    return 0 if report.valid else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    board = _board_from_args(args)
    dark, light = color_counts(board)
    connected = board.is_connected() if board.vertex_count else False
    verdicts: dict[str, FeasibilityVerdict] = {}
    if args.target in ("open", "both"):
        verdicts["open"] = open_tour_necessary(board)
    if args.target in ("closed", "both"):
        verdicts["closed"] = closed_tour_necessary(board)
    histogram = board.degree_histogram()
    payload = {
        "sides": list(board.sides),
        "holes": sorted(list(h) for h in board.holes),
        "vertex_count": board.vertex_count,
        "dark": dark,
        "light": light,
        "connected": connected,
        "degree_histogram": {str(k): v for k, v in histogram.items()},
    }
    lines = [
        f"board: {' x '.join(str(s) for s in board.sides)}"
        + (f" minus {len(board.holes)} hole(s)" if board.holes else ""),
        f"vertices: {board.vertex_count}",
        f"dark/light: {dark}/{light}",
        f"connected: {'yes' if connected else 'no'}",
        "degree histogram: " + (" ".join(f"{k}:{v}" for k, v in histogram.items()) or "(empty)"),
    ]
    for name, verdict in verdicts.items():
        payload[name] = _verdict_payload(verdict)
        lines.append(f"{name} tour: {'feasible' if verdict.feasible else 'infeasible'}")
        lines.extend(f"  - {reason}" for reason in verdict.reasons)
        lines.extend(f"  note: {note}" for note in verdict.notes)
    _emit(args, payload, lines)
    return 0 if any(v.feasible for v in verdicts.values()) else 1


def _cmd_search(args: argparse.Namespace) -> int:
    board = _board_from_args(args)
    config = SearchConfig(
        target=TourKind(args.target),
        start=parse_vertex(args.start) if args.start else None,
        use_warnsdorff=not args.no_warnsdorff,
        node_budget=args.budget,
        deterministic=not args.non_deterministic,
        parallel_width=args.parallel,
    )
    outcome = find_tour(board, config)
    print(
        f"status: {outcome.status.value}  nodes: {outcome.nodes_expanded}  "
        f"max depth: {outcome.max_depth_reached}",
        file=sys.stderr,
    )
    tour_text = outcome.tour.serialized() if outcome.tour else None
    if args.format == "json":
        payload = {
            "status": outcome.status.value,
            "nodes_expanded": outcome.nodes_expanded,
            "max_depth_reached": outcome.max_depth_reached,
            "tour": tour_text,
        }
        print(json.dumps(payload, sort_keys=True))
    elif tour_text is not None:
        sys.stdout.write(tour_text)
    return 0 if outcome.status is SearchStatus.FOUND else 1


def _cmd_longest(args: argparse.Namespace) -> int:
    board = _board_from_args(args)
    outcome = longest_path(board, node_budget=args.budget)
    print(
        f"status: {outcome.status.value}  nodes: {outcome.nodes_expanded}  "
        f"best: {outcome.max_depth_reached} vertices",
        file=sys.stderr,
    )
    tour_text = outcome.tour.serialized()
    if args.format == "json":
        payload = {
            "status": outcome.status.value,
            "nodes_expanded": outcome.nodes_expanded,
            "max_depth_reached": outcome.max_depth_reached,
            "tour": tour_text,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(tour_text)
    return 0 if outcome.status is SearchStatus.FOUND else 1


def _cmd_construct(args: argparse.Namespace) -> int:
    masks = [parse_vertex(m) for m in args.mask] or None
    tour = closed_tour_on_hypercube(args.k, masks)
    if args.verify_only:
        report = tour.report()
        _emit(args, _report_payload(tour.kind, report), _report_lines(tour.kind, report))
        return 0 if report.valid else 1
    if args.format == "json":
        payload = {
            "k": args.k,
            "vertex_count": len(tour.vertices),
            "tour": tour.serialized(),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(tour.serialized())
    return 0


def _cmd_distance(args: argparse.Namespace) -> int:
    board = _board_from_args(args)
    src = parse_vertex(args.src)
    dst = parse_vertex(args.dst)
    jumps = board.knight_distance(src, dst)
    payload = {"from": list(src), "to": list(dst), "jumps": jumps}
    text = "unreachable" if jumps is None else str(jumps)
    _emit(args, payload, [f"jumps: {text}"])
    return 0 if jumps is not None else 1


def _cmd_corpus(args: argparse.Namespace) -> int:
    if args.corpus_command == "list":
        entries = [corpus.get(i) for i in corpus.ids()]
        payload = {
            "entries": [
                {
                    "id": e.id,
                    "kind": e.kind.value,
                    "vertex_entries": len(e.vertices),
                    "provenance": e.provenance,
                }
                for e in entries
            ]
        }
        lines = [
            f"{e.id}: {e.kind.value}, {len(e.vertices)} entries -- {e.provenance}"
            for e in entries
        ]
        _emit(args, payload, lines)
        return 0
    if args.corpus_command == "show":
        sys.stdout.write(corpus.raw_text(args.id))
        return 0
    # check-all
    results = {}
    for entry_id in corpus.ids():
        entry = corpus.get(entry_id)
        report = entry.tour().report()
        results[entry_id] = report
    payload = {
        "results": {i: _report_payload(corpus.get(i).kind, r) for i, r in results.items()}
    }
    lines = []
    for entry_id, report in results.items():
        status = "ok" if report.valid else "INVALID"
        lines.append(f"{entry_id}: {status} ({report.entry_count} entries)")
        for v in report.violations:
            lines.append(f"  violation at index {v.index}: {v.description}")
    _emit(args, payload, lines)
    return 0 if all(r.valid for r in results.values()) else 1


def _cmd_export_dot(args: argparse.Namespace) -> int:
    if args.tour:
        board, kind, vertices = parse_tour(Path(args.tour).read_text(encoding="utf-8"))
        tour = Tour(board, kind, tuple(vertices))
        print(_tour_dot(tour))
    else:
        board = _board_from_args(args)
        print(_board_dot(board))
    return 0


def _edge_label(a, b) -> str:
    try:
        return classify_move(a, b).value
    except ValueError:
        return "illegal"


def _board_dot(board: Board) -> str:
    lines = ["graph {"]
    for v in board.vertices():
        lines.append(f'  "{format_vertex(v)}";')
    for v in board.vertices():
        for w in board.neighbors(v):
            if v < w:
                lines.append(
                    f'  "{format_vertex(v)}" -- "{format_vertex(w)}" '
                    f'[label="{_edge_label(v, w)}"];'
                )
    lines.append("}")
    return "\n".join(lines)


def _tour_dot(tour: Tour) -> str:
    lines = ["digraph {"]
    sequence = list(tour.vertices)
    if tour.kind is TourKind.CLOSED:
        sequence.append(tour.vertices[0])
    for i in range(len(sequence) - 1):
        a, b = sequence[i], sequence[i + 1]
        lines.append(
            f'  "{format_vertex(a)}" -> "{format_vertex(b)}" '
            f'[label="{i + 1} {_edge_label(a, b)}"];'
        )
    lines.append("}")
    return "\n".join(lines)


def _cmd_classical(args: argparse.Namespace) -> int:
    sides = parse_vertex(args.sides)
    result = classical_closed_tour_condition(sides)
    _emit(
        args,
        {"sides": sorted(sides), "closed_tour": result},
        [f"classical closed tour: {'yes' if result else 'no'}"],
    )
    return 0 if result else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eknight",
        description="Euclidean knight's tours on k-dimensional boards",
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a tour file against its claimed kind")
    p.add_argument("file")
    p.add_argument("--all-violations", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("analyze", help="board statistics and feasibility verdicts")
    _add_board_arguments(p)
    p.add_argument("--target", choices=["open", "closed", "both"], default="both")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("search", help="search for an open or closed tour")
    _add_board_arguments(p)
    p.add_argument("--target", choices=["open", "closed"], default="open")
    p.add_argument("--start", help="start vertex c1,c2,...,ck")
    p.add_argument("--no-warnsdorff", action="store_true")
    p.add_argument("--budget", type=int, help="node expansion budget")
    p.add_argument("--non-deterministic", action="store_true")
    p.add_argument("--parallel", type=int, default=0, metavar="N")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("longest", help="exact maximum-length path")
    _add_board_arguments(p)
    p.add_argument("--budget", type=int, help="node expansion budget")
    p.set_defaults(handler=_cmd_longest)

    p = sub.add_parser("construct", help="closed tour on the k-cube, k >= 6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--mask",
        action="append",
        default=[],
        help="four axes to flip, i,j,l,m (repeat once per doubling level)",
    )
    p.add_argument("--verify-only", action="store_true")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("distance", help="minimum number of knight jumps")
    _add_board_arguments(p)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.set_defaults(handler=_cmd_distance)

    p = sub.add_parser("corpus", help="reference tour data")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    corpus_sub.add_parser("list")
    show = corpus_sub.add_parser("show")
    show.add_argument("id")
    corpus_sub.add_parser("check-all")
    p.set_defaults(handler=_cmd_corpus)

    p = sub.add_parser("export-dot", help="DOT graph of a board or a tour file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sides")
    group.add_argument("--board")
    group.add_argument("--tour")
    p.add_argument("--hole", action="append", default=[])
    p.set_defaults(handler=_cmd_export_dot)

    p = sub.add_parser("classical", help="closed-tour criterion for the classical knight")
    p.add_argument("--sides", required=True, help="comma-separated side lengths")
    p.set_defaults(handler=_cmd_classical)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except TourParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
