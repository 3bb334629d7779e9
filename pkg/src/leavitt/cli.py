"""Command-line front end.

Exit codes: 0 success, 1 property failure, 2 parse error, 3 semantic error
(unknown vertex, unsupported graph), 4 resource cutoff.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    GraphDocumentError,
    GraphMismatchError,
    LatticeTooLargeError,
    OracleDimensionError,
    OracleUnsupportedError,
    UnknownVertexError,
)
from .graphdoc import document_from_graph, load_graph
from .hereditary import enumerate_hs_sets
from .ideals import GradedIdeal, analyze, bar_closure, ideal_from_generators, is_regular, perp, quotient_graph
from .oracle import build_oracle
from .verify import VerifyConfig, oracle_checks_for_graph, run_verification


def _format_set(values) -> str:
    return "{" + ", ".join(sorted(values)) + "}"


def _split_generators(raw: str):
    return [v for v in (part.strip() for part in raw.split(",")) if v]


def cmd_analyze(args) -> int:
    graph = load_graph(args.graph)
    generators = graph.vertex_subset(_split_generators(args.generators))
    report = analyze(graph, generators)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
        return 0
    q = report.quotient
    print(f"graph: {len(graph.vertices)} vertices, {len(graph.edges)} edges")
    print(f"ideal vertex set: {_format_set(report.ideal.vertices)}")
    print(f"backward closure: {_format_set(report.bar_closure)}")
    print(f"perp vertex set: {_format_set(report.perp_set)}")
    print(f"double perp vertex set: {_format_set(report.double_perp_set)}")
    print(f"regular: {'yes' if report.is_regular else 'no'}")
    print(
        f"quotient graph: {len(q.vertices)} vertices, {len(q.edges)} edges "
        f"({_format_set(q.vertices)})"
    )
    print(f"quotient satisfies condition (L): {'yes' if report.quotient_condition_l else 'no'}")
    print(f"exit-free cycle sets match: {'yes' if report.pc_bijection_holds else 'no'}")
    return 0


def cmd_lattice(args) -> int:
    graph = load_graph(args.graph)
    sets = enumerate_hs_sets(graph)
    flagged = [(h, is_regular(GradedIdeal(h))) for h in sets]
    if args.dot:
        print(_lattice_dot(flagged), end="")
        return 0
    if args.json:
        print(
            json.dumps(
                [
                    {"vertices": list(h.sorted_vertices()), "is_regular": reg}
                    for h, reg in flagged
                ],
                indent=2,
            )
        )
        return 0
    print(f"{len(flagged)} hereditary saturated sets")
    for h, reg in flagged:
        print(f"{_format_set(h.vertices)} regular={'yes' if reg else 'no'}")
    return 0


def _lattice_dot(flagged) -> str:
    lines = ["digraph hs_lattice {", "  rankdir=BT;"]
    for i, (h, reg) in enumerate(flagged):
        label = _format_set(h.vertices)
        if reg:
            label += "\\nregular"
        lines.append(f'  n{i} [label="{label}"];')
    for i, (a, _ra) in enumerate(flagged):
        for j, (b, _rb) in enumerate(flagged):
            if not a.vertices < b.vertices:
                continue
            covers = not any(
                a.vertices < c.vertices < b.vertices for c, _rc in flagged
            )
            if covers:
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_quotient(args) -> int:
    graph = load_graph(args.graph)
    generators = graph.vertex_subset(_split_generators(args.generators))
    ideal = ideal_from_generators(graph, generators)
    quotient = quotient_graph(graph, ideal.h)
    print(json.dumps(document_from_graph(quotient), indent=2))
    return 0


def cmd_perp(args) -> int:
    graph = load_graph(args.graph)
    generators = graph.vertex_subset(_split_generators(args.generators))
    ideal = ideal_from_generators(graph, generators)
    perp_ideal = perp(ideal)
    payload = {
        "ideal": sorted(ideal.vertices),
        "bar_closure": sorted(bar_closure(ideal)),
        "perp": sorted(perp_ideal.vertices),
    }
    if args.json:
        print(json.dumps(payload, indent=2))
        return 0
    print(f"ideal vertex set: {_format_set(ideal.vertices)}")
    print(f"backward closure: {_format_set(bar_closure(ideal))}")
    print(f"perp vertex set: {_format_set(perp_ideal.vertices)}")
    return 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        trials=args.trials,
        seed=args.seed,
        prime=args.prime,
    )
    matrix = run_verification(cfg)
    if args.json:
        print(json.dumps(matrix.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(matrix.render_text(), end="")
    return 0 if matrix.passed else 1


def cmd_oracle_check(args) -> int:
    graph = load_graph(args.graph)
    algebra = build_oracle(graph, args.prime)
    counts, failures, _ = oracle_checks_for_graph(graph, args.prime, algebra=algebra)
    print(f"oracle dimension: {algebra.dimension} over GF({args.prime})")
    failed_rows = {f.row for f in failures}
    for row, trials in counts.items():
        status = "FAIL" if row in failed_rows else "ok"
        print(f"{row:<38} {trials:>6} checks  {status}")
    for f in failures:
        print(f"failure[{f.row}]: {f.detail}")
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leavitt",
        description=(
            "Graded and regular ideals of Leavitt path algebras of finite graphs, "
            "computed on vertex sets and cross-checked by a matrix oracle."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="regularity report for the ideal generated by vertices")
    p.add_argument("--graph", required=True, help="graph document (JSON)")
    p.add_argument("--generators", default="", help="comma-separated vertex ids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lattice", help="all hereditary saturated sets with regularity flags")
    p.add_argument("--graph", required=True)
    p.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("quotient", help="quotient graph by the ideal generated by vertices")
    p.add_argument("--graph", required=True)
    p.add_argument("--generators", default="")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("perp", help="annihilator ideal of the ideal generated by vertices")
    p.add_argument("--graph", required=True)
    p.add_argument("--generators", default="")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_perp)

    p = sub.add_parser("verify", help="run the property suites and print the pass/fail matrix")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", help="matrix-oracle agreement for one acyclic graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--prime", type=int, default=2)
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphDocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnknownVertexError, GraphMismatchError, OracleUnsupportedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (LatticeTooLargeError, OracleDimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
