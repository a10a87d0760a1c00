"""Command-line entry point: ``thinbrace <command> ...``.

Exit codes: 0 success, 1 check violation, 2 usage/input error, 3 resource cap.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from thinbrace.config import settings
from thinbrace.errors import DomainError, InputError, ResourceError

logger = logging.getLogger("thinbrace")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


# --- Helpers ---


def _load(source: str):
    """A graph file (BGF or JSON), or the name of a built-in graph."""
    from thinbrace.formats import load_graph
    from thinbrace.generate.named import named_graph

    if Path(source).exists():
        return load_graph(source)
    try:
        return named_graph(source)
    except InputError:
        raise InputError(f"{source!r} is neither a readable file nor a built-in graph") from None


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def _model_json(model) -> str:
    return model.model_dump_json(indent=2) + "\n"


# --- Commands ---


def cmd_analyze(args) -> int:
    from thinbrace.formats.dot import to_dot
    from thinbrace.verify.analysis import analyze

    g = _load(args.graph)
    report = analyze(g, timing=not args.no_timing)
    if args.dot:
        _emit(to_dot(g, dashed=[tuple(e) for e in report.nonthin_edges]))
    elif args.json:
        _emit(_model_json(report))
    else:
        lines = [
            f"graph        {report.name or '-'}",
            f"n, m, n3     {report.n}, {report.m}, {report.n3}",
            f"brace        {report.brace} {report.brace_methods}",
            f"planar       {report.planar} (faces {report.face_count}, euler {report.euler})",
            f"m = 2n - 4   {report.edge_bound_equality}",
            f"thin edges   {report.thin_count} of {report.m}",
        ]
        lines += [f"{key:<12} {flag.status.value}" for key, flag in report.flags.items()]
        _emit("\n".join(lines) + "\n")
    if report.failed_flags():
        return EXIT_VIOLATION
    if report.errors:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_gen(args) -> int:
    from thinbrace.formats import serialize_bgf, serialize_json_graph
    from thinbrace.generate.named import named_graph

    g = named_graph(args.name)
    text = serialize_json_graph(g) + "\n" if args.format == "json" else serialize_bgf(g)
    _emit(text, args.out)
    return EXIT_OK


def cmd_cuts(args) -> int:
    from thinbrace.cuts.verdict import list_cuts
    from thinbrace.formats.dot import to_dot
    from thinbrace.verify.models import CutEntry, CutReport

    g = _load(args.graph)
    verdicts = list(list_cuts(g, args.kind, args.nontrivial_only))
    if args.dot:
        _emit("".join(to_dot(g, shore=v.shore, title=f"cut{i}") for i, v in enumerate(verdicts)))
    else:
        report = CutReport(
            name=g.name,
            kind=args.kind,
            nontrivial_only=args.nontrivial_only,
            cuts=[
                CutEntry(
                    shore=list(v.shore.members(g)),
                    complement=list(v.shore.complement.members(g)),
                    tight=v.tight,
                    separating=v.separating,
                    trivial=v.trivial,
                    method_agreement=v.method_agreement,
                )
                for v in verdicts
            ],
        )
        _emit(_model_json(report))
    if not all(v.method_agreement and v.consistent for v in verdicts):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_thin(args) -> int:
    from thinbrace.brace.structure import s1_nonthin_subgraph
    from thinbrace.brace.thin import classify_edges_thin, edge_thinness
    from thinbrace.verify.models import ThinEntry, ThinReport

    g = _load(args.graph)
    if args.edge:
        u, v = args.edge
        if u.isdigit() and v.isdigit() and not {u, v} & set(g.vertices):
            # BGF indices: i in part A, j in part B
            i, j = int(u), int(v)
            if i >= g.a or j >= g.b:
                raise InputError(f"Edge indices {i} {j} out of range")
            u, v = g.part_a[i], g.part_b[j]
        results = [edge_thinness(g, (u, v))]
        s1 = None
    else:
        results = classify_edges_thin(g)
        s1 = s1_nonthin_subgraph(g, results)
    report = ThinReport(
        name=g.name,
        edges=[
            ThinEntry(
                edge=list(t.edge),
                thin=t.thin,
                s_cuts=[list(s.members(g)) for s in t.s_cuts],
                g_minus_e_matching_covered=t.g_minus_e_matching_covered,
                identity_holds=t.identity_holds,
                anomaly=t.anomaly,
            )
            for t in results
        ],
        thin_count=sum(1 for t in results if t.thin),
        nonthin_count=sum(1 for t in results if not t.thin),
        s1_nonthin_edges=[list(e) for e in s1.edges] if s1 else [],
        s1_forest=s1.is_forest if s1 else True,
    )
    _emit(_model_json(report))
    if not all(t.identity_holds for t in results) or not report.s1_forest:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_sweep(args) -> int:
    from thinbrace.verify.census import run_census

    report = run_census(
        args.max_part,
        args.max_part,
        checks=args.checks,
        jobs=args.jobs,
        planar_only=args.planar_only,
        timing=not args.no_timing,
    )
    _emit(_model_json(report), args.out)
    if not report.ok:
        return EXIT_VIOLATION
    if report.capped:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_witness(args) -> int:
    from thinbrace.cuts.witness import find_separating_not_tight

    found = find_separating_not_tight(args.max_n)
    if found is None:
        _emit(json.dumps({"witness": None}, indent=2) + "\n")
        return EXIT_OK
    g, shore = found
    payload = {
        "witness": {
            "name": g.name,
            "vertices": list(g.vertices),
            "edges": [list(e) for e in g.edge_labels()],
            "shore": list(shore.members(g)),
        }
    }
    _emit(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_schema(args) -> int:
    from thinbrace.verify.models import AnalysisReport, CensusReport, CutReport, ThinReport

    schema = {
        model.__name__: model.model_json_schema()
        for model in (AnalysisReport, CensusReport, CutReport, ThinReport)
    }
    _emit(json.dumps(schema, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


# --- Parser ---


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thinbrace",
        description="Matching covered graphs, braces, thin edges and planar-brace checks.",
    )
    parser.add_argument("--log-level", default=None, help="Override THINBRACE_LOG_LEVEL")
    parser.add_argument("--enumeration-cap", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Full report for one graph")
    p.add_argument("graph", help="BGF/JSON file or built-in graph name")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="Write a built-in graph")
    p.add_argument("name")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("bgf", "json"), default="bgf")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cuts", help="List tight or separating cuts")
    p.add_argument("graph")
    p.add_argument("--kind", choices=("tight", "separating"), required=True)
    p.add_argument("--nontrivial-only", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("thin", help="Classify edges of a brace as thin or nonthin")
    p.add_argument("graph")
    p.add_argument("--edge", nargs=2, metavar=("I", "J"), default=None)
    p.set_defaults(func=cmd_thin)

    p = sub.add_parser("sweep", help="Census of braces up to a part size")
    p.add_argument("--max-part", type=int, required=True)
    p.add_argument("--planar-only", action="store_true")
    p.add_argument("--checks", default="all")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("witness", help="Find a separating cut that is not tight")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("schema", help="Print the JSON schema of the reports")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_schema)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    if args.enumeration_cap is not None:
        settings.enumeration_cap = args.enumeration_cap

    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
