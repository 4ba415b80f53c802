"""Command-line front end: verification suites and artifact export.

``orposets verify`` runs one suite (or all of them) and emits a JSON
report; the exit code is 0 exactly when no check failed.  ``orposets
export`` writes graph and poset artifacts that are byte-stable across
runs: payloads are canonically ordered and carry no timestamps.
Relative output paths resolve under the directory named by the
ORPOSETS_OUT environment variable (default: the working directory).
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .atlas import (
    automorphisms,
    build_Ag,
    build_OPg,
    build_Sg,
    conjugacy_quotient,
    contraction_table,
    enumerate_stable_graphs,
    stratification_report,
)
from .graphs import genus, graph_to_json
from .posets import build_A, build_OP, build_OPbar, poset_to_dot, poset_to_json
from .suites import SUITE_IDS, run_suite

OUT_ENV = "ORPOSETS_OUT"
POSET_KINDS = ("A", "OP", "OPbar", "Ag", "Sg", "OPg", "classes")
PER_GRAPH_KINDS = ("A", "OP", "OPbar")


def _base_dir() -> Path:
    return Path(os.environ.get(OUT_ENV, "."))


def _resolve(path_str: str) -> Path:
    path = Path(path_str)
    return path if path.is_absolute() else _base_dir() / path


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _graph_payload(atlas, i: int) -> dict:
    payload = json.loads(graph_to_json(atlas[i]))
    payload["index"] = i
    payload["genus"] = genus(atlas[i])
    payload["automorphism_count"] = len(automorphisms(atlas[i]))
    return payload


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_verify(args, parser) -> int:
    if args.genus < 2:
        parser.error("--genus must be at least 2")
    try:
        report = run_suite(
            args.suite,
            args.genus,
            b=args.b,
            budget_secs=args.budget_secs,
            threads=args.threads,
        )
    except ValueError as exc:
        parser.error(str(exc))
    text = report.to_json() + "\n"
    if args.out:
        _write(_resolve(args.out), text)
    else:
        sys.stdout.write(text)
    return 0 if not report.failures else 1


def export_graphs(args, outdir: Path) -> None:
    """One JSON file per atlas member."""
    atlas = enumerate_stable_graphs(args.genus)
    for i in range(len(atlas)):
        _write(outdir / f"graph_{i:02d}.json", _dump(_graph_payload(atlas, i)))


def _pick_b(args, parser) -> int:
    if args.b == "both":
        parser.error("this export needs --b 0 or --b 1")
    return int(args.b)


def export_poset(args, parser) -> int:
    atlas = enumerate_stable_graphs(args.genus)
    kind = args.poset
    if kind in PER_GRAPH_KINDS:
        if args.graph is None:
            parser.error(f"--poset {kind} needs --graph (an atlas index)")
        if not 0 <= args.graph < len(atlas):
            parser.error(
                f"--graph must be in 0..{len(atlas) - 1} at genus {args.genus}"
            )
        b = _pick_b(args, parser)
        graph = atlas[args.graph]
        if kind == "A":
            poset = build_A(graph, b)
        elif kind == "OP":
            poset = build_OP(graph, b)
        else:
            poset = build_OPbar(graph, b)[0]
    elif kind == "Sg":
        poset = build_Sg(atlas)
    elif kind == "Ag":
        poset = build_Ag(atlas, _pick_b(args, parser))
    elif kind == "OPg":
        poset = build_OPg(atlas, _pick_b(args, parser))
    else:  # classes: the genus-level class poset up to automorphism
        b = _pick_b(args, parser)
        poset = conjugacy_quotient(build_OPg(atlas, b), atlas)[0]
    text = poset_to_dot(poset) if args.fmt == "dot" else poset_to_json(poset) + "\n"
    if args.out:
        _write(_resolve(args.out), text)
    else:
        sys.stdout.write(text)
    return 0


def export_atlas(args, parser, outdir: Path) -> None:
    """The full bundle: graphs, arrows, genus-level posets, strata tables."""
    b = _pick_b(args, parser)
    atlas = enumerate_stable_graphs(args.genus)
    table = contraction_table(atlas)
    bundle = outdir / f"atlas_g{args.genus}_b{b}"
    for i in range(len(atlas)):
        _write(
            bundle / "graphs" / f"graph_{i:02d}.json",
            _dump(_graph_payload(atlas, i)),
        )
    arrows = [
        {
            "source": i,
            "target": j,
            "contracted_sets": [sorted(c.contracted) for c in table[(i, j)]],
        }
        for (i, j) in sorted(table)
        if table[(i, j)]
    ]
    _write(bundle / "contractions.json", _dump(arrows))
    sg = build_Sg(atlas)
    _write(bundle / "posets" / "sg.json", poset_to_json(sg) + "\n")
    _write(bundle / "posets" / "sg.dot", poset_to_dot(sg))
    opg = build_OPg(atlas, b)
    _write(bundle / "posets" / "op_classes.json", poset_to_json(opg) + "\n")
    classes = conjugacy_quotient(opg, atlas)[0]
    _write(bundle / "posets" / "op_classes_quotient.dot", poset_to_dot(classes))
    _write(bundle / "strata.json", _dump(stratification_report(atlas, b)))
    summary = {
        "genus": args.genus,
        "b": b,
        "graph_count": len(atlas),
        "arrow_count": sum(len(v) for v in table.values()),
        "automorphism_orders": [len(automorphisms(g)) for g in atlas],
    }
    _write(bundle / "summary.json", _dump(summary))


def cmd_export(args, parser) -> int:
    if args.genus < 2:
        parser.error("--genus must be at least 2")
    outdir = _resolve(args.out) if args.out else _base_dir()
    if args.kind == "graphs":
        if args.fmt == "dot":
            parser.error("graphs export only as JSON")
        export_graphs(args, outdir)
        return 0
    if args.kind == "poset":
        return export_poset(args, parser)
    export_atlas(args, parser, outdir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orposets",
        description="verify orientation-poset theorems and export the atlas",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ver = sub.add_parser(
        "verify", help="run a verification suite and emit a JSON report"
    )
    ver.add_argument(
        "--suite",
        default="all",
        choices=SUITE_IDS + ("all",),
        help="suite id (default: all)",
    )
    ver.add_argument("--genus", type=int, default=2)
    ver.add_argument("--b", default="both", choices=("0", "1", "both"))
    ver.add_argument(
        "--budget-secs",
        type=float,
        default=0.0,
        help="time budget; past genus 2 a budget of 1800 or more runs the "
        "full sweep, anything less samples with a fixed seed",
    )
    ver.add_argument(
        "--threads", type=int, default=1, help="parallel sub-suites for 'all'"
    )
    ver.add_argument("--out", help="report file (default: stdout)")

    exp = sub.add_parser(
        "export", help="write byte-stable graph and poset artifacts"
    )
    exp.add_argument("kind", choices=("graphs", "poset", "atlas"))
    exp.add_argument("--genus", type=int, default=2)
    exp.add_argument("--b", default="both", choices=("0", "1", "both"))
    exp.add_argument(
        "--graph", type=int, help="atlas index for the per-graph posets"
    )
    exp.add_argument(
        "--poset",
        default="OPbar",
        choices=POSET_KINDS,
        help="which poset to export (default: OPbar)",
    )
    exp.add_argument(
        "--format", dest="fmt", default="json", choices=("json", "dot")
    )
    exp.add_argument("--out", help="output file or directory")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, parser)
        return cmd_export(args, parser)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
